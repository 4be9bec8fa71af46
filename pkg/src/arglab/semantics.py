"""Labellings and the legality conditions of admissible and complete semantics."""
from __future__ import annotations

import enum
from typing import Iterable, Mapping

from .errors import PartialLabelling, UnknownArgument
from .framework import ArgumentationFramework


class Label(enum.Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    @property
    def code(self) -> int:
        return _CODE[self]

    @classmethod
    def from_code(cls, code: int) -> "Label":
        return _LABELS[code]

    def __lt__(self, other):
        if not isinstance(other, Label):
            return NotImplemented
        return self.code < other.code

    def __str__(self):
        return self.value


_LABELS = (Label.IN, Label.OUT, Label.UNDEC)
_CODE = {lab: i for i, lab in enumerate(_LABELS)}

IN, OUT, UNDEC = _LABELS


class Labelling(Mapping[str, Label]):
    """Assignment of labels to argument names.

    A plain value: it is not tied to a framework, and totality is checked by
    the predicates that take one.
    """

    __slots__ = ("_data", "_hash")

    def __init__(self, assignment: Mapping[str, Label] | Iterable[tuple[str, Label]] = ()):
        data = dict(assignment)
        for k, v in data.items():
            if not isinstance(v, Label):
                data[k] = Label(v)
        self._data = data
        self._hash = None

    @classmethod
    def from_sets(cls, in_=(), out=(), undec=()) -> "Labelling":
        pairs = [(a, IN) for a in in_] + [(a, OUT) for a in out] + [(a, UNDEC) for a in undec]
        lab = cls(pairs)
        if len(lab) != len(pairs):
            raise ValueError("an argument appears in more than one label set")
        return lab

    @classmethod
    def all_undec(cls, af: ArgumentationFramework) -> "Labelling":
        return cls((a, UNDEC) for a in af.arguments)

    @classmethod
    def from_codes(cls, arguments, codes) -> "Labelling":
        return cls((a, _LABELS[int(c)]) for a, c in zip(arguments, codes))

    def __getitem__(self, arg):
        return self._data[arg]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __eq__(self, other):
        if isinstance(other, Labelling):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self):
        return f"Labelling({self.format()})"

    def with_label(self, arg: str, label: Label) -> "Labelling":
        data = dict(self._data)
        data[arg] = label
        return Labelling(data)

    def label_set(self, label: Label) -> tuple[str, ...]:
        return tuple(sorted(a for a, v in self._data.items() if v is label))

    @property
    def in_set(self):
        return self.label_set(IN)

    @property
    def out_set(self):
        return self.label_set(OUT)

    @property
    def undec_set(self):
        return self.label_set(UNDEC)

    def codes(self, af: ArgumentationFramework) -> tuple[int, ...]:
        return tuple(self._data[a].code for a in af.arguments)

    def format(self) -> str:
        """Three-set notation, e.g. ``{{B,F},{E},{A,C,D}}``."""
        return "{" + ",".join("{" + ",".join(self.label_set(lab)) + "}" for lab in _LABELS) + "}"

    def to_json(self) -> dict:
        return {lab.value: list(self.label_set(lab)) for lab in _LABELS}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Labelling":
        return cls.from_sets(obj.get("in", ()), obj.get("out", ()), obj.get("undec", ()))


def check_total(af: ArgumentationFramework, lab: Mapping[str, Label]) -> None:
    keys = set(lab)
    expected = set(af.arguments)
    if keys != expected:
        raise PartialLabelling(sorted(expected - keys), sorted(keys - expected))


def _legal(af, lab, x):
    label = lab[x]
    attackers = af.attackers(x)
    if label is IN:
        return all(lab[b] is OUT for b in attackers)
    if label is OUT:
        return any(lab[b] is IN for b in attackers)
    return not any(lab[b] is IN for b in attackers) and any(lab[b] is not OUT for b in attackers)


def is_legal(af: ArgumentationFramework, lab: Mapping[str, Label], x: str) -> bool:
    """Whether ``x`` is legally labelled with its current label.

    in needs every attacker out, out needs an attacker in, undec needs no
    attacker in and at least one attacker not out (so an unattacked
    argument is never legally undec).
    """
    if x not in af:
        raise UnknownArgument(x)
    check_total(af, lab)
    return _legal(af, lab, x)


def is_admissible(af: ArgumentationFramework, lab: Mapping[str, Label]) -> bool:
    check_total(af, lab)
    return all(_legal(af, lab, a) for a in af.arguments if lab[a] is not UNDEC)


def is_complete(af: ArgumentationFramework, lab: Mapping[str, Label]) -> bool:
    check_total(af, lab)
    return all(_legal(af, lab, a) for a in af.arguments)
