"""Statement-level labels derived from the sceptical evaluation of arguments.

A claim map says which statement each argument concludes, which statements
are contraries of each other, and which statements the system can talk
about at all (its vocabulary). Claims files use the same fact syntax as
framework files::

    conc(smith,s1).
    contrary(s1,ns1).
    statement(s3).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .enumeration import justification_map
from .errors import (
    ConflictingContrary,
    DuplicateConclusion,
    OffVocabulary,
    ParseError,
    UnknownArgument,
)
from .framework import ArgumentationFramework, iter_facts
from .semantics import IN, UNDEC


class Scheme(enum.Enum):
    BIVALENT = "bivalent"
    DOUBT_TOLERANT = "doubt_tolerant"
    IGNORANCE_AWARE = "ignorance_aware"
    ENGAGEMENT_AWARE = "engagement_aware"

    @property
    def cli_name(self):
        return self.value.replace("_", "-")

    @classmethod
    def parse(cls, name) -> "Scheme":
        if isinstance(name, Scheme):
            return name
        return cls(name.replace("-", "_"))


class StatementLabel(enum.Enum):
    YES = "yes"
    NO = "no"
    FAL = "fal"
    NI = "ni"
    UNK = "unk"
    OFF = "off"
    NI_OPEN = "ni_open"
    NI_COMMITTED = "ni_committed"

    def __str__(self):
        return self.value


ALPHABETS = {
    Scheme.BIVALENT: frozenset({StatementLabel.YES, StatementLabel.NO}),
    Scheme.DOUBT_TOLERANT: frozenset({StatementLabel.YES, StatementLabel.FAL, StatementLabel.NI}),
    Scheme.IGNORANCE_AWARE: frozenset(
        {StatementLabel.YES, StatementLabel.FAL, StatementLabel.UNK, StatementLabel.NI}
    ),
    Scheme.ENGAGEMENT_AWARE: frozenset(
        {
            StatementLabel.YES,
            StatementLabel.FAL,
            StatementLabel.OFF,
            StatementLabel.UNK,
            StatementLabel.NI_OPEN,
            StatementLabel.NI_COMMITTED,
        }
    ),
}


@dataclass(frozen=True)
class ClaimMap:
    """Conclusions, contrary pairs and vocabulary.

    ``contrary`` is stored symmetrically: ``contrary[s] == t`` iff
    ``contrary[t] == s``. The vocabulary always covers every statement
    mentioned in ``conclusion`` or ``contrary``.
    """

    conclusion: Mapping[str, str] = field(default_factory=dict)
    contrary: Mapping[str, str] = field(default_factory=dict)
    vocabulary: frozenset[str] = frozenset()

    def __post_init__(self):
        for s, t in self.contrary.items():
            if self.contrary.get(t) != s:
                raise ConflictingContrary(s)
        vocab = frozenset(self.vocabulary) | frozenset(self.conclusion.values()) | frozenset(self.contrary)
        object.__setattr__(self, "conclusion", dict(self.conclusion))
        object.__setattr__(self, "contrary", dict(self.contrary))
        object.__setattr__(self, "vocabulary", vocab)

    @classmethod
    def build(cls, conclusion=(), contraries: Iterable[tuple[str, str]] = (), statements=()):
        pairs: dict[str, str] = {}
        for s, t in contraries:
            _pair(pairs, s, t)
        return cls(dict(conclusion), pairs, frozenset(statements))

    def contrary_of(self, s: str) -> str | None:
        return self.contrary.get(s)

    def contrary_pairs(self) -> set[frozenset[str]]:
        return {frozenset((s, t)) for s, t in self.contrary.items()}

    def to_text(self) -> str:
        lines = [f"conc({a},{s})." for a, s in sorted(self.conclusion.items())]
        lines += [f"contrary({s},{t})." for s, t in sorted(tuple(sorted(p)) for p in self.contrary_pairs())]
        lines += [f"statement({s})." for s in sorted(self.vocabulary)]
        return "\n".join(lines) + ("\n" if lines else "")


def _pair(pairs, s, t, line=None, source=None):
    if s == t:
        raise ConflictingContrary(s, line, source)
    for a, b in ((s, t), (t, s)):
        if pairs.get(a, b) != b:
            raise ConflictingContrary(a, line, source)
    pairs[s] = t
    pairs[t] = s


def parse_claims(source: str, *, name=None) -> ClaimMap:
    conclusion: dict[str, str] = {}
    pairs: dict[str, str] = {}
    statements: set[str] = set()
    for line_no, pred, terms in iter_facts(source, name):
        if pred == "conc" and len(terms) == 2:
            arg, s = terms
            if arg in conclusion:
                raise DuplicateConclusion(arg, line_no, name)
            conclusion[arg] = s
        elif pred == "contrary" and len(terms) == 2:
            _pair(pairs, terms[0], terms[1], line_no, name)
        elif pred == "statement" and len(terms) == 1:
            statements.add(terms[0])
        else:
            raise ParseError(f"unexpected fact {pred}/{len(terms)}", line_no, name)
    return ClaimMap(conclusion, pairs, frozenset(statements))


def load_claims(path) -> ClaimMap:
    path = Path(path)
    return parse_claims(path.read_text(encoding="utf-8"), name=str(path))


def check_claims(cm: ClaimMap, af: ArgumentationFramework) -> None:
    for arg in sorted(cm.conclusion):
        if arg not in af:
            raise UnknownArgument(arg)


def _supporters(cm, af, s):
    if s is None:
        return frozenset()
    return frozenset(a for a, c in cm.conclusion.items() if c == s and a in af)


def pro_con(cm: ClaimMap, af: ArgumentationFramework, s: str) -> tuple[frozenset[str], frozenset[str]]:
    """Arguments concluding ``s`` and arguments concluding its contrary."""
    if s not in cm.vocabulary:
        raise OffVocabulary(s)
    return _supporters(cm, af, s), _supporters(cm, af, cm.contrary_of(s))


_SCEPTICAL = frozenset({IN})
_SETTLED_UNDEC = frozenset({UNDEC})


@dataclass(frozen=True)
class ConflictDiagnostic:
    """Both a statement and its contrary have a sceptically accepted argument."""

    statement: str
    contrary: str
    pro: tuple[str, ...]
    con: tuple[str, ...]

    def to_json(self):
        return {"statement": self.statement, "contrary": self.contrary, "pro": list(self.pro), "con": list(self.con)}


class StatementEvaluator:
    """Labels statements against one framework using a single status pass."""

    def __init__(self, af: ArgumentationFramework, cm: ClaimMap, statuses=None):
        check_claims(cm, af)
        self.af = af
        self.cm = cm
        self.statuses = justification_map(af) if statuses is None else statuses

    def accepted(self, s) -> bool:
        return any(self.statuses[a] == _SCEPTICAL for a in _supporters(self.cm, self.af, s))

    def sceptically_accepted(self, s: str) -> bool:
        if s not in self.cm.vocabulary:
            raise OffVocabulary(s)
        return self.accepted(s)

    def conflict(self, s: str) -> ConflictDiagnostic | None:
        t = self.cm.contrary_of(s)
        if s not in self.cm.vocabulary or t is None:
            return None
        if not (self.accepted(s) and self.accepted(t)):
            return None
        pro, con = pro_con(self.cm, self.af, s)
        return ConflictDiagnostic(s, t, tuple(sorted(pro)), tuple(sorted(con)))

    def label(self, s: str, scheme) -> StatementLabel:
        scheme = Scheme.parse(scheme)
        if s not in self.cm.vocabulary:
            if scheme is Scheme.ENGAGEMENT_AWARE:
                return StatementLabel.OFF
            raise OffVocabulary(s)
        pro, con = pro_con(self.cm, self.af, s)
        yes = self.accepted(s)
        fal = self.accepted(self.cm.contrary_of(s))
        if yes and fal:
            yes = fal = False
        if scheme is Scheme.BIVALENT:
            return StatementLabel.YES if yes else StatementLabel.NO
        if yes:
            return StatementLabel.YES
        if fal:
            return StatementLabel.FAL
        if scheme is Scheme.DOUBT_TOLERANT:
            return StatementLabel.NI
        evidence = pro | con
        if not evidence:
            return StatementLabel.UNK
        if scheme is Scheme.IGNORANCE_AWARE:
            return StatementLabel.NI
        if all(self.statuses[a] == _SETTLED_UNDEC for a in evidence):
            return StatementLabel.NI_COMMITTED
        return StatementLabel.NI_OPEN

    def label_all(self, scheme) -> dict[str, StatementLabel]:
        return {s: self.label(s, scheme) for s in sorted(self.cm.vocabulary)}


def sceptically_accepted(af: ArgumentationFramework, cm: ClaimMap, s: str) -> bool:
    """True iff some argument concluding ``s`` has status exactly {in}."""
    return StatementEvaluator(af, cm).sceptically_accepted(s)


def label_statement(af: ArgumentationFramework, cm: ClaimMap, s: str, scheme) -> StatementLabel:
    """Label ``s`` under ``scheme``.

    Precedence is off > yes > fal > unk > ni. When both ``s`` and its
    contrary are sceptically accepted the verdict falls back to the
    undecided label of the scheme (no under bivalent); see
    ``conflict_diagnostic``.
    """
    return StatementEvaluator(af, cm).label(s, scheme)


def conflict_diagnostic(af: ArgumentationFramework, cm: ClaimMap, s: str) -> ConflictDiagnostic | None:
    return StatementEvaluator(af, cm).conflict(s)


def label_all_statements(af: ArgumentationFramework, cm: ClaimMap, scheme) -> dict[str, StatementLabel]:
    return StatementEvaluator(af, cm).label_all(scheme)
