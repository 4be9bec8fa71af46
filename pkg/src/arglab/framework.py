"""Abstract argumentation frameworks and their APX-style text format.

A framework file contains one fact per statement::

    % Liar triangle plus an even cycle
    arg(A).
    arg(B).
    att(A,B).

Whitespace inside the parentheses is ignored and ``%`` starts a comment.
Several facts may share a line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import DuplicateArgument, ParseError, UndeclaredArgument, UnknownArgument

ID_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_FACT = re.compile(r"\s*([A-Za-z_]+)\s*\(([^()]*)\)\s*\.")


def is_identifier(token: str) -> bool:
    return ID_PATTERN.fullmatch(token) is not None


def iter_facts(text: str, source=None):
    """Yield ``(line_no, predicate, [terms])`` for every fact in ``text``.

    Shared by the framework and claims readers. Raises ParseError on any
    line that is not a sequence of well-formed facts.
    """
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if not line[pos:].strip():
                break
            m = _FACT.match(line, pos)
            if m is None:
                raise ParseError(f"malformed fact: {raw.strip()!r}", line_no, source)
            terms = [t.strip() for t in m.group(2).split(",")]
            for t in terms:
                if not is_identifier(t):
                    raise ParseError(f"invalid identifier {t!r}", line_no, source)
            yield line_no, m.group(1), terms
            pos = m.end()


@dataclass(frozen=True)
class ArgumentationFramework:
    """Immutable pair (arguments, attacks).

    ``arguments`` is kept in canonical (lexicographic) order; every
    downstream listing follows it. Self-attacks are allowed.
    """

    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        args = tuple(self.arguments)
        if len(set(args)) != len(args):
            seen = set()
            for a in args:
                if a in seen:
                    raise DuplicateArgument(a)
                seen.add(a)
        for a in args:
            if not isinstance(a, str) or not is_identifier(a):
                raise ValueError(f"invalid argument identifier {a!r}")
        attacks = frozenset((str(b), str(x)) for b, x in self.attacks)
        known = set(args)
        for b, x in attacks:
            for end in (b, x):
                if end not in known:
                    raise UndeclaredArgument(end)
        object.__setattr__(self, "arguments", tuple(sorted(args)))
        object.__setattr__(self, "attacks", attacks)

    @classmethod
    def from_edges(cls, arguments: Iterable[str], attacks: Iterable[tuple[str, str]] = ()):
        return cls(tuple(arguments), frozenset(attacks))

    def __len__(self):
        return len(self.arguments)

    def __contains__(self, arg):
        return arg in self.index

    @cached_property
    def index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.arguments)}

    @cached_property
    def _attackers(self) -> dict[str, frozenset[str]]:
        acc: dict[str, set[str]] = {a: set() for a in self.arguments}
        for b, x in self.attacks:
            acc[x].add(b)
        return {a: frozenset(s) for a, s in acc.items()}

    def attackers(self, x: str) -> frozenset[str]:
        try:
            return self._attackers[x]
        except KeyError:
            raise UnknownArgument(x) from None

    def unattacked(self) -> tuple[str, ...]:
        return tuple(a for a in self.arguments if not self._attackers[a])

    @cached_property
    def csr(self):
        """Integer adjacency for the kernels.

        Returns ``(att_ptr, att_idx, tgt_ptr, tgt_idx)``: attackers of ``i``
        are ``att_idx[att_ptr[i]:att_ptr[i+1]]``, targets likewise.
        """
        n = len(self.arguments)
        idx = self.index
        pairs = sorted((idx[b], idx[x]) for b, x in self.attacks)
        by_target = sorted(pairs, key=lambda p: (p[1], p[0]))
        att_ptr = np.zeros(n + 1, dtype=np.int64)
        tgt_ptr = np.zeros(n + 1, dtype=np.int64)
        for b, x in pairs:
            att_ptr[x + 1] += 1
            tgt_ptr[b + 1] += 1
        np.cumsum(att_ptr, out=att_ptr)
        np.cumsum(tgt_ptr, out=tgt_ptr)
        att_idx = np.array([b for b, _ in by_target], dtype=np.int64)
        tgt_idx = np.array([x for _, x in pairs], dtype=np.int64)
        return att_ptr, att_idx, tgt_ptr, tgt_idx

    def adjacency(self) -> np.ndarray:
        """Boolean matrix ``M`` with ``M[b, x]`` true iff b attacks x."""
        n = len(self.arguments)
        m = np.zeros((n, n), dtype=bool)
        idx = self.index
        for b, x in self.attacks:
            m[idx[b], idx[x]] = True
        return m

    def to_apx(self) -> str:
        lines = [f"arg({a})." for a in self.arguments]
        lines += [f"att({b},{x})." for b, x in sorted(self.attacks)]
        return "\n".join(lines) + ("\n" if lines else "")


def attackers_of(af: ArgumentationFramework, x: str) -> frozenset[str]:
    """Set of arguments attacking ``x``; raises UnknownArgument."""
    return af.attackers(x)


def parse_af(source: str, *, name=None) -> ArgumentationFramework:
    """Parse APX text into a framework."""
    args: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[int, str, str]] = []
    for line_no, pred, terms in iter_facts(source, name):
        if pred == "arg" and len(terms) == 1:
            a = terms[0]
            if a in declared:
                raise DuplicateArgument(a, line_no, name)
            declared.add(a)
            args.append(a)
        elif pred == "att" and len(terms) == 2:
            attacks.append((line_no, terms[0], terms[1]))
        else:
            raise ParseError(f"unexpected fact {pred}/{len(terms)}", line_no, name)
    for line_no, b, x in attacks:
        for end in (b, x):
            if end not in declared:
                raise UndeclaredArgument(end, line_no, name)
    return ArgumentationFramework(tuple(args), frozenset((b, x) for _, b, x in attacks))


def load_af(path) -> ArgumentationFramework:
    path = Path(path)
    return parse_af(path.read_text(encoding="utf-8"), name=str(path))


def cycle(n: int, prefix: str = "a") -> ArgumentationFramework:
    """Pure directed cycle a0 -> a1 -> ... -> a{n-1} -> a0."""
    width = len(str(max(n - 1, 0)))
    names = [f"{prefix}{i:0{width}d}" for i in range(n)]
    return ArgumentationFramework.from_edges(
        names, [(names[i], names[(i + 1) % n]) for i in range(n)]
    )
