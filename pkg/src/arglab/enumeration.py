"""Enumeration of labellings, justification statuses and the brute-force oracle."""
from __future__ import annotations

import enum
import itertools
from functools import lru_cache

import numpy as np

from . import kernels
from ._accel import select
from .errors import OracleBoundExceeded, UnknownArgument
from .framework import ArgumentationFramework
from .semantics import IN, OUT, UNDEC, Label, Labelling

ORACLE_BOUND = 12

JustificationStatus = frozenset  # of Label; nonempty


class SemanticsKind(enum.Enum):
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"

    def __str__(self):
        return self.value


def _as_kind(kind) -> SemanticsKind:
    return kind if isinstance(kind, SemanticsKind) else SemanticsKind(kind)


def _kernel_args(af):
    att_ptr, att_idx, tgt_ptr, tgt_idx = af.csr
    return len(af), att_ptr, att_idx, tgt_ptr, tgt_idx


def admissible_matrix(af: ArgumentationFramework) -> np.ndarray:
    return select(kernels.enumerate_kernel, len(af))(*_kernel_args(af), kernels.MODE_ADMISSIBLE)


@lru_cache(maxsize=256)
def complete_matrix(af: ArgumentationFramework) -> np.ndarray:
    """Complete labellings as an int8 row matrix in canonical order (read-only)."""
    rows = select(kernels.enumerate_kernel, len(af))(*_kernel_args(af), kernels.MODE_COMPLETE)
    rows.setflags(write=False)
    return rows


def grounded_codes(af: ArgumentationFramework) -> np.ndarray:
    att_ptr, att_idx, _, _ = af.csr
    return select(kernels.grounded_kernel, len(af))(len(af), att_ptr, att_idx)


def labelling_matrix(af: ArgumentationFramework, kind) -> np.ndarray:
    kind = _as_kind(kind)
    if kind is SemanticsKind.ADMISSIBLE:
        return admissible_matrix(af)
    if kind is SemanticsKind.GROUNDED:
        return grounded_codes(af)[None, :]
    rows = complete_matrix(af)
    if kind is SemanticsKind.COMPLETE:
        return rows
    if kind is SemanticsKind.PREFERRED:
        return rows[select(kernels.maximal_in_rows, len(rows))(np.ascontiguousarray(rows))]
    return rows[~(rows == kernels.UNDEC).any(axis=1)]


def _to_labellings(af, rows) -> list[Labelling]:
    return [Labelling.from_codes(af.arguments, r) for r in rows]


def enumerate_labellings(af: ArgumentationFramework, kind) -> list[Labelling]:
    """Every labelling of ``af`` under ``kind``, in canonical order.

    Canonical order is lexicographic over the label sequence taken in
    argument order, with in < out < undec.
    """
    return _to_labellings(af, labelling_matrix(af, kind))


def grounded_labelling(af: ArgumentationFramework) -> Labelling:
    return Labelling.from_codes(af.arguments, grounded_codes(af))


def brute_force_matrix(af: ArgumentationFramework, kind, bound: int = ORACLE_BOUND) -> np.ndarray:
    """Filter all 3^n candidate labellings with the membership definitions.

    Deliberately independent of the search kernels: candidates come from
    itertools.product and legality is evaluated with dense matrix algebra.
    """
    kind = _as_kind(kind)
    n = len(af)
    if n > bound:
        raise OracleBoundExceeded(n, bound)
    cand = np.array(list(itertools.product((0, 1, 2), repeat=n)), dtype=np.int8).reshape(3**n, n)
    adj = af.adjacency().astype(np.int32)
    is_in = (cand == 0).astype(np.int32)
    not_out = (cand != 1).astype(np.int32)
    in_attackers = is_in @ adj
    live_attackers = not_out @ adj
    legal_in = live_attackers == 0
    legal_out = in_attackers > 0
    legal_undec = (in_attackers == 0) & (live_attackers > 0)
    ok_in = np.where(cand == 0, legal_in, True).all(axis=1)
    ok_out = np.where(cand == 1, legal_out, True).all(axis=1)
    admissible = ok_in & ok_out
    if kind is SemanticsKind.ADMISSIBLE:
        return cand[admissible]
    complete = admissible & np.where(cand == 2, legal_undec, True).all(axis=1)
    rows = cand[complete]
    if kind is SemanticsKind.COMPLETE:
        return rows
    ins = rows == 0
    # contains[a, b]: in-set of a is a subset of in-set of b
    contains = ~(ins[:, None, :] & ~ins[None, :, :]).any(axis=2)
    sizes = ins.sum(axis=1)
    if kind is SemanticsKind.GROUNDED:
        least = contains.all(axis=1)
        return rows[least]
    if kind is SemanticsKind.PREFERRED:
        dominated = (contains & (sizes[:, None] < sizes[None, :])).any(axis=1)
        return rows[~dominated]
    return rows[(rows != 2).all(axis=1)]


def brute_force_labellings(af: ArgumentationFramework, kind, bound: int = ORACLE_BOUND) -> list[Labelling]:
    return _to_labellings(af, brute_force_matrix(af, kind, bound))


def _status_from_column(col) -> JustificationStatus:
    present = np.zeros(3, dtype=bool)
    present[np.unique(col)] = True
    return frozenset(lab for lab, p in zip((IN, OUT, UNDEC), present) if p)


def _statuses(af):
    rows = complete_matrix(af)
    return {a: _status_from_column(rows[:, i]) for i, a in enumerate(af.arguments)}


def justification_status(af: ArgumentationFramework, x: str) -> JustificationStatus:
    """Labels ``x`` receives across the complete labellings of ``af``."""
    if x not in af:
        raise UnknownArgument(x)
    return _statuses(af)[x]


def justification_map(af: ArgumentationFramework) -> dict[str, JustificationStatus]:
    return _statuses(af)


def credulous_sets(af: ArgumentationFramework, kind=SemanticsKind.ADMISSIBLE) -> dict[Label, frozenset[str]]:
    """For each label, the arguments receiving it in at least one labelling."""
    rows = labelling_matrix(af, kind)
    return {
        lab: frozenset(a for i, a in enumerate(af.arguments) if (rows[:, i] == lab.code).any())
        for lab in (IN, OUT, UNDEC)
    }


def format_status(status) -> str:
    return "{" + ",".join(lab.value for lab in sorted(status)) + "}"


def parse_status(text) -> JustificationStatus:
    if isinstance(text, str):
        body = text.strip().strip("{}")
        parts = [p.strip() for p in body.split(",") if p.strip()]
    else:
        parts = list(text)
    return frozenset(Label(p) for p in parts)
