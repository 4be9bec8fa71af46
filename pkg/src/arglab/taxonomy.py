"""Acceptance classes of justification statuses and the engagement order of indecision."""
from __future__ import annotations

import enum

from .errors import UnrealizableStatus
from .semantics import IN, OUT, UNDEC


class AcceptanceClass(enum.Enum):
    STRONGLY_ACCEPTED = "strongly_accepted"
    WEAKLY_ACCEPTED = "weakly_accepted"
    STRONGLY_REJECTED = "strongly_rejected"
    WEAKLY_REJECTED = "weakly_rejected"
    DETERMINED_BORDERLINE = "determined_borderline"
    UNDETERMINED_BORDERLINE = "undetermined_borderline"

    def __str__(self):
        return self.value


_CLASSES = {
    frozenset({IN}): AcceptanceClass.STRONGLY_ACCEPTED,
    frozenset({IN, UNDEC}): AcceptanceClass.WEAKLY_ACCEPTED,
    frozenset({OUT}): AcceptanceClass.STRONGLY_REJECTED,
    frozenset({OUT, UNDEC}): AcceptanceClass.WEAKLY_REJECTED,
    frozenset({UNDEC}): AcceptanceClass.DETERMINED_BORDERLINE,
    frozenset({IN, OUT, UNDEC}): AcceptanceClass.UNDETERMINED_BORDERLINE,
}

REALIZABLE_STATUSES = tuple(_CLASSES)


def classify_status(status) -> AcceptanceClass:
    """Map one of the six statuses realizable under complete semantics to its class.

    The empty status and {in, out} never arise (complete semantics allow
    abstention) and raise UnrealizableStatus.
    """
    try:
        return _CLASSES[frozenset(status)]
    except KeyError:
        labels = ",".join(sorted(lab.value for lab in status))
        raise UnrealizableStatus(f"status {{{labels}}} cannot arise from complete labellings") from None


class IndecisionForm(enum.Enum):
    """Forms of indecision ordered by how far the reasoner has engaged."""

    OFF_LANGUAGE = ("off_language", 0)
    UNCONSIDERED = ("unconsidered", 1)
    OPEN = ("open", 2)
    COMMITTED = ("committed", 3)

    def __init__(self, label, rank):
        self.label = label
        self.rank = rank

    def __lt__(self, other):
        if not isinstance(other, IndecisionForm):
            return NotImplemented
        return self.rank < other.rank

    def __str__(self):
        return self.label

    @classmethod
    def from_label(cls, label: str) -> "IndecisionForm":
        for form in cls:
            if form.label == label:
                return form
        raise ValueError(label)


def engagement_rank(form: IndecisionForm) -> int:
    return form.rank


# statement-level indecision labels -> form; plain "ni" is deliberately absent
_FORM_OF_LABEL = {
    "off": IndecisionForm.OFF_LANGUAGE,
    "unk": IndecisionForm.UNCONSIDERED,
    "ni_open": IndecisionForm.OPEN,
    "ni_committed": IndecisionForm.COMMITTED,
}


def indecision_form(label) -> IndecisionForm | None:
    """Indecision form of a statement label, or None if it has none."""
    return _FORM_OF_LABEL.get(getattr(label, "value", label))
