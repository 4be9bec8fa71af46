import pytest

from arglab.errors import UnrealizableStatus
from arglab.framework import cycle
from arglab.enumeration import justification_map
from arglab.semantics import IN, OUT, UNDEC
from arglab.taxonomy import (
    REALIZABLE_STATUSES,
    AcceptanceClass as AC,
    IndecisionForm,
    classify_status,
    engagement_rank,
    indecision_form,
)


@pytest.mark.parametrize(
    "status, cls",
    [
        ({IN}, AC.STRONGLY_ACCEPTED),
        ({IN, UNDEC}, AC.WEAKLY_ACCEPTED),
        ({OUT}, AC.STRONGLY_REJECTED),
        ({OUT, UNDEC}, AC.WEAKLY_REJECTED),
        ({UNDEC}, AC.DETERMINED_BORDERLINE),
        ({IN, OUT, UNDEC}, AC.UNDETERMINED_BORDERLINE),
    ],
)
def test_classify(status, cls):
    assert classify_status(status) is cls


@pytest.mark.parametrize("status", [set(), {IN, OUT}])
def test_unrealizable(status):
    with pytest.raises(UnrealizableStatus):
        classify_status(status)


def test_bijective():
    assert len({classify_status(s) for s in REALIZABLE_STATUSES}) == len(AC) == 6


def test_example2_classes(example2_af):
    classes = {a: classify_status(s) for a, s in justification_map(example2_af).items()}
    assert classes["B"] is AC.STRONGLY_ACCEPTED
    assert classes["A"] is classes["C"] is classes["D"] is AC.DETERMINED_BORDERLINE
    assert classes["E"] is classes["F"] is AC.UNDETERMINED_BORDERLINE


@pytest.mark.parametrize("n", range(2, 8))
def test_cycle_classes(n):
    expected = AC.DETERMINED_BORDERLINE if n % 2 else AC.UNDETERMINED_BORDERLINE
    assert {classify_status(s) for s in justification_map(cycle(n)).values()} == {expected}


def test_engagement_ranks():
    assert engagement_rank(IndecisionForm.OFF_LANGUAGE) == 0
    assert engagement_rank(IndecisionForm.UNCONSIDERED) == 1
    assert engagement_rank(IndecisionForm.OPEN) == 2
    assert engagement_rank(IndecisionForm.COMMITTED) == 3
    forms = list(IndecisionForm)
    assert sorted(forms) == forms
    assert len({engagement_rank(f) for f in forms}) == len(forms)


def test_label_to_form():
    assert indecision_form("off") is IndecisionForm.OFF_LANGUAGE
    assert indecision_form("unk") is IndecisionForm.UNCONSIDERED
    assert indecision_form("ni_open") is IndecisionForm.OPEN
    assert indecision_form("ni_committed") is IndecisionForm.COMMITTED
    assert indecision_form("ni") is None
    assert indecision_form("yes") is None
    assert IndecisionForm.from_label("open") is IndecisionForm.OPEN
