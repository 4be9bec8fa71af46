import numpy as np
import pytest
from hypothesis import given

from arglab.enumeration import brute_force_matrix
from arglab.errors import PartialLabelling, UnknownArgument
from arglab.framework import ArgumentationFramework, parse_af
from arglab.semantics import IN, OUT, UNDEC, Label, Labelling, is_admissible, is_complete, is_legal

from helpers import framework_and_labelling, frameworks

EXAMPLE2_ADMISSIBLE = [
    (["B", "F"], ["E"], ["A", "C", "D"]),
    (["B", "E"], ["F"], ["A", "C", "D"]),
    (["B"], [], ["A", "C", "D", "E", "F"]),
    (["F"], ["E"], ["B", "A", "C", "D"]),
    (["E"], ["F"], ["B", "A", "C", "D"]),
    ([], [], ["B", "A", "C", "D", "E", "F"]),
]


def test_label_order_and_codes():
    assert sorted([UNDEC, IN, OUT]) == [IN, OUT, UNDEC]
    assert [lab.code for lab in Label] == [0, 1, 2]
    assert Label.from_code(2) is UNDEC


def test_format_matches_three_set_notation():
    lab = Labelling.from_sets(["F", "B"], ["E"], ["D", "A", "C"])
    assert lab.format() == "{{B,F},{E},{A,C,D}}"
    assert Labelling.from_json(lab.to_json()) == lab
    assert Labelling.from_sets([], [], ["a"]).format() == "{{},{},{a}}"


def test_from_sets_rejects_overlap():
    with pytest.raises(ValueError):
        Labelling.from_sets(["a"], ["a"])


def test_labelling_is_hashable_value():
    a = Labelling({"x": IN, "y": "out"})
    b = Labelling.from_sets(["x"], ["y"])
    assert a == b and hash(a) == hash(b)
    assert a.with_label("y", UNDEC) != a


def test_legal_in_unattacked(example2_af):
    lab = Labelling.from_sets(["B"], [], ["A", "C", "D", "E", "F"])
    assert is_legal(example2_af, lab, "B")


def test_unattacked_undec_not_legal():
    af = parse_af("arg(a).")
    assert not is_legal(af, Labelling({"a": UNDEC}), "a")


def test_legal_out_in_two_cycle():
    af = parse_af("arg(a). arg(b). att(a,b). att(b,a).")
    assert is_legal(af, Labelling({"a": IN, "b": OUT}), "b")


def test_legal_errors(example2_af):
    with pytest.raises(UnknownArgument):
        is_legal(example2_af, Labelling.all_undec(example2_af), "Z")
    with pytest.raises(PartialLabelling):
        is_legal(example2_af, Labelling({"B": IN}), "B")
    with pytest.raises(PartialLabelling):
        is_admissible(example2_af, Labelling.all_undec(example2_af).with_label("Q", IN))


@pytest.mark.parametrize("sets", EXAMPLE2_ADMISSIBLE)
def test_example2_listed_labellings_admissible(example2_af, sets):
    assert is_admissible(example2_af, Labelling.from_sets(*sets))


def test_example2_only_first_three_complete(example2_af):
    verdicts = [is_complete(example2_af, Labelling.from_sets(*s)) for s in EXAMPLE2_ADMISSIBLE]
    assert verdicts == [True, True, True, False, False, False]


def test_example2_in_with_attacker_in_not_admissible(example2_af):
    lab = Labelling.all_undec(example2_af).with_label("A", IN).with_label("D", IN)
    assert not is_admissible(example2_af, lab)


def test_self_attacker_undec_complete():
    af = parse_af("arg(a). att(a,a).")
    assert is_complete(af, Labelling({"a": UNDEC}))


def test_empty_framework():
    af = ArgumentationFramework(())
    assert is_admissible(af, Labelling()) and is_complete(af, Labelling())


@given(framework_and_labelling())
def test_complete_implies_admissible(case):
    af, lab = case
    if is_complete(af, lab):
        assert is_admissible(af, lab)


@given(framework_and_labelling())
def test_membership_equals_per_argument_legality(case):
    af, lab = case
    legal = {a: is_legal(af, lab, a) for a in af.arguments}
    assert is_admissible(af, lab) == all(legal[a] for a in af.arguments if lab[a] is not UNDEC)
    assert is_complete(af, lab) == all(legal.values())


@given(frameworks())
def test_all_undec_always_admissible(af):
    assert is_admissible(af, Labelling.all_undec(af))


@given(framework_and_labelling(max_args=5))
def test_scalar_predicates_agree_with_vectorized_oracle(case):
    af, lab = case
    codes = np.array(lab.codes(af), dtype=np.int8)
    in_rows = lambda m: bool((m == codes).all(axis=1).any()) if len(af) else len(m) == 1
    assert is_admissible(af, lab) == in_rows(brute_force_matrix(af, "admissible"))
    assert is_complete(af, lab) == in_rows(brute_force_matrix(af, "complete"))
