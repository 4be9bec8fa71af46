"""Shared generators for the test-suite."""
from importlib import resources

import numpy as np
from hypothesis import strategies as st

from arglab.framework import ArgumentationFramework, load_af
from arglab.statements import ClaimMap, load_claims

DATA = resources.files("arglab") / "data"


def data_path(name):
    return str(DATA / name)


def example2():
    return load_af(data_path("example2.af"))


def disease():
    return load_af(data_path("disease.af")), load_claims(data_path("disease.claims"))


def random_af(rng, n, p=0.25):
    names = [f"a{i}" for i in range(n)]
    hits = rng.random((n, n)) < p
    return ArgumentationFramework.from_edges(
        names, [(names[i], names[j]) for i in range(n) for j in range(n) if hits[i, j]]
    )


def random_corpus(count=200, max_args=7, p=0.25, seed=20201017):
    rng = np.random.default_rng(seed)
    return [random_af(rng, int(rng.integers(1, max_args + 1)), p) for _ in range(count)]


def random_claims(rng, af, max_statements=4):
    k = int(rng.integers(1, max_statements + 1))
    stmts = [f"s{i}" for i in range(k)]
    order = list(rng.permutation(stmts))
    pairs = []
    while len(order) >= 2 and rng.random() < 0.7:
        pairs.append((order.pop(), order.pop()))
    conclusion = {}
    for a in af.arguments:
        if rng.random() < 0.8:
            conclusion[a] = stmts[int(rng.integers(0, k))]
    return ClaimMap.build(conclusion, pairs, stmts)


def random_claim_instances(count=100, max_args=6, max_statements=4, seed=7):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        af = random_af(rng, int(rng.integers(0, max_args + 1)))
        out.append((af, random_claims(rng, af, max_statements)))
    return out


@st.composite
def frameworks(draw, max_args=7):
    n = draw(st.integers(0, max_args))
    names = [f"a{i}" for i in range(n)]
    pairs = [(b, x) for b in names for x in names]
    attacks = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return ArgumentationFramework.from_edges(names, attacks)


@st.composite
def framework_and_labelling(draw, max_args=6):
    from arglab.semantics import Label, Labelling

    af = draw(frameworks(max_args))
    labels = draw(st.lists(st.sampled_from(list(Label)), min_size=len(af), max_size=len(af)))
    return af, Labelling(zip(af.arguments, labels))


def load_claims_path(name):
    return load_claims(data_path(name))
