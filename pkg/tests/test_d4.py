import pytest

from weakcode.d4 import (
    COUNTEREXAMPLE_WORD,
    IDENTITY,
    SignedPermutation,
    d4_counterexample_polynomial,
    d4_group,
    d4_left_interval,
    d4_length,
    d4_nonrealizability,
    evaluate_word,
    generator_set,
    leaf_relabelings,
    strip_extremes,
)
from weakcode.rankpoly import RankPolynomial

TARGET = RankPolynomial((1, 1, 3, 3, 4, 4, 3, 3, 1, 1))


def order(g):
    h, k = g, 1
    while h != IDENTITY:
        h, k = g * h, k + 1
    return k


def test_signed_permutation_validation():
    with pytest.raises(ValueError):
        SignedPermutation((-1, 2, 3, 4))
    with pytest.raises(ValueError):
        SignedPermutation((1, 1, 3, 4))


def test_coxeter_relations():
    gens = generator_set()
    for s in gens.values():
        assert s * s == IDENTITY
    for i in (1, 3, 4):
        assert order(gens[2] * gens[i]) == 3
        for j in (1, 3, 4):
            if i != j:
                assert order(gens[i] * gens[j]) == 2


def test_group_order_and_lengths():
    group = d4_group()
    assert len(group) == 192
    assert d4_length(IDENTITY) == 0
    assert all(d4_length(s) == 1 for s in generator_set().values())
    assert d4_length(evaluate_word(COUNTEREXAMPLE_WORD)) == 9


def test_interval_polynomial():
    f = d4_counterexample_polynomial()
    assert f == TARGET
    assert f.total() == 24
    assert f.is_symmetric()
    rank, covers = d4_left_interval(evaluate_word(COUNTEREXAMPLE_WORD))
    assert all(rank[hi] == rank[lo] + 1 for lo, hi in covers)


def test_polynomial_invariant_under_leaf_relabelling():
    assert len(leaf_relabelings()) == 6
    for labels in leaf_relabelings():
        assert d4_counterexample_polynomial(labels) == TARGET


def test_reduction():
    reduced = strip_extremes(TARGET)
    assert reduced == RankPolynomial((1, 3, 3, 4, 4, 3, 3, 1))
    assert reduced.total() == 22
    with pytest.raises(ValueError):
        strip_extremes(RankPolynomial((1, 2, 1)))


def test_nonrealizability():
    verdict = d4_nonrealizability()
    assert verdict.constrained_witness is None
    assert verdict.unconstrained_witness is None
    assert verdict.unconstrained_classes == 2045
    assert 0 < verdict.constrained_classes < 2045
    assert verdict.to_json()["verdict"] == "NONE"
