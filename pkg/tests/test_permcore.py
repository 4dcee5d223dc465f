import itertools

import pytest
from hypothesis import given

from weakcode.oracles import inversions_by_definition
from weakcode.permcore import (
    Permutation,
    adjacent_transposition,
    all_permutations,
    compose,
    direct_sum,
    identity,
    inverse,
    inversions,
    length,
    non_inversions,
    parse_permutation,
)

from conftest import perm, permutations_of


def test_inversions_examples():
    assert inversions(perm("12345")) == frozenset()
    assert inversions(perm("21")) == {(1, 2)}
    assert inversions(perm("32514")) == {(1, 2), (1, 4), (2, 4), (3, 4), (3, 5)}


def test_non_inversions_examples():
    assert non_inversions(perm("21")) == {(1, 1), (1, 3), (2, 2), (2, 3)}
    ident = non_inversions(perm("12345"))
    assert len(ident) == 20
    assert ident == {(i, j) for i in range(1, 6) for j in range(i, 7)}


@pytest.mark.parametrize("w, expected", [("12345", 0), ("32514", 5), ("41528637", 9)])
def test_length(w, expected):
    assert length(perm(w)) == expected


def test_group_operations():
    assert inverse(perm("231")) == perm("312")
    s1 = adjacent_transposition(1, 5)
    assert s1 == perm("21345")
    assert compose(s1, identity(5)) == perm("21345")
    with pytest.raises(ValueError):
        compose(perm("21"), perm("123"))
    with pytest.raises(ValueError):
        adjacent_transposition(5, 5)


def test_left_multiplication_swaps_values():
    # s_2 * 32514 swaps the values 2 and 3
    assert compose(adjacent_transposition(2, 5), perm("32514")) == perm("23514")


def test_direct_sum():
    assert direct_sum(perm("231"), perm("312")) == perm("231645")
    assert direct_sum(identity(2), identity(3)) == identity(5)
    for v, w in itertools.product(all_permutations(3), repeat=2):
        assert length(direct_sum(v, w)) == length(v) + length(w)


@pytest.mark.parametrize("bad", ["1,1,2", "0,1", "1,3", ""])
def test_rejects_non_bijections(bad):
    with pytest.raises(ValueError):
        parse_permutation(bad)


def test_parse_forms_agree():
    assert parse_permutation("3,2,5,1,4") == parse_permutation("32514") == Permutation((3, 2, 5, 1, 4))
    assert str(parse_permutation("1,2,3,4,5,6,7,8,10,9")) == "1,2,3,4,5,6,7,8,10,9"


def test_exhaustive_small_groups():
    for n in range(1, 7):
        pairs = {(i, j) for i in range(1, n + 1) for j in range(i, n + 2)}
        for w in all_permutations(n):
            inv, ninv = inversions(w), non_inversions(w)
            assert not inv & ninv and inv | ninv == pairs
            assert len(inv) + len(ninv) == n * (n + 3) // 2
    for w in all_permutations(5):
        assert length(w) == length(inverse(w))
    for w in all_permutations(4):
        assert inverse(inverse(w)) == w


def test_biconvexity_s5():
    for w in all_permutations(5):
        inv, ninv = inversions(w), non_inversions(w)
        for i, j, k in itertools.combinations_with_replacement(range(1, 7), 3):
            if j > 5:
                continue
            if (i, j) in inv and (j, k) in inv:
                assert (i, k) in inv
            if (i, j) in ninv and (j, k) in ninv:
                assert (i, k) in ninv
            if (i, j) in inv and (i, k) in ninv:
                assert (j, k) in ninv
            if (i, j) in ninv and (i, k) in inv:
                assert (j, k) in inv


@given(permutations_of(max_n=9))
def test_inversions_match_definition(w):
    assert inversions(w) == inversions_by_definition(w)
    assert compose(w, inverse(w)) == identity(w.n)
