import pytest

from weakcode.baseposet import base_poset, minix, realizable_as_distributive, verify_birkhoff
from weakcode.codelattice import code_lattice, join, product_leq
from weakcode.codes import extended_code, lehmer_code
from weakcode.oracles import brute_force_isomorphic
from weakcode.permcore import all_permutations, identity, inversions, length
from weakcode.posets import (
    dual,
    ideal_rank_polynomial,
    join_irreducibles,
    order_ideals,
    poset_isomorphic,
)
from weakcode.rankpoly import RankPolynomial

from conftest import perm


def test_minix_examples(w32514):
    assert minix(3, 2, w32514) == (0, 0, 2, 0, 0)
    assert minix(1, 1, w32514) == (1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        minix(1, 0, w32514)
    with pytest.raises(ValueError):
        minix(2, 2, w32514)


def test_minix_is_least_with_given_entry():
    for w in all_permutations(5):
        L = code_lattice(w, check=False)
        c = lehmer_code(w)
        for i in range(1, 6):
            for x in range(1, c[i - 1] + 1):
                low = minix(i, x, w)
                assert low[i - 1] == x
                assert low in L
                assert all(product_leq(low, y) for y in L.codes if y[i - 1] == x)


def test_codes_are_joins_of_minix():
    for w in all_permutations(5):
        for y in code_lattice(w, check=False).codes:
            acc = (0,) * 5
            for i, yi in enumerate(y, start=1):
                if yi:
                    acc = join(acc, minix(i, yi, w))
            assert acc == y


def test_base_poset_41528637():
    w = perm("41528637")
    M = base_poset(w)
    sizes = {i: len(ch) for i, ch in M.chains.items() if ch}
    assert sizes == {1: 3, 3: 2, 5: 3, 6: 1}
    assert len(M) == length(w) == 9
    at = {ix: M.elements[k] for k, ix in enumerate(M.coordinates)}
    P, idx = M.poset, {ix: k for k, ix in enumerate(M.coordinates)}
    assert (5, 6) in inversions(w)
    for x in range(1, 4):
        assert not P.leq(idx[(5, x)], idx[(6, 1)]) and not P.leq(idx[(6, 1)], idx[(5, x)])
    # inter-chain relations dictated by the extended code entries
    m = extended_code(w)
    for i, j in [(1, 3), (1, 5), (1, 6), (3, 5), (3, 6)]:
        for x in range(1, len(M.chains[i]) + 1):
            for y in range(1, len(M.chains[j]) + 1):
                assert product_leq(at[(j, y)], at[(i, x)]) == (y <= x - m[i, j])
    assert sorted((M.coordinates[a], M.coordinates[b]) for a, b in P.covers) == [
        ((1, 1), (1, 2)), ((1, 2), (1, 3)), ((3, 1), (1, 2)), ((3, 1), (3, 2)),
        ((3, 2), (1, 3)), ((5, 1), (3, 2)), ((5, 1), (5, 2)), ((5, 2), (5, 3)), ((6, 1), (3, 2)),
    ]


def test_base_poset_is_join_irreducibles_s5():
    assert len(base_poset(identity(4))) == 0
    for n in range(1, 6):
        for w in all_permutations(n):
            M = base_poset(w)
            L = code_lattice(w, check=False)
            brute = {L.codes[z] for z in join_irreducibles(L.as_poset())}
            assert set(M.elements) == brute
            assert len(M) == length(w)
            chains = [set(ch) for ch in M.chains.values()]
            assert sum(len(ch) for ch in chains) == len(set().union(*chains))


def test_join_irreducibles_32514(w32514):
    L = code_lattice(w32514)
    assert len(join_irreducibles(L.as_poset())) == 5
    assert order_ideals(base_poset(w32514).poset).size == 14


def test_chain_relations_s5():
    for w in all_permutations(5):
        c, m, inv = lehmer_code(w), extended_code(w), inversions(w)
        for i in range(1, 6):
            for j in range(i + 1, 6):
                for x in range(1, c[i - 1] + 1):
                    for y in range(1, c[j - 1] + 1):
                        a, b = minix(i, x, w), minix(j, y, w)
                        assert not product_leq(a, b)
                        if (i, j) in inv:
                            assert not product_leq(b, a)
                        else:
                            assert product_leq(b, a) == (y <= x - m[i, j])


def test_verify_birkhoff():
    iso = verify_birkhoff(perm("32514"))
    assert len(iso) == 14
    assert iso[frozenset()] == (0, 0, 0, 0, 0)
    assert verify_birkhoff(identity(3)) == {frozenset(): (0, 0, 0)}
    for n in range(1, 6):
        for w in all_permutations(n):
            assert len(verify_birkhoff(w)) == len(code_lattice(w, check=False))


def test_self_duality_of_32514_base_poset(w32514):
    M = base_poset(w32514).poset
    answer = poset_isomorphic(M, dual(M))
    assert answer == brute_force_isomorphic(M, dual(M))
    assert answer is False


def test_realizability():
    assert realizable_as_distributive([1, 4, 5, 3, 1]) is None
    two_chain = realizable_as_distributive([1, 1, 1])
    assert two_chain.size == 2 and len(two_chain.covers) == 1
    witness = realizable_as_distributive([1, 2, 2, 1])
    assert witness is not None
    assert ideal_rank_polynomial(witness) == RankPolynomial((1, 2, 2, 1))
    with pytest.raises(ValueError):
        realizable_as_distributive([1] * 10)
