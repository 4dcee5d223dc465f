import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakcode.orders import weak_rank_polynomial
from weakcode.permcore import all_permutations, direct_sum, identity, inverse
from weakcode.rankpoly import RankPolynomial
from weakcode.symmetry import (
    check_lower_bound,
    is_rank_symmetric,
    reverse_polynomial,
    self_dual_implies_symmetric,
    symmetric_pair,
    symmetric_scan,
)

from conftest import perm

# rank polynomials of posets with a minimum have constant term >= 1
polys = st.builds(
    lambda c0, rest: RankPolynomial((c0, *rest)),
    st.integers(1, 20),
    st.lists(st.integers(0, 20), max_size=7),
)


def test_reverse_polynomial():
    assert reverse_polynomial([1, 3, 5, 4, 1]) == RankPolynomial((1, 4, 5, 3, 1))
    assert reverse_polynomial([1]) == RankPolynomial((1,))
    with pytest.raises(ValueError):
        reverse_polynomial([0, 0])


@given(polys)
def test_reversal_is_an_involution(f):
    assert f.reversed().reversed() == f


@given(polys)
def test_product_with_reversal_is_symmetric(f):
    g = f * f.reversed()
    assert g.reversed() == g


def test_rank_symmetry_examples():
    assert is_rank_symmetric(identity(4))
    assert not is_rank_symmetric(perm("32514"))
    for w in all_permutations(3):
        assert is_rank_symmetric(direct_sum(w, inverse(w)))
        f = weak_rank_polynomial(w)
        assert weak_rank_polynomial(direct_sum(w, inverse(w))) == f * f.reversed()


@pytest.mark.parametrize("n", [2, 4, 6])
def test_lower_bound(n):
    report = check_lower_bound(n)
    assert report.bound == math.factorial(n // 2)
    assert report.count >= report.bound
    assert report.family_symmetric and report.family_distinct
    assert len(report.family) == report.bound


def test_lower_bound_counts_small():
    # exhaustive scan results, frozen
    assert [check_lower_bound(n).count for n in range(1, 7)] == [1, 2, 6, 22, 94, 432]


def test_odd_n_family_is_padded():
    report = check_lower_bound(5)
    assert all(u.n == 5 and u.word[-1] == 5 for u in report.family)
    big = check_lower_bound(9)
    assert big.count is None and big.ok and len(big.family) == 24


def test_symmetric_pair_injective():
    for half in range(1, 5):
        images = [symmetric_pair(v) for v in all_permutations(half)]
        assert len(set(images)) == len(images)


def test_self_duality_never_breaks_symmetry():
    for w in all_permutations(5):
        assert not self_dual_implies_symmetric(w).violation
    check = self_dual_implies_symmetric(identity(3))
    assert check.self_dual and check.symmetric


def test_symmetric_scan_rows():
    rows = symmetric_scan(4)
    assert len(rows) == 22
    assert all(RankPolynomial(tuple(r["rank_polynomial"])).is_symmetric() for r in rows)
