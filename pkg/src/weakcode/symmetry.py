"""Rank-symmetry of weak order intervals."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .baseposet import base_poset
from .orders import weak_rank_polynomial
from .permcore import Permutation, all_permutations, direct_sum, identity, inverse
from .posets import dual, poset_isomorphic
from .rankpoly import RankPolynomial

__all__ = [
    "reverse_polynomial",
    "is_rank_symmetric",
    "symmetric_pair",
    "LowerBoundReport",
    "check_lower_bound",
    "SelfDualCheck",
    "self_dual_implies_symmetric",
    "symmetric_scan",
    "EXHAUSTIVE_LIMIT",
]

EXHAUSTIVE_LIMIT = 7


def reverse_polynomial(f: RankPolynomial | Sequence[int]) -> RankPolynomial:
    if not isinstance(f, RankPolynomial):
        f = RankPolynomial(tuple(f))
    return f.reversed()


def is_rank_symmetric(w: Permutation) -> bool:
    return weak_rank_polynomial(w).is_symmetric()


def symmetric_pair(v: Permutation, n: int | None = None) -> Permutation:
    """``v x v^-1``, padded with fixed points up to ``S_n`` if ``n`` is given."""
    u = direct_sum(v, inverse(v))
    if n is not None and n > u.n:
        u = direct_sum(u, identity(n - u.n))
    return u


@dataclass
class LowerBoundReport:
    n: int
    bound: int
    count: int | None
    family: list[Permutation] = field(default_factory=list)
    family_symmetric: bool = True
    family_distinct: bool = True

    @property
    def ok(self) -> bool:
        count_ok = self.count is None or self.count >= self.bound
        return count_ok and self.family_symmetric and self.family_distinct

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "count": self.count,
            "family": [u.to_json() for u in self.family],
            "family_symmetric": self.family_symmetric,
            "family_distinct": self.family_distinct,
            "ok": self.ok,
        }


def check_lower_bound(n: int) -> LowerBoundReport:
    """Count rank-symmetric ``w`` in ``S_n`` against ``floor(n/2)!``.

    The family ``v x v^-1`` (``v`` in ``S_{floor(n/2)}``) is checked member by
    member.  Beyond ``EXHAUSTIVE_LIMIT`` only the family is checked and
    ``count`` is ``None``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    half = n // 2
    report = LowerBoundReport(n=n, bound=math.factorial(half), count=None)
    if half >= 1:
        report.family = [symmetric_pair(v, n) for v in all_permutations(half)]
    else:
        report.family = [identity(n)]
    report.family_distinct = len(set(report.family)) == len(report.family)
    report.family_symmetric = all(is_rank_symmetric(u) for u in report.family)
    if n <= EXHAUSTIVE_LIMIT:
        report.count = sum(1 for w in all_permutations(n) if is_rank_symmetric(w))
    return report


@dataclass(frozen=True)
class SelfDualCheck:
    w: Permutation
    self_dual: bool
    symmetric: bool

    @property
    def violation(self) -> bool:
        return self.self_dual and not self.symmetric


def self_dual_implies_symmetric(w: Permutation) -> SelfDualCheck:
    M = base_poset(w).poset
    return SelfDualCheck(w, poset_isomorphic(M, dual(M)), is_rank_symmetric(w))


def symmetric_scan(n: int) -> list[dict]:
    """Every rank-symmetric ``w`` in ``S_n`` with its polynomial and self-duality of ``M_w``."""
    rows = []
    for w in all_permutations(n):
        f = weak_rank_polynomial(w)
        if not f.is_symmetric():
            continue
        check = self_dual_implies_symmetric(w)
        rows.append(
            {
                "perm": w.to_json(),
                "rank_polynomial": f.to_json(),
                "base_poset_self_dual": check.self_dual,
            }
        )
    return rows
