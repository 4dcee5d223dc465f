"""Left/right weak order and strong Bruhat order on ``S_n``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codes import code_entry, extended_code, lehmer_code
from .permcore import (
    Permutation,
    compose,
    inverse,
    inversions,
    length,
    non_inversions,
)
from .posets import FinitePoset
from .rankpoly import RankPolynomial

__all__ = [
    "IntervalPoset",
    "RankPolynomial",
    "leq_left",
    "leq_right",
    "leq_left_via_codes",
    "failing_non_inversion",
    "covers_down_left",
    "covers_down_right",
    "covers_down_bruhat",
    "interval_left",
    "interval_right",
    "interval_general",
    "bruhat_interval",
    "interval",
    "rank_polynomial",
    "weak_rank_polynomial",
    "is_321_avoiding",
    "pattern_321_witness",
    "ORDER_KINDS",
]

ORDER_KINDS = ("left-weak", "right-weak", "bruhat")


@dataclass(frozen=True)
class IntervalPoset:
    """An interval ``[minimum, maximum]`` with its Hasse diagram.

    ``elements`` are sorted by ``(rank, word)``; ``covers`` holds
    ``(lower, upper)`` permutation pairs.
    """

    elements: tuple[Permutation, ...]
    covers: frozenset[tuple[Permutation, Permutation]]
    rank: dict[Permutation, int]
    order_kind: str

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u: Permutation) -> bool:
        return u in self.rank

    @property
    def minimum(self) -> Permutation:
        return self.elements[0]

    @property
    def maximum(self) -> Permutation:
        return self.elements[-1]

    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    def to_poset(self) -> FinitePoset:
        index = {u: k for k, u in enumerate(self.elements)}
        covers = frozenset((index[a], index[b]) for a, b in self.covers)
        return FinitePoset(len(self.elements), covers, self.elements)

    def to_json(self) -> dict:
        index = {u: k for k, u in enumerate(self.elements)}
        return {
            "order": self.order_kind,
            "size": len(self.elements),
            "labels": [u.to_json() for u in self.elements],
            "ranks": [self.rank[u] for u in self.elements],
            "covers": sorted([index[a], index[b]] for a, b in self.covers),
            "rank_polynomial": rank_polynomial(self).to_json(),
        }


def _check_sizes(v: Permutation, w: Permutation) -> None:
    if v.n != w.n:
        raise ValueError(f"size mismatch: S_{v.n} vs S_{w.n}")


def leq_left(v: Permutation, w: Permutation) -> bool:
    """``v <=_L w`` iff ``Inv(v)`` is contained in ``Inv(w)``."""
    _check_sizes(v, w)
    return inversions(v) <= inversions(w)


def leq_right(u: Permutation, w: Permutation) -> bool:
    _check_sizes(u, w)
    return leq_left(inverse(u), inverse(w))


def failing_non_inversion(v: Permutation, w: Permutation) -> tuple[int, int] | None:
    """First ``(i, j)`` in ``Ninv(w)`` with ``c_i(v) > c_j(v) + m_{i,j}(w)``."""
    _check_sizes(v, w)
    cv = lehmer_code(v)
    m = extended_code(w)
    for i, j in sorted(non_inversions(w)):
        if code_entry(cv, i) > code_entry(cv, j) + m[i, j]:
            return (i, j)
    return None


def leq_left_via_codes(v: Permutation, w: Permutation) -> bool:
    return failing_non_inversion(v, w) is None


def covers_down_left(w: Permutation) -> set[Permutation]:
    """All ``s_i w`` of length ``l(w) - 1``: value ``i + 1`` sits left of ``i``."""
    pos = w.positions
    out = set()
    for i in range(1, w.n):
        if pos[i] < pos[i - 1]:
            word = list(w.word)
            a, b = pos[i - 1] - 1, pos[i] - 1
            word[a], word[b] = word[b], word[a]
            out.add(Permutation(tuple(word)))
    return out


def covers_down_right(w: Permutation) -> set[Permutation]:
    """All ``w s_i`` of length ``l(w) - 1``: a descent at position ``i``."""
    out = set()
    for i in range(w.n - 1):
        if w.word[i] > w.word[i + 1]:
            word = list(w.word)
            word[i], word[i + 1] = word[i + 1], word[i]
            out.add(Permutation(tuple(word)))
    return out


def covers_down_bruhat(w: Permutation) -> set[Permutation]:
    """All ``t w`` (``t`` any transposition) of length exactly ``l(w) - 1``."""
    target = length(w) - 1
    pos = w.positions
    out = set()
    for a in range(1, w.n + 1):
        for b in range(a + 1, w.n + 1):
            word = list(w.word)
            pa, pb = pos[a - 1] - 1, pos[b - 1] - 1
            word[pa], word[pb] = b, a
            u = Permutation(tuple(word))
            if length(u) == target:
                out.add(u)
    return out


def _downward_closure(w: Permutation, step, kind: str) -> IntervalPoset:
    top_len = length(w)
    levels = [{w}]
    covers = set()
    while levels[-1]:
        nxt = set()
        for u in levels[-1]:
            for v in step(u):
                covers.add((v, u))
                nxt.add(v)
        levels.append(nxt)
    rank = {}
    for depth, level in enumerate(levels):
        for u in level:
            rank[u] = top_len - depth
    elements = tuple(sorted(rank, key=lambda u: (rank[u], u.word)))
    return IntervalPoset(elements, frozenset(covers), rank, kind)


def interval_left(w: Permutation) -> IntervalPoset:
    """``Lambda_w = [id, w]`` in left weak order, ranked by length."""
    return _downward_closure(w, covers_down_left, "left-weak")


def interval_right(w: Permutation) -> IntervalPoset:
    return _downward_closure(w, covers_down_right, "right-weak")


def bruhat_interval(w: Permutation) -> IntervalPoset:
    return _downward_closure(w, covers_down_bruhat, "bruhat")


def interval(w: Permutation, order: str = "left-weak") -> IntervalPoset:
    kinds = {
        "left": interval_left,
        "left-weak": interval_left,
        "right": interval_right,
        "right-weak": interval_right,
        "bruhat": bruhat_interval,
    }
    try:
        return kinds[order](w)
    except KeyError:
        raise ValueError(f"unknown order {order!r}; expected left, right or bruhat") from None


def interval_general(v: Permutation, w: Permutation) -> IntervalPoset:
    """``[v, w]`` in left weak order, as ``Lambda_{w v^-1}`` relabelled by ``u -> u v``.

    Ranks are measured from ``v``.
    """
    _check_sizes(v, w)
    if not leq_left(v, w):
        raise ValueError(f"{v} is not below {w} in left weak order")
    base = interval_left(compose(w, inverse(v)))
    shift = {u: compose(u, v) for u in base.elements}
    rank = {shift[u]: base.rank[u] for u in base.elements}
    covers = frozenset((shift[a], shift[b]) for a, b in base.covers)
    elements = tuple(sorted(rank, key=lambda u: (rank[u], u.word)))
    return IntervalPoset(elements, covers, rank, "left-weak")


def rank_polynomial(P: IntervalPoset) -> RankPolynomial:
    return RankPolynomial.from_rank_map(P.rank)


def weak_rank_polynomial(w: Permutation) -> RankPolynomial:
    """``F(Lambda_w, q)`` by level-wise descent, without building covers."""
    level = {w.word}
    counts = []
    n = w.n
    while level:
        counts.append(len(level))
        nxt = set()
        for word in level:
            pos = [0] * n
            for idx, val in enumerate(word):
                pos[val - 1] = idx
            for i in range(n - 1):
                a, b = pos[i], pos[i + 1]
                if b < a:
                    lst = list(word)
                    lst[a], lst[b] = lst[b], lst[a]
                    nxt.add(tuple(lst))
        level = nxt
    return RankPolynomial(tuple(reversed(counts)))


def pattern_321_witness(w: Permutation) -> tuple[int, int, int] | None:
    """Positions ``i < j < k`` with ``w(i) > w(j) > w(k)``, if any."""
    word = w.word
    n = len(word)
    for j in range(1, n - 1):
        left = next((i for i in range(j) if word[i] > word[j]), None)
        if left is None:
            continue
        right = next((k for k in range(j + 1, n) if word[k] < word[j]), None)
        if right is not None:
            return (left + 1, j + 1, right + 1)
    return None


def is_321_avoiding(w: Permutation) -> bool:
    return pattern_321_witness(w) is None

