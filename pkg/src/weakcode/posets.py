"""Finite posets on ``range(size)`` given by their cover relation.

Relations are held as Python int bitmasks (``down[b]`` has bit ``a`` set when
``a < b``); the lattice routines switch to numpy boolean matrices for the
cubic-time checks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .rankpoly import RankPolynomial

__all__ = [
    "FinitePoset",
    "NotALatticeError",
    "IdealCapExceeded",
    "InvariantViolation",
    "LatticeTables",
    "lattice_tables",
    "is_distributive",
    "join_irreducibles",
    "order_ideals",
    "ideal_masks",
    "ideal_rank_polynomial",
    "dual",
    "canonical_form",
    "canonical_form_from_masks",
    "poset_from_canonical",
    "poset_isomorphic",
    "chain",
    "antichain",
    "DEFAULT_IDEAL_CAP",
]

DEFAULT_IDEAL_CAP = 20


class NotALatticeError(ValueError):
    """Some pair of elements lacks a least upper or greatest lower bound."""


class IdealCapExceeded(ValueError):
    pass


class InvariantViolation(AssertionError):
    """A checked mathematical invariant failed: an implementation bug."""


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FinitePoset:
    size: int
    covers: frozenset[tuple[int, int]]
    labels: tuple | None = None

    def __post_init__(self) -> None:
        covers = frozenset((int(a), int(b)) for a, b in self.covers)
        object.__setattr__(self, "covers", covers)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.size:
                raise ValueError(f"{len(labels)} labels for {self.size} elements")
            object.__setattr__(self, "labels", labels)
        for a, b in covers:
            if not (0 <= a < self.size and 0 <= b < self.size) or a == b:
                raise ValueError(f"bad cover pair ({a}, {b})")
        down = self._closure()
        for a, b in covers:
            # a < c < b for some c makes (a, b) redundant
            between = down[b] & ~(1 << a)
            if any(down[c] >> a & 1 for c in _bits(between)):
                raise ValueError(f"cover ({a}, {b}) is implied by transitivity")
        object.__setattr__(self, "_down", tuple(down))

    def _closure(self) -> list[int]:
        lower = [[] for _ in range(self.size)]
        indeg = [0] * self.size
        upper = [[] for _ in range(self.size)]
        for a, b in self.covers:
            lower[b].append(a)
            upper[a].append(b)
            indeg[b] += 1
        queue = deque(i for i in range(self.size) if indeg[i] == 0)
        down = [0] * self.size
        done = 0
        while queue:
            b = queue.popleft()
            done += 1
            for a in lower[b]:
                down[b] |= down[a] | (1 << a)
            for c in upper[b]:
                indeg[c] -= 1
                if indeg[c] == 0:
                    queue.append(c)
        if done != self.size:
            raise ValueError("cover relation contains a cycle")
        return down

    # -- construction -----------------------------------------------------

    @classmethod
    def from_relation(
        cls,
        size: int,
        less: Callable[[int, int], bool],
        labels: Sequence | None = None,
    ) -> FinitePoset:
        """Build from a strict order predicate ``less(a, b)`` on indices."""
        down = [0] * size
        for b in range(size):
            for a in range(size):
                if a != b and less(a, b):
                    down[b] |= 1 << a
        return cls.from_down_masks(down, labels)

    @classmethod
    def from_down_masks(cls, down: Sequence[int], labels: Sequence | None = None) -> FinitePoset:
        """``down[b]`` is the bitmask of elements strictly below ``b`` (transitively closed)."""
        covers = set()
        for b, mask in enumerate(down):
            for a in _bits(mask):
                # a is covered by b unless some c strictly between
                if not any(down[c] >> a & 1 for c in _bits(mask & ~(1 << a))):
                    covers.add((a, b))
        return cls(len(down), frozenset(covers), None if labels is None else tuple(labels))

    @classmethod
    def from_elements(
        cls, elements: Sequence, leq: Callable[[Any, Any], bool]
    ) -> FinitePoset:
        """Poset on labelled ``elements`` under a (reflexive) order predicate."""
        elements = list(elements)
        return cls.from_relation(
            len(elements), lambda a, b: leq(elements[a], elements[b]), elements
        )

    # -- queries ----------------------------------------------------------

    @property
    def down_masks(self) -> tuple[int, ...]:
        return self._down  # type: ignore[attr-defined]

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        up = [0] * self.size
        for b, mask in enumerate(self.down_masks):
            for a in _bits(mask):
                up[a] |= 1 << b
        return tuple(up)

    def less(self, a: int, b: int) -> bool:
        return bool(self.down_masks[b] >> a & 1)

    def leq(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b)

    @cached_property
    def leq_matrix(self) -> np.ndarray:
        m = np.eye(self.size, dtype=bool)
        for b, mask in enumerate(self.down_masks):
            for a in _bits(mask):
                m[a, b] = True
        return m

    def minimal_elements(self) -> list[int]:
        return [i for i in range(self.size) if self.down_masks[i] == 0]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(self.size) if self.up_masks[i] == 0]

    def label(self, i: int):
        return i if self.labels is None else self.labels[i]

    def index(self, label) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def lower_covers(self, b: int) -> list[int]:
        return sorted(a for a, c in self.covers if c == b)

    def rank_function(self) -> list[int]:
        """Ranks with minimal elements at 0; raises if the poset is not ranked."""
        rank = [-1] * self.size
        order = sorted(range(self.size), key=lambda i: bin(self.down_masks[i]).count("1"))
        for b in order:
            lows = self.lower_covers(b)
            if not lows:
                rank[b] = 0
                continue
            values = {rank[a] + 1 for a in lows}
            if len(values) != 1:
                raise ValueError(f"element {self.label(b)} has lower covers at different ranks")
            rank[b] = values.pop()
        for a, b in self.covers:
            if rank[b] != rank[a] + 1:
                raise ValueError("poset is not ranked")
        return rank

    def rank_polynomial(self) -> RankPolynomial:
        return RankPolynomial.from_ranks(self.rank_function())

    def sorted_covers(self) -> list[tuple[int, int]]:
        return sorted(self.covers)

    def to_json(self) -> dict:
        labels = None
        if self.labels is not None:
            labels = [_json_label(x) for x in self.labels]
        return {
            "size": self.size,
            "covers": [list(c) for c in self.sorted_covers()],
            "labels": labels,
        }


def _json_label(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (tuple, list, frozenset)):
        return [_json_label(y) for y in (sorted(x) if isinstance(x, frozenset) else x)]
    return x


def chain(k: int) -> FinitePoset:
    return FinitePoset(k, frozenset((i, i + 1) for i in range(k - 1)))


def antichain(k: int) -> FinitePoset:
    return FinitePoset(k, frozenset())


def dual(P: FinitePoset) -> FinitePoset:
    return FinitePoset(P.size, frozenset((b, a) for a, b in P.covers), P.labels)


# -- lattices -------------------------------------------------------------


@dataclass(frozen=True)
class LatticeTables:
    join: np.ndarray
    meet: np.ndarray
    bottom: int
    top: int


def _bound_table(leq: np.ndarray, what: str) -> np.ndarray:
    """Least upper bounds from a reflexive ``leq`` matrix (pass ``leq.T`` for meets)."""
    m = leq.shape[0]
    up_count = leq.sum(axis=1)
    table = np.empty((m, m), dtype=np.int64)
    for x in range(m):
        common = leq[x][None, :] & leq  # common[y, z]: z above both x and y
        counts = common.sum(axis=1)
        # z is the least common bound iff everything above z is common
        hit = common & (up_count[None, :] == counts[:, None])
        n_hits = hit.sum(axis=1)
        if not np.all(n_hits == 1):
            y = int(np.flatnonzero(n_hits != 1)[0])
            raise NotALatticeError(f"elements {x} and {y} have no unique {what}")
        table[x] = hit.argmax(axis=1)
    return table


def lattice_tables(P: FinitePoset) -> LatticeTables:
    if P.size == 0:
        raise NotALatticeError("the empty poset is not a lattice")
    leq = P.leq_matrix
    join = _bound_table(leq, "join")
    meet = _bound_table(leq.T, "meet")
    return LatticeTables(join, meet, _extreme(leq, low=True), _extreme(leq, low=False))


def _extreme(leq: np.ndarray, low: bool) -> int:
    counts = leq.sum(axis=1 if low else 0)
    idx = np.flatnonzero(counts == leq.shape[0])
    if len(idx) != 1:
        raise NotALatticeError("no unique bottom/top element")
    return int(idx[0])


def is_distributive(P: FinitePoset) -> bool:
    """Check ``x ^ (y v z) == (x ^ y) v (x ^ z)`` on every triple.

    Joins and meets come from the order relation, so this works for any
    poset; a non-lattice raises :class:`NotALatticeError`.
    """
    t = lattice_tables(P)
    J, M = t.join, t.meet
    for x in range(P.size):
        lhs = M[x][J]
        mx = M[x]
        rhs = J[mx[:, None], mx[None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def join_irreducibles(P: FinitePoset) -> list[int]:
    """Non-bottom ``z`` that is not the join of two elements strictly below it."""
    t = lattice_tables(P)
    out = []
    leq = P.leq_matrix
    for z in range(P.size):
        if z == t.bottom:
            continue
        below = np.flatnonzero(leq[:, z])
        below = below[below != z]
        if not np.any(t.join[np.ix_(below, below)] == z):
            out.append(z)
    return out


# -- order ideals ----------------------------------------------------------


def ideal_masks(P: FinitePoset, cap: int = DEFAULT_IDEAL_CAP) -> list[int]:
    """All down-closed subsets as bitmasks, sorted by (size, mask)."""
    if P.size > cap:
        raise IdealCapExceeded(
            f"poset has {P.size} elements; order ideal enumeration is capped at {cap}"
        )
    down = P.down_masks
    seen = {0}
    stack = [0]
    while stack:
        ideal = stack.pop()
        for e in range(P.size):
            if not ideal >> e & 1 and down[e] & ~ideal == 0:
                nxt = ideal | (1 << e)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return sorted(seen, key=lambda m: (bin(m).count("1"), m))


def ideal_rank_polynomial(P: FinitePoset, cap: int = DEFAULT_IDEAL_CAP) -> RankPolynomial:
    """``F(J(P), q)``: ideals counted by size."""
    return RankPolynomial.from_ranks(bin(m).count("1") for m in ideal_masks(P, cap))


def order_ideals(P: FinitePoset, cap: int = DEFAULT_IDEAL_CAP) -> FinitePoset:
    """``J(P)`` ordered by inclusion; each label is a frozenset of element indices."""
    masks = ideal_masks(P, cap)
    index = {m: k for k, m in enumerate(masks)}
    covers = set()
    for k, m in enumerate(masks):
        for e in range(P.size):
            if not m >> e & 1:
                nxt = index.get(m | (1 << e))
                if nxt is not None:
                    covers.add((k, nxt))
    labels = tuple(frozenset(_bits(m)) for m in masks)
    return FinitePoset(len(masks), frozenset(covers), labels)


# -- isomorphism -----------------------------------------------------------


def _refine(colors: list[int], ups: Sequence[int], downs: Sequence[int]) -> list[int]:
    n = len(colors)
    n_classes = len(set(colors))
    while True:
        sigs = [
            (
                colors[v],
                tuple(sorted(colors[u] for u in _bits(ups[v]))),
                tuple(sorted(colors[d] for d in _bits(downs[v]))),
            )
            for v in range(n)
        ]
        ranking = {s: k for k, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == n_classes:
            return colors
        n_classes = len(ranking)


def canonical_form(P: FinitePoset) -> tuple[int, tuple[int, ...]]:
    """A complete isomorphism invariant: ``(size, up-masks under a canonical order)``."""
    return canonical_form_from_masks(P.down_masks)


def canonical_form_from_masks(downs: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Canonical form of the strict order given by transitively closed down-masks.

    Colour refinement on the strict order, then individualisation of one
    vertex per twin class in the first non-singleton cell; the certificate
    is the lexicographically least relabelled up-mask tuple.
    """
    n = len(downs)
    if n == 0:
        return (0, ())
    ups = [0] * n
    for b, mask in enumerate(downs):
        for a in _bits(mask):
            ups[a] |= 1 << b
    pop = lambda m: bin(m).count("1")  # noqa: E731
    height = [0] * n
    for b in sorted(range(n), key=lambda i: pop(downs[i])):
        height[b] = max((height[a] + 1 for a in _bits(downs[b])), default=0)
    seeds = [(pop(downs[v]), pop(ups[v]), height[v]) for v in range(n)]
    ranking = {s: k for k, s in enumerate(sorted(set(seeds)))}
    start = _refine([ranking[s] for s in seeds], ups, downs)

    best: list[tuple[int, ...] | None] = [None]

    def search(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            # colors is now a bijection onto range(n)
            cert = [0] * n
            for v in range(n):
                cert[colors[v]] = sum(1 << colors[u] for u in _bits(ups[v]))
            cert_t = tuple(cert)
            if best[0] is None or cert_t < best[0]:
                best[0] = cert_t
            return
        # swapping twins is an automorphism, so one per twin class suffices
        twins: dict[tuple[int, int], int] = {}
        for v in cells[target]:
            twins.setdefault((ups[v], downs[v]), v)
        for rep in sorted(twins.values()):
            indiv = [2 * c + (1 if c == target and v != rep else 0) for v, c in enumerate(colors)]
            search(_refine(indiv, ups, downs))

    search(start)
    assert best[0] is not None
    return (n, best[0])


def poset_from_canonical(form: tuple[int, tuple[int, ...]]) -> FinitePoset:
    n, up = form
    down = [0] * n
    for a, mask in enumerate(up):
        for b in _bits(mask):
            down[b] |= 1 << a
    return FinitePoset.from_down_masks(down)


def poset_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    if P.size != Q.size or len(P.covers) != len(Q.covers):
        return False
    return canonical_form(P) == canonical_form(Q)
