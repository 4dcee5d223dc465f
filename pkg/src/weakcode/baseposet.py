"""The base poset ``M_w`` of join-irreducibles of ``c(Lambda_w)``.

``minix(i, x, w)`` is the least code in ``c(Lambda_w)`` whose ``i``-th entry
is ``x``; these codes, ordered componentwise, form ``M_w`` and split into one
chain per position ``i``.  Birkhoff's theorem is checked explicitly by
``verify_birkhoff``; ``realizable_as_distributive`` searches small posets
``P`` whose ideal lattice has a prescribed rank polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .codelattice import code_lattice, join, product_leq
from .codes import LehmerCode, code_label, extended_code, lehmer_code
from .enumeration import MAX_ENUMERATION_SIZE, enumerate_posets
from .permcore import Permutation, inversions
from .posets import (
    FinitePoset,
    InvariantViolation,
    ideal_masks,
    ideal_rank_polynomial,
    join_irreducibles,
    order_ideals,
)
from .rankpoly import RankPolynomial

__all__ = [
    "minix",
    "BasePoset",
    "base_poset",
    "join_irreducibles",
    "order_ideals",
    "verify_birkhoff",
    "realizable_as_distributive",
]


def minix(i: int, x: int, w: Permutation) -> LehmerCode:
    n = w.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} is outside [1, {n}]")
    c = lehmer_code(w)
    if not 1 <= x <= c[i - 1]:
        raise ValueError(f"x = {x} is outside [1, c_{i}(w)] = [1, {c[i - 1]}]")
    inv = inversions(w)
    m = extended_code(w)
    out = []
    for j in range(1, n + 1):
        if j < i or (i, j) in inv:
            out.append(0)
        else:
            out.append(max(0, x - m[i, j]))
    return tuple(out)


@dataclass(frozen=True)
class BasePoset:
    """``M_w`` with its chain decomposition.

    ``poset`` labels are the minix codes ordered by ``(i, x)``;
    ``chains[i]`` lists ``minix(i, 1..c_i(w), w)`` bottom to top.
    """

    source: Permutation
    poset: FinitePoset
    chains: dict[int, tuple[LehmerCode, ...]]
    coordinates: tuple[tuple[int, int], ...]

    @property
    def elements(self) -> tuple[LehmerCode, ...]:
        return self.poset.labels or ()

    def __len__(self) -> int:
        return self.poset.size

    def to_json(self) -> dict:
        out = self.poset.to_json()
        out["labels"] = [code_label(c) for c in self.elements]
        out["codes"] = [list(c) for c in self.elements]
        out["coordinates"] = [list(ix) for ix in self.coordinates]
        out["chains"] = {str(i): [code_label(c) for c in ch] for i, ch in sorted(self.chains.items())}
        out["source"] = self.source.to_json()
        return out


def base_poset(w: Permutation) -> BasePoset:
    c = lehmer_code(w)
    chains: dict[int, tuple[LehmerCode, ...]] = {}
    elements: list[LehmerCode] = []
    coords: list[tuple[int, int]] = []
    for i in range(1, w.n + 1):
        chain = tuple(minix(i, x, w) for x in range(1, c[i - 1] + 1))
        chains[i] = chain
        elements.extend(chain)
        coords.extend((i, x) for x in range(1, c[i - 1] + 1))
    poset = FinitePoset.from_elements(elements, product_leq)
    return BasePoset(w, poset, chains, tuple(coords))


def verify_birkhoff(w: Permutation) -> dict[frozenset, LehmerCode]:
    """Map each ideal of ``M_w`` to the join of its codes and check it is an
    order isomorphism onto ``c(Lambda_w)``.

    Returns the map, keyed by ideals as frozensets of codes.
    """
    M = base_poset(w)
    L = code_lattice(w, check=False)
    zero = (0,) * w.n
    codes = M.elements
    masks = ideal_masks(M.poset, cap=max(M.poset.size, 1))
    image: dict[int, LehmerCode] = {}
    for mask in masks:
        value = zero
        for e in range(M.poset.size):
            if mask >> e & 1:
                value = join(value, codes[e])
        image[mask] = value
    values = list(image.values())
    if len(set(values)) != len(values):
        raise InvariantViolation(f"ideal map for {w} is not injective")
    if set(values) != set(L.codes):
        raise InvariantViolation(f"ideal map for {w} does not hit c(Lambda_w)")
    for a in masks:
        for b in masks:
            if (a & ~b == 0) != product_leq(image[a], image[b]):
                raise InvariantViolation(f"ideal map for {w} is not an order isomorphism")
    return {
        frozenset(codes[e] for e in range(M.poset.size) if mask >> e & 1): image[mask]
        for mask in masks
    }


def realizable_as_distributive(
    f: RankPolynomial | Sequence[int],
    min_count: int | None = None,
    max_count: int | None = None,
) -> FinitePoset | None:
    """Find ``P`` with ``F(J(P), q) == f`` among all posets of size ``deg f``.

    ``min_count``/``max_count`` restrict the search to posets with that many
    minimal/maximal elements.  Returns ``None`` when no class qualifies.
    """
    if not isinstance(f, RankPolynomial):
        f = RankPolynomial(tuple(f))
    k = f.degree
    if k > MAX_ENUMERATION_SIZE:
        raise ValueError(f"degree {k} exceeds the enumeration limit {MAX_ENUMERATION_SIZE}")
    for P in enumerate_posets(k, min_count, max_count):
        if ideal_rank_polynomial(P) == f:
            return P
    return None

