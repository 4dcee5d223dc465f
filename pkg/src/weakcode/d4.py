"""A concrete model of the Coxeter group of type D4 as even-signed permutations.

Generators: ``s2`` swaps 2 and 3 (the branch node); the leaves are the swap
of 1 and 2, the swap of 3 and 4, and the signed swap ``1 -> -2, 2 -> -1``.
Lengths come from a breadth-first search of the 192-element Cayley graph.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .enumeration import enumerate_posets
from .posets import FinitePoset
from .baseposet import realizable_as_distributive
from .rankpoly import RankPolynomial

__all__ = [
    "SignedPermutation",
    "generator_set",
    "d4_group",
    "d4_length",
    "evaluate_word",
    "COUNTEREXAMPLE_WORD",
    "d4_left_interval",
    "d4_counterexample_polynomial",
    "NonrealizabilityVerdict",
    "d4_nonrealizability",
    "leaf_relabelings",
    "strip_extremes",
]

# generator labels of the reduced word, read left to right
COUNTEREXAMPLE_WORD = (2, 1, 3, 4, 2, 4, 3, 1, 2)
LEAVES = (1, 3, 4)


@dataclass(frozen=True, order=True)
class SignedPermutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if sorted(abs(x) for x in images) != list(range(1, n + 1)):
            raise ValueError(f"{images} is not a signed permutation of [{n}]")
        if sum(1 for x in images if x < 0) % 2:
            raise ValueError(f"{images} has an odd number of sign changes")

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        """``(self * other)(i) = self(other(i))``."""
        return SignedPermutation(tuple(self(x) for x in other.images))

    def __str__(self) -> str:
        return "[" + " ".join(str(x) for x in self.images) + "]"


IDENTITY = SignedPermutation((1, 2, 3, 4))


def generator_set(leaf_labels: Sequence[int] = LEAVES) -> dict[int, SignedPermutation]:
    """Generators keyed by label; ``leaf_labels`` assigns labels to the three leaves."""
    leaves = [
        SignedPermutation((2, 1, 3, 4)),
        SignedPermutation((1, 2, 4, 3)),
        SignedPermutation((-2, -1, 3, 4)),
    ]
    gens = {2: SignedPermutation((1, 3, 2, 4))}
    for label, g in zip(leaf_labels, leaves):
        gens[label] = g
    return gens


@lru_cache(maxsize=None)
def d4_group() -> dict[SignedPermutation, int]:
    """Every group element mapped to its distance from the identity."""
    gens = list(generator_set().values())
    dist = {IDENTITY: 0}
    queue = deque([IDENTITY])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    return dist


def d4_length(g: SignedPermutation) -> int:
    try:
        return d4_group()[g]
    except KeyError:
        raise ValueError(f"{g} is not in the generated group") from None


def evaluate_word(word: Sequence[int], gens: dict[int, SignedPermutation] | None = None) -> SignedPermutation:
    gens = generator_set() if gens is None else gens
    g = IDENTITY
    for label in word:
        g = g * gens[label]
    return g


def d4_left_interval(w: SignedPermutation) -> tuple[dict[SignedPermutation, int], set]:
    """``[id, w]`` in left weak order: element ranks and ``(lower, upper)`` covers."""
    gens = list(generator_set().values())
    rank = {w: d4_length(w)}
    covers = set()
    frontier = [w]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                v = s * g
                if d4_length(v) == rank[g] - 1:
                    covers.add((v, g))
                    if v not in rank:
                        rank[v] = rank[g] - 1
                        nxt.append(v)
        frontier = nxt
    return rank, covers


def d4_counterexample_polynomial(leaf_labels: Sequence[int] = LEAVES) -> RankPolynomial:
    w = evaluate_word(COUNTEREXAMPLE_WORD, generator_set(leaf_labels))
    rank, _ = d4_left_interval(w)
    return RankPolynomial.from_rank_map(rank)


def leaf_relabelings() -> list[tuple[int, ...]]:
    return list(permutations(LEAVES))


@dataclass
class NonrealizabilityVerdict:
    polynomial: RankPolynomial
    reduced: RankPolynomial
    constrained_classes: int
    unconstrained_classes: int
    constrained_witness: FinitePoset | None
    unconstrained_witness: FinitePoset | None
    seconds: float

    @property
    def realizable(self) -> bool:
        return self.constrained_witness is not None or self.unconstrained_witness is not None

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "polynomial": self.polynomial.to_json(),
            "reduced": self.reduced.to_json(),
            "constrained_classes": self.constrained_classes,
            "unconstrained_classes": self.unconstrained_classes,
            "constrained_witness": None if self.constrained_witness is None else self.constrained_witness.to_json(),
            "unconstrained_witness": None if self.unconstrained_witness is None else self.unconstrained_witness.to_json(),
            "verdict": "REALIZABLE" if self.realizable else "NONE",
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def strip_extremes(f: RankPolynomial) -> RankPolynomial:
    """``F(J(P'))`` for ``P'`` = ``P`` minus its unique minimum and maximum.

    With a unique minimal and maximal element, ``F(J(P)) = 1 + q F(J(P')) + q^|P|``.
    """
    c = f.coefficients
    if len(c) < 3 or c[0] != 1 or c[1] != 1 or c[-2] != 1 or c[-1] != 1:
        raise ValueError(f"{f} does not force a unique minimal and maximal element")
    return RankPolynomial(c[1:-1])


def d4_nonrealizability() -> NonrealizabilityVerdict:
    start = time.perf_counter()
    f = d4_counterexample_polynomial()
    reduced = strip_extremes(f)
    k = reduced.degree
    n_min, n_max = reduced[1], reduced[k - 1]
    constrained = realizable_as_distributive(reduced, n_min, n_max)
    unconstrained = realizable_as_distributive(reduced)
    return NonrealizabilityVerdict(
        polynomial=f,
        reduced=reduced,
        constrained_classes=sum(1 for _ in enumerate_posets(k, n_min, n_max)),
        unconstrained_classes=sum(1 for _ in enumerate_posets(k)),
        constrained_witness=constrained,
        unconstrained_witness=unconstrained,
        seconds=time.perf_counter() - start,
    )
