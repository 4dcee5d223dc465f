"""The Lehmer codes of a weak order interval under the product order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .codes import LehmerCode, code_label, lehmer_code
from .orders import interval_left
from .permcore import Permutation
from .posets import FinitePoset, InvariantViolation, is_distributive
from .rankpoly import RankPolynomial

__all__ = [
    "CodeLattice",
    "product_leq",
    "join",
    "meet",
    "code_lattice",
    "lattice_rank_polynomial",
    "is_distributive",
]


def _check_lengths(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise ValueError(f"code length mismatch: {len(x)} vs {len(y)}")


def product_leq(x: Sequence[int], y: Sequence[int]) -> bool:
    _check_lengths(x, y)
    return all(a <= b for a, b in zip(x, y))


def join(x: Sequence[int], y: Sequence[int]) -> LehmerCode:
    _check_lengths(x, y)
    return tuple(max(a, b) for a, b in zip(x, y))


def meet(x: Sequence[int], y: Sequence[int]) -> LehmerCode:
    _check_lengths(x, y)
    return tuple(min(a, b) for a, b in zip(x, y))


@dataclass(frozen=True)
class CodeLattice:
    """``c(Lambda_w)``; ``codes`` sorted by (entry sum, code)."""

    codes: tuple[LehmerCode, ...]
    source: Permutation

    def __len__(self) -> int:
        return len(self.codes)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.codes)

    def as_poset(self) -> FinitePoset:
        return FinitePoset.from_elements(self.codes, product_leq)

    def rank(self, x: Sequence[int]) -> int:
        return sum(x)

    def to_json(self) -> dict:
        P = self.as_poset()
        return {
            "source": self.source.to_json(),
            "size": P.size,
            "labels": [code_label(c) for c in self.codes],
            "codes": [list(c) for c in self.codes],
            "covers": [list(c) for c in P.sorted_covers()],
            "rank_polynomial": self.rank_polynomial().to_json(),
        }

    def rank_polynomial(self) -> RankPolynomial:
        return RankPolynomial.from_ranks(sum(c) for c in self.codes)


def code_lattice(w: Permutation, check: bool = True) -> CodeLattice:
    """Codes of ``Lambda_w``; with ``check`` the join/meet closure is verified."""
    codes = sorted({lehmer_code(v) for v in interval_left(w).elements}, key=lambda c: (sum(c), c))
    L = CodeLattice(tuple(codes), w)
    if check:
        members = set(codes)
        for a, x in enumerate(codes):
            for y in codes[a + 1:]:
                if join(x, y) not in members or meet(x, y) not in members:
                    raise InvariantViolation(
                        f"code set of {w} is not closed under join/meet at {x}, {y}"
                    )
    return L


def lattice_rank_polynomial(w: Permutation) -> RankPolynomial:
    """Rank polynomial of ``c(Lambda_w)``, rank being the entry sum."""
    return code_lattice(w, check=False).rank_polynomial()
