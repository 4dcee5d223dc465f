"""Rank-generating functions as dense ascending coefficient tuples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = ["RankPolynomial"]


@dataclass(frozen=True)
class RankPolynomial:
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if any(c < 0 for c in coeffs):
            raise ValueError("rank polynomial coefficients must be non-negative")
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_ranks(cls, ranks: Iterable[int]) -> RankPolynomial:
        counts: list[int] = []
        for r in ranks:
            if r >= len(counts):
                counts.extend([0] * (r + 1 - len(counts)))
            counts[r] += 1
        return cls(tuple(counts))

    @classmethod
    def from_rank_map(cls, rank: Mapping[object, int]) -> RankPolynomial:
        return cls.from_ranks(rank.values())

    @property
    def degree(self) -> int:
        if not self.coefficients:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def total(self) -> int:
        return sum(self.coefficients)

    def __mul__(self, other: RankPolynomial) -> RankPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RankPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return RankPolynomial(tuple(out))

    def reversed(self) -> RankPolynomial:
        """``q^deg f(1/q)``."""
        if not self.coefficients:
            raise ValueError("cannot reverse the zero polynomial")
        return RankPolynomial(self.coefficients[::-1])

    def is_symmetric(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "q" if k == 1 else f"q^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list[int]:
        return list(self.coefficients)
