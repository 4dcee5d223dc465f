"""Lehmer codes and extended Lehmer codes.

``lehmer_code(w)[i - 1]`` counts inversions ``(i, k)`` of ``w``; the extended
code entry ``m(i, j)`` counts only those with ``k < j``.  Both use 1-based
indices at the interface; ``c_{n+1}`` is taken to be 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permcore import Permutation

__all__ = [
    "LehmerCode",
    "ExtendedCode",
    "lehmer_code",
    "code_to_permutation",
    "extended_code",
    "is_non_inversion_via_code",
    "code_entry",
    "code_label",
]

LehmerCode = tuple  # tuple[int, ...]


def lehmer_code(w: Permutation) -> LehmerCode:
    word = w.word
    n = len(word)
    return tuple(
        sum(1 for k in range(i + 1, n) if word[i] > word[k]) for i in range(n)
    )


def code_entry(c: Sequence[int], i: int) -> int:
    """``c_i`` with the convention ``c_{n+1} = 0``."""
    return 0 if i == len(c) + 1 else c[i - 1]


def code_to_permutation(c: Sequence[int]) -> Permutation:
    n = len(c)
    for i, ci in enumerate(c, start=1):
        if not 0 <= ci <= n - i:
            raise ValueError(
                f"code entry c_{i} = {ci} is outside [0, {n - i}]"
            )
    unused = list(range(1, n + 1))
    # the (c_i + 1)-th smallest value not yet placed
    return Permutation(tuple(unused.pop(ci) for ci in c))


@dataclass(frozen=True)
class ExtendedCode:
    """Dense ``n x (n+1)`` matrix; index with ``m[i, j]`` (1-based)."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n + 1):
            raise IndexError(f"m({i},{j}) is outside the {self.n}x{self.n + 1} matrix")
        return self.rows[i - 1][j - 1]

    def last_column(self) -> LehmerCode:
        return tuple(row[-1] for row in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def extended_code(w: Permutation) -> ExtendedCode:
    word = w.word
    n = len(word)
    rows = []
    for i in range(n):
        row = [0] * (n + 1)
        count = 0
        # row[j] holds m(i+1, j+1): inversions (i+1, k) with k < j+1
        for j in range(1, n + 1):
            k = j - 1
            if k > i and word[i] > word[k]:
                count += 1
            row[j] = count
        rows.append(tuple(row))
    return ExtendedCode(tuple(rows))


def is_non_inversion_via_code(
    w: Permutation,
    i: int,
    j: int,
    code: Sequence[int] | None = None,
    ext: ExtendedCode | None = None,
) -> bool:
    """Decide ``(i, j) in Ninv(w)`` from ``c_i <= c_j + m(i, j)``."""
    n = w.n
    if i > j:
        raise ValueError(f"need i <= j, got ({i}, {j})")
    if not (1 <= i <= n and 1 <= j <= n + 1):
        raise ValueError(f"pair ({i}, {j}) is outside [{n}] x [{n + 1}]")
    c = lehmer_code(w) if code is None else code
    m = extended_code(w) if ext is None else ext
    return code_entry(c, i) <= code_entry(c, j) + m[i, j]


def code_label(c: Sequence[int]) -> str:
    """``21200`` style when every entry is a digit and n <= 9, else ``2,1,2``."""
    if len(c) <= 9 and all(0 <= x <= 9 for x in c):
        return "".join(map(str, c))
    return ",".join(map(str, c))
