"""Permutations of ``[n]`` in 1-based one-line notation.

A :class:`Permutation` stores the word ``w_1 ... w_n`` with ``w(i) = w_i``.
Composition follows ``(u * v)(i) = u(v(i))``, so ``s_i * v`` swaps the
*values* ``i`` and ``i + 1`` in the word of ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "PairSet",
    "parse_permutation",
    "identity",
    "inversions",
    "non_inversions",
    "length",
    "inverse",
    "compose",
    "adjacent_transposition",
    "transposition",
    "direct_sum",
    "all_permutations",
]

PairSet = frozenset  # frozenset[tuple[int, int]]


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n < 1:
            raise ValueError("a permutation needs at least one entry")
        seen = set()
        for pos, value in enumerate(word, start=1):
            if not 1 <= value <= n:
                raise ValueError(f"value {value} at position {pos} is outside [1, {n}]")
            if value in seen:
                raise ValueError(f"value {value} appears more than once")
            seen.add(value)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        # n + 1 is a virtual fixed point
        if i == len(self.word) + 1:
            return i
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """``positions[v - 1]`` is the 1-based position of value ``v``."""
        pos = [0] * len(self.word)
        for i, v in enumerate(self.word, start=1):
            pos[v - 1] = i
        return tuple(pos)

    def __str__(self) -> str:
        if len(self.word) <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def to_json(self) -> list[int]:
        return list(self.word)


def parse_permutation(text: str | Sequence[int]) -> Permutation:
    """Parse ``"3,2,5,1,4"``, ``"32514"`` or a sequence of ints."""
    if isinstance(text, str):
        text = text.strip()
        if "," in text or " " in text:
            parts = [p for p in text.replace(" ", ",").split(",") if p]
        else:
            parts = list(text)
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"cannot read {text!r} as a list of integers") from None
        return Permutation(tuple(values))
    return Permutation(tuple(text))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def inversions(w: Permutation) -> PairSet:
    word = w.word
    n = len(word)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
    )


def non_inversions(w: Permutation) -> PairSet:
    """Pairs ``(i, j)`` with ``i <= j``, ``j <= n + 1`` and ``w(i) <= w(j)``."""
    n = w.n
    return frozenset(
        (i, j) for i in range(1, n + 1) for j in range(i, n + 2) if w(i) <= w(j)
    )


def length(w: Permutation) -> int:
    word = w.word
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def inverse(w: Permutation) -> Permutation:
    return Permutation(w.positions)


def _check_same_size(u: Permutation, v: Permutation) -> None:
    if u.n != v.n:
        raise ValueError(f"size mismatch: S_{u.n} vs S_{v.n}")


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Return ``u * v``, applying ``v`` first."""
    _check_same_size(u, v)
    uw = u.word
    return Permutation(tuple(uw[x - 1] for x in v.word))


def transposition(a: int, b: int, n: int) -> Permutation:
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise ValueError(f"invalid transposition ({a} {b}) in S_{n}")
    word = list(range(1, n + 1))
    word[a - 1], word[b - 1] = b, a
    return Permutation(tuple(word))


def adjacent_transposition(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not defined in S_{n}")
    return transposition(i, i + 1, n)


def direct_sum(v: Permutation, w: Permutation) -> Permutation:
    """The embedding ``S_m x S_n -> S_{m+n}``: ``v_1..v_m (w_1+m)..(w_n+m)``."""
    m = v.n
    return Permutation(v.word + tuple(x + m for x in w.word))


def all_permutations(n: int) -> Iterable[Permutation]:
    """All of ``S_n`` in lexicographic order of one-line words."""
    for word in permutations(range(1, n + 1)):
        yield Permutation(word)
