"""Enumeration of finite posets up to isomorphism.

Classes of size ``k`` are grown from classes of size ``k - 1`` by adjoining a
new maximal element whose strict down-set is any order ideal; every poset
arises this way (delete one of its maximal elements), and duplicates are
removed by canonical form.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .posets import (
    FinitePoset,
    canonical_form_from_masks,
    ideal_masks,
    poset_from_canonical,
)

__all__ = ["MAX_ENUMERATION_SIZE", "poset_classes", "enumerate_posets", "count_posets"]

MAX_ENUMERATION_SIZE = 8

CanonicalForm = tuple[int, tuple[int, ...]]


def _down_from_up(form: CanonicalForm) -> list[int]:
    n, up = form
    down = [0] * n
    for a, mask in enumerate(up):
        b = 0
        while mask:
            if mask & 1:
                down[b] |= 1 << a
            mask >>= 1
            b += 1
    return down


@lru_cache(maxsize=None)
def poset_classes(k: int) -> tuple[CanonicalForm, ...]:
    """Sorted canonical forms of all posets on ``k`` elements."""
    if k < 0:
        raise ValueError("poset size must be non-negative")
    if k > MAX_ENUMERATION_SIZE:
        raise ValueError(
            f"enumeration of {k}-element posets is not supported (limit {MAX_ENUMERATION_SIZE})"
        )
    if k == 0:
        return ((0, ()),)
    forms = set()
    for form in poset_classes(k - 1):
        down = _down_from_up(form)
        P = FinitePoset.from_down_masks(down)
        for ideal in ideal_masks(P, cap=MAX_ENUMERATION_SIZE):
            forms.add(canonical_form_from_masks(down + [ideal]))
    return tuple(sorted(forms))


def _count_minimal(form: CanonicalForm) -> int:
    return sum(1 for d in _down_from_up(form) if d == 0)


def _count_maximal(form: CanonicalForm) -> int:
    return sum(1 for u in form[1] if u == 0)


def enumerate_posets(
    k: int, min_count: int | None = None, max_count: int | None = None
) -> Iterator[FinitePoset]:
    """Yield one poset per isomorphism class of size ``k``.

    ``min_count`` / ``max_count`` keep only posets with exactly that many
    minimal / maximal elements.  Output order is deterministic.
    """
    for form in poset_classes(k):
        if min_count is not None and _count_minimal(form) != min_count:
            continue
        if max_count is not None and _count_maximal(form) != max_count:
            continue
        yield poset_from_canonical(form)


def count_posets(k: int) -> int:
    return len(poset_classes(k))
