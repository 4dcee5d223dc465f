"""Brute-force oracles, deliberately independent of the fast code paths."""

from __future__ import annotations

from itertools import combinations, permutations, product
from .permcore import Permutation, all_permutations
from .posets import FinitePoset

__all__ = [
    "naive_poset_classes",
    "brute_force_isomorphic",
    "weak_interval_by_scan",
    "inversions_by_definition",
]


def inversions_by_definition(w: Permutation) -> set[tuple[int, int]]:
    n = w.n
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i < j and w(i) > w(j)}


def weak_interval_by_scan(w: Permutation) -> set[Permutation]:
    """``{v : Inv(v) <= Inv(w)}`` by scanning all of ``S_n``."""
    inv_w = inversions_by_definition(w)
    return {v for v in all_permutations(w.n) if inversions_by_definition(v) <= inv_w}


def _is_transitive(pairs: set[tuple[int, int]]) -> bool:
    return all((a, d) in pairs for a, b in pairs for c, d in pairs if b == c)


def naive_poset_classes(k: int) -> set[tuple[tuple[int, int], ...]]:
    """Isomorphism classes of ``k``-element posets.

    Every poset has a natural labelling, so it suffices to try every
    transitive set of pairs ``(i, j)`` with ``i < j`` and canonicalise by
    minimising the sorted relabelled pair list over all ``k!`` relabellings.
    """
    slots = list(combinations(range(k), 2))
    relabelings = list(permutations(range(k)))
    classes = set()
    for bits in product((0, 1), repeat=len(slots)):
        pairs = {slot for slot, bit in zip(slots, bits) if bit}
        if not _is_transitive(pairs):
            continue
        key = min(tuple(sorted((s[a], s[b]) for a, b in pairs)) for s in relabelings)
        classes.add(key)
    return classes


def brute_force_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    """Try every bijection."""
    if P.size != Q.size:
        return False
    rel_p = {(a, b) for a in range(P.size) for b in range(P.size) if P.less(a, b)}
    rel_q = {(a, b) for a in range(Q.size) for b in range(Q.size) if Q.less(a, b)}
    if len(rel_p) != len(rel_q):
        return False
    return any({(s[a], s[b]) for a, b in rel_p} == rel_q for s in permutations(range(P.size)))

