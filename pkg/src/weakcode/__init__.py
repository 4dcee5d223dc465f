"""Lehmer-code refinements of left weak order intervals in the symmetric group."""

from .baseposet import BasePoset, base_poset, minix, realizable_as_distributive, verify_birkhoff
from .codelattice import CodeLattice, code_lattice, join, lattice_rank_polynomial, meet, product_leq
from .codes import (
    ExtendedCode,
    code_to_permutation,
    extended_code,
    is_non_inversion_via_code,
    lehmer_code,
)
from .orders import (
    IntervalPoset,
    bruhat_interval,
    covers_down_left,
    interval_general,
    interval_left,
    interval_right,
    is_321_avoiding,
    leq_left,
    leq_left_via_codes,
    leq_right,
    rank_polynomial,
)
from .permcore import (
    Permutation,
    adjacent_transposition,
    compose,
    direct_sum,
    identity,
    inverse,
    inversions,
    length,
    non_inversions,
    parse_permutation,
)
from .posets import FinitePoset, dual, is_distributive, join_irreducibles, order_ideals, poset_isomorphic
from .rankpoly import RankPolynomial

__version__ = "0.1.0"
