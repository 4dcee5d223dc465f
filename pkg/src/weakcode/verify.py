"""Exhaustive theorem suites run against brute-force oracles.

Each suite returns a :class:`SuiteResult`; reports contain no timings so that
repeated runs serialise to identical JSON.  Work over ``S_n`` is split by the
first entry of the one-line word and may be spread over ``WEAKCODE_THREADS``
worker processes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .baseposet import base_poset, minix, realizable_as_distributive, verify_birkhoff
from .codelattice import code_lattice, join, lattice_rank_polynomial, product_leq
from .codes import code_entry, code_to_permutation, extended_code, lehmer_code
from .d4 import (
    d4_counterexample_polynomial,
    d4_group,
    d4_nonrealizability,
    generator_set,
    leaf_relabelings,
)
from .enumeration import count_posets, enumerate_posets, poset_classes
from .oracles import naive_poset_classes, weak_interval_by_scan
from .orders import (
    bruhat_interval,
    interval_left,
    is_321_avoiding,
    leq_left,
    leq_left_via_codes,
    rank_polynomial,
    weak_rank_polynomial,
)
from .permcore import (
    Permutation,
    all_permutations,
    direct_sum,
    inverse,
    inversions,
    length,
    non_inversions,
)
from .posets import (
    InvariantViolation,
    canonical_form,
    dual,
    ideal_rank_polynomial,
    is_distributive,
    join_irreducibles,
    order_ideals,
)
from .rankpoly import RankPolynomial
from .symmetry import check_lower_bound, self_dual_implies_symmetric

__all__ = ["SuiteResult", "SUITES", "run_suites", "worker_count", "MAX_DEPTH"]

MAX_DEPTH = 6
MAX_FAILURES_KEPT = 10


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok and len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append(message)

    def merge(self, checks: int, failures: list[str]) -> None:
        self.checks += checks
        room = MAX_FAILURES_KEPT - len(self.failures)
        self.failures.extend(failures[:max(room, 0)])

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "info": self.info,
        }


def worker_count() -> int:
    raw = os.environ.get("WEAKCODE_THREADS", "1")
    try:
        wanted = int(raw)
    except ValueError:
        wanted = 1
    return max(1, min(wanted, os.cpu_count() or 1))


# -- per-permutation checks: return (checks, failures) -------------------

Check = Callable[[Permutation], tuple[int, list[str]]]


def _run_block(check: Check, n: int, first: int) -> tuple[int, list[str]]:
    checks, failures = 0, []
    for w in all_permutations(n):
        if w.word[0] != first:
            continue
        c, f = check(w)
        checks += c
        failures.extend(f)
    return checks, failures


def _scan(result: SuiteResult, check: Check, ns: Iterable[int]) -> None:
    jobs = [(check, n, first) for n in ns for first in range(1, n + 1)]
    workers = worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outs = list(pool.map(_run_block, *zip(*jobs)))
    else:
        outs = [_run_block(*job) for job in jobs]
    for checks, failures in outs:
        result.merge(checks, failures)


def _check_permcore(w: Permutation) -> tuple[int, list[str]]:
    n, fails, checks = w.n, [], 0
    inv, ninv = inversions(w), non_inversions(w)
    universe = {(i, j) for i in range(1, n + 1) for j in range(i, n + 2)}
    checks += 2
    if inv & ninv or inv | ninv != universe:
        fails.append(f"Inv/Ninv of {w} do not partition the pair set")
    if length(w) != length(inverse(w)):
        fails.append(f"length({w}) != length of its inverse")
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 2):
                checks += 1
                a = (i, j) in inv and (j, k) in inv and (i, k) not in inv
                b = (i, j) in ninv and (j, k) in ninv and (i, k) not in ninv
                c = (i, j) in inv and (i, k) in ninv and (j, k) not in ninv
                d = (i, j) in ninv and (i, k) in inv and (j, k) not in inv
                if a or b or c or d:
                    fails.append(f"biconvexity fails for {w} at ({i},{j},{k})")
    return checks, fails


def _check_codes(w: Permutation) -> tuple[int, list[str]]:
    n, fails, checks = w.n, [], 0
    c, m = lehmer_code(w), extended_code(w)
    ninv = non_inversions(w)
    checks += 2
    if code_to_permutation(c) != w:
        fails.append(f"code round trip fails for {w}")
    if m.last_column() != c:
        fails.append(f"last extended-code column of {w} differs from its code")
    for i in range(1, n + 1):
        for j in range(i, n + 2):
            a = (i, j) in ninv
            cc = code_entry(c, i) <= code_entry(c, j) + m[i, j]
            checks += 1
            if a != cc:
                fails.append(f"code criterion disagrees with Ninv for {w} at ({i},{j})")
            # (b) degenerates to m(i,j) <= m(i,j) when k == j
            for k in range(j + 1, n + 2):
                checks += 1
                b = m[i, k] <= m[i, j] + m[j, k]
                if not a == b == cc:
                    fails.append(f"inversion criteria disagree for {w} at ({i},{j},{k})")
    return checks, fails


def _check_weak_codes(w: Permutation) -> tuple[int, list[str]]:
    fails, checks = [], 0
    m_w = extended_code(w)
    c_w = lehmer_code(w)
    for v in all_permutations(w.n):
        checks += 1
        below = leq_left(v, w)
        if below != leq_left_via_codes(v, w):
            fails.append(f"code criterion disagrees with inversion sets for ({v}, {w})")
        if below:
            m_v, c_v = extended_code(v), lehmer_code(v)
            if any(m_v.rows[i][j] > m_w.rows[i][j] for i in range(w.n) for j in range(w.n + 1)):
                fails.append(f"extended codes not monotone for {v} <= {w}")
            if not product_leq(c_v, c_w):
                fails.append(f"codes not monotone for {v} <= {w}")
    return checks, fails


def _check_lattice(w: Permutation) -> tuple[int, list[str]]:
    fails, checks = [], 0
    try:
        L = code_lattice(w, check=True)
    except InvariantViolation as exc:
        return 1, [str(exc)]
    checks += 3
    if not is_distributive(L.as_poset()):
        fails.append(f"code lattice of {w} is not distributive")
    if L.as_poset().rank_function() != [sum(x) for x in L.codes]:
        fails.append(f"code lattice ranks of {w} differ from entry sums")
    if lattice_rank_polynomial(w) != rank_polynomial(interval_left(w)):
        fails.append(f"rank polynomials differ for {w}")
    return checks, fails


def _check_rank_match(w: Permutation) -> tuple[int, list[str]]:
    if lattice_rank_polynomial(w) != weak_rank_polynomial(w):
        return 1, [f"rank polynomials differ for {w}"]
    return 1, []


def _check_birkhoff(w: Permutation) -> tuple[int, list[str]]:
    fails, checks = [], 0
    n = w.n
    M = base_poset(w)
    L = code_lattice(w, check=False)
    LP = L.as_poset()
    brute = {L.codes[z] for z in join_irreducibles(LP)} if n else set()
    checks += 3
    if set(M.elements) != brute:
        fails.append(f"base poset of {w} differs from brute-force join-irreducibles")
    if len(M) != length(w):
        fails.append(f"|M_w| != length for {w}")
    try:
        verify_birkhoff(w)
    except InvariantViolation as exc:
        fails.append(str(exc))
    c, m = lehmer_code(w), extended_code(w)
    inv = inversions(w)
    members = set(L.codes)
    for i, j in product(range(1, n + 1), repeat=2):
        for x, y in product(range(1, c[i - 1] + 1), range(1, c[j - 1] + 1)):
            a, b = minix(i, x, w), minix(j, y, w)
            checks += 1
            if i < j and product_leq(a, b):
                fails.append(f"part (c) fails for {w} at ({i},{x}),({j},{y})")
            if i < j and (i, j) in inv and (product_leq(a, b) or product_leq(b, a)):
                fails.append(f"part (d) fails for {w} at ({i},{x}),({j},{y})")
            if i < j and (i, j) not in inv and product_leq(b, a) != (y <= x - m[i, j]):
                fails.append(f"part (e) fails for {w} at ({i},{x}),({j},{y})")
    for i in range(1, n + 1):
        for x in range(1, c[i - 1] + 1):
            low = minix(i, x, w)
            checks += 1
            if low not in members:
                fails.append(f"minix({i},{x}) not in c(Lambda_{w})")
            if any(y[i - 1] == x and not product_leq(low, y) for y in L.codes):
                fails.append(f"minix({i},{x}) of {w} is not least with that entry")
    zero = (0,) * n
    for y in L.codes:
        checks += 1
        acc = zero
        for i in range(1, n + 1):
            if y[i - 1] > 0:
                acc = join(acc, minix(i, y[i - 1], w))
        if acc != y:
            fails.append(f"{y} is not the join of its minix parts for {w}")
    return checks, fails


def _check_stembridge(w: Permutation) -> tuple[int, list[str]]:
    if is_distributive(interval_left(w).to_poset()) != is_321_avoiding(w):
        return 1, [f"distributivity of Lambda_{w} disagrees with 321-avoidance"]
    return 1, []


def _check_interval_scan(w: Permutation) -> tuple[int, list[str]]:
    if interval_left(w).element_set() != weak_interval_by_scan(w):
        return 1, [f"interval of {w} differs from full scan"]
    return 1, []


def _check_inverse_reversal(w: Permutation) -> tuple[int, list[str]]:
    if weak_rank_polynomial(inverse(w)) != weak_rank_polynomial(w).reversed():
        return 1, [f"F(Lambda_w^-1) is not the reversal of F(Lambda_w) for {w}"]
    return 1, []


def _check_selfdual(w: Permutation) -> tuple[int, list[str]]:
    check = self_dual_implies_symmetric(w)
    if check.violation:
        return 1, [f"M_{w} is self-dual but Lambda_{w} is not rank-symmetric"]
    return 1, []


# -- suites ---------------------------------------------------------------


def _upto(depth: int, cap: int) -> range:
    return range(1, min(depth, cap) + 1)


def suite_permcore(depth: int) -> SuiteResult:
    r = SuiteResult("permcore")
    _scan(r, _check_permcore, _upto(depth, 6))
    return r


def suite_codes(depth: int) -> SuiteResult:
    r = SuiteResult("codes")
    _scan(r, _check_codes, _upto(depth, 6))
    for n in _upto(depth, 6):
        codes = {lehmer_code(w) for w in all_permutations(n)}
        box = set(product(*(range(n - i + 1) for i in range(1, n + 1))))
        r.record(codes == box, f"codes of S_{n} do not fill the box")
    return r


def suite_weakcodes(depth: int) -> SuiteResult:
    r = SuiteResult("weakcodes")
    _scan(r, _check_weak_codes, _upto(depth, 6))
    return r


def suite_intervals(depth: int) -> SuiteResult:
    r = SuiteResult("intervals")
    _scan(r, _check_interval_scan, _upto(depth, 6))
    for n in _upto(depth, 4):
        for w in all_permutations(n):
            r.record(
                interval_left(w).element_set() <= bruhat_interval(w).element_set(),
                f"weak interval of {w} is not inside its Bruhat interval",
            )
    return r


def suite_lattice(depth: int) -> SuiteResult:
    r = SuiteResult("lattice")
    _scan(r, _check_lattice, _upto(depth, 6))
    if depth >= 6:
        _scan(r, _check_rank_match, [6])
    return r


def suite_birkhoff(depth: int) -> SuiteResult:
    r = SuiteResult("birkhoff")
    _scan(r, _check_birkhoff, _upto(depth, 6))
    return r


def suite_stembridge(depth: int) -> SuiteResult:
    r = SuiteResult("stembridge")
    _scan(r, _check_stembridge, _upto(depth, 6))
    return r


def suite_identities(depth: int) -> SuiteResult:
    r = SuiteResult("identities")
    _scan(r, _check_inverse_reversal, _upto(depth, 6))
    for a, b in product(_upto(depth, 3), repeat=2):
        for v, w in product(all_permutations(a), all_permutations(b)):
            fv, fw = weak_rank_polynomial(v), weak_rank_polynomial(w)
            r.record(
                weak_rank_polynomial(direct_sum(v, w)) == fv * fw,
                f"F(Lambda_(v x w)) != F(Lambda_v) F(Lambda_w) for {v}, {w}",
            )
            if a == b and v == w:
                sym = weak_rank_polynomial(direct_sum(v, inverse(v)))
                r.record(sym == fv * fv.reversed(), f"F(Lambda_(v x v^-1)) != f f^R for {v}")
    return r


def suite_selfdual(depth: int) -> SuiteResult:
    r = SuiteResult("selfdual")
    _scan(r, _check_selfdual, _upto(depth, 6))
    n = min(depth, 5)
    converse_fails = [
        str(w)
        for w in all_permutations(n)
        if (c := self_dual_implies_symmetric(w)).symmetric and not c.self_dual
    ]
    r.info["symmetric_but_not_self_dual"] = {"n": n, "count": len(converse_fails)}
    return r


def suite_lowerbound(depth: int) -> SuiteResult:
    r = SuiteResult("lowerbound")
    for n in range(1, max(depth, 6) + 1):
        rep = check_lower_bound(n)
        r.record(rep.ok, f"lower bound check fails for n = {n}")
        r.info[str(n)] = {"bound": rep.bound, "count": rep.count}
    return r


def suite_posets(depth: int) -> SuiteResult:
    r = SuiteResult("posets")
    for k in range(1, 6):
        naive = len(naive_poset_classes(k))
        r.record(count_posets(k) == naive, f"{k}-element class count differs from naive count")
        r.info[str(k)] = naive
    for k in (6, 7):
        forms = set(poset_classes(k))
        closed = all(canonical_form(dual(P)) in forms for P in enumerate_posets(k))
        r.record(closed, f"{k}-element classes are not closed under duality")
        r.info[str(k)] = len(forms)
    for k in _upto(max(depth, 1), 5):
        for P in enumerate_posets(k):
            f = ideal_rank_polynomial(P)
            r.record(f[1] == len(P.minimal_elements()), "q coefficient != number of minimal elements")
            r.record(f[k - 1] == len(P.maximal_elements()), "q^(k-1) coefficient != number of maximal elements")
            J = order_ideals(P)
            r.record(J.rank_function() == [len(s) for s in J.labels], "J(P) is not graded by ideal size")
            r.record(is_distributive(J), "J(P) is not distributive")
    return r


def suite_counterexamples(depth: int) -> SuiteResult:
    r = SuiteResult("counterexamples")
    bruhat = rank_polynomial(bruhat_interval(Permutation((3, 4, 1, 2))))
    r.record(bruhat == RankPolynomial((1, 3, 5, 4, 1)), f"Bruhat polynomial of 3412 is {bruhat}")
    r.record(
        realizable_as_distributive(bruhat.reversed()) is None,
        "reversed Bruhat polynomial of 3412 is realised by an ideal lattice",
    )
    r.record(len(d4_group()) == 192, "D4 model does not have 192 elements")
    gens = generator_set()
    for i in (1, 3, 4):
        r.record(_order(gens[i]) == 2, f"s{i} is not an involution")
        r.record(_order(gens[2] * gens[i]) == 3, f"(s2 s{i}) does not have order 3")
        for j in (1, 3, 4):
            if i < j:
                r.record(_order(gens[i] * gens[j]) == 2, f"(s{i} s{j}) does not have order 2")
    target = RankPolynomial((1, 1, 3, 3, 4, 4, 3, 3, 1, 1))
    for labels in leaf_relabelings():
        r.record(d4_counterexample_polynomial(labels) == target, f"D4 polynomial differs under leaves {labels}")
    verdict = d4_nonrealizability()
    r.record(not verdict.realizable, "a poset realises the reduced D4 polynomial")
    r.info["d4"] = verdict.to_json()
    r.info["bruhat_3412"] = bruhat.to_json()
    return r


def _order(g) -> int:
    h, k = g, 1
    ident = type(g)(tuple(range(1, len(g.images) + 1)))
    while h != ident:
        h, k = g * h, k + 1
    return k


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "permcore": suite_permcore,
    "codes": suite_codes,
    "weakcodes": suite_weakcodes,
    "intervals": suite_intervals,
    "lattice": suite_lattice,
    "birkhoff": suite_birkhoff,
    "stembridge": suite_stembridge,
    "identities": suite_identities,
    "selfdual": suite_selfdual,
    "lowerbound": suite_lowerbound,
    "posets": suite_posets,
    "counterexamples": suite_counterexamples,
}


def run_suites(names: Iterable[str], depth: int) -> dict:
    if not 1 <= depth <= MAX_DEPTH:
        raise ValueError(f"depth must be between 1 and {MAX_DEPTH}")
    names = list(names)
    if names == ["all"]:
        names = list(SUITES)
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    results = [SUITES[name](depth) for name in names]
    return {
        "depth": depth,
        "passed": all(res.passed for res in results),
        "suites": [res.to_json() for res in results],
    }
