"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails or a counterexample
search finds a witness, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from .baseposet import base_poset, realizable_as_distributive
from .codelattice import code_lattice
from .codes import code_label, extended_code, lehmer_code
from .d4 import d4_nonrealizability
from .emit import dumps, emit_dot
from .enumeration import count_posets
from .orders import bruhat_interval, interval, rank_polynomial
from .permcore import Permutation, parse_permutation
from .rankpoly import RankPolynomial
from .symmetry import symmetric_scan
from .verify import MAX_DEPTH, run_suites

__all__ = ["RunConfig", "run", "main", "build_parser"]

ORDER_CHOICES = ("left", "right", "bruhat")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    perm: Permutation | None = None
    order: str = "left"
    n: int = 5
    emit: str = "text"
    poly: tuple[int, ...] = ()
    min_count: int | None = None
    max_count: int | None = None
    which: str | None = None
    suites: list[str] = field(default_factory=lambda: ["all"])
    oracle_depth: int = 5

    def __post_init__(self) -> None:
        if self.n < 1:
            raise UsageError("n must be at least 1")
        if not 1 <= self.oracle_depth <= MAX_DEPTH:
            raise UsageError(f"depth must be between 1 and {MAX_DEPTH}")


def _perm_arg(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed permutation {text!r}: {exc}") from None


def _poly_arg(text: str) -> tuple[int, ...]:
    try:
        coeffs = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed polynomial {text!r}") from None
    if any(c < 0 for c in coeffs) or not any(coeffs):
        raise argparse.ArgumentTypeError(f"polynomial {text!r} needs non-negative, not all zero coefficients")
    return coeffs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weakcode",
        description="Lehmer-code lattices of left weak order intervals.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def perm_cmd(name: str, emits: tuple[str, ...], help: str, order: bool = False):
        p = sub.add_parser(name, help=help)
        p.add_argument("--perm", type=_perm_arg, required=True, help="one-line notation, e.g. 3,2,5,1,4")
        p.add_argument("--emit", choices=emits, default=emits[0])
        if order:
            p.add_argument("--order", choices=ORDER_CHOICES, default="left")
        return p

    perm_cmd("code", ("text", "json"), "Lehmer code")
    perm_cmd("extcode", ("text", "json"), "extended Lehmer code matrix")
    perm_cmd("interval", ("json", "dot", "text"), "interval [id, w]", order=True)
    perm_cmd("codelattice", ("json", "dot", "text"), "Lehmer codes of [id, w] under the product order")
    perm_cmd("baseposet", ("json", "dot", "text"), "poset of join-irreducibles M_w")
    perm_cmd("rankgen", ("text", "json"), "rank-generating function of [id, w]", order=True)

    p = sub.add_parser("symmetric-scan", help="rank-symmetric intervals in S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=("json", "text"), default="json")

    p = sub.add_parser("realizable", help="search for P with F(J(P), q) equal to a polynomial")
    p.add_argument("--poly", type=_poly_arg, required=True, help="ascending coefficients, e.g. 1,4,5,3,1")
    p.add_argument("--min", dest="min_count", type=int, default=None, help="number of minimal elements of P")
    p.add_argument("--max", dest="max_count", type=int, default=None, help="number of maximal elements of P")
    p.add_argument("--emit", choices=("text", "json"), default="text")

    p = sub.add_parser("counterexample", help="the Bruhat 3412 and D4 counterexamples")
    p.add_argument("which", choices=("bruhat-3412", "d4"))
    p.add_argument("--emit", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run the exhaustive theorem suites")
    p.add_argument("--suite", default="all", help="'all' or a comma-separated list of suites")
    p.add_argument("--depth", type=int, default=5, help=f"largest n for exhaustive checks (max {MAX_DEPTH})")
    p.add_argument("--emit", choices=("json", "text"), default="json")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        subcommand=args.subcommand,
        perm=getattr(args, "perm", None),
        order=getattr(args, "order", "left"),
        n=getattr(args, "n", 5),
        emit=args.emit,
        poly=getattr(args, "poly", ()),
        min_count=getattr(args, "min_count", None),
        max_count=getattr(args, "max_count", None),
        which=getattr(args, "which", None),
        suites=getattr(args, "suite", "all").split(","),
        oracle_depth=getattr(args, "depth", 5),
    )


def _fmt_tuple(xs) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


def run(config: RunConfig) -> tuple[int, str]:
    """Dispatch one subcommand; returns ``(exit status, output text)``."""
    cmd, emit, w = config.subcommand, config.emit, config.perm
    if cmd == "code":
        c = lehmer_code(w)
        return 0, dumps(list(c)) if emit == "json" else _fmt_tuple(c) + "\n"
    if cmd == "extcode":
        m = extended_code(w)
        if emit == "json":
            return 0, dumps(m.to_json())
        return 0, "".join(" ".join(map(str, row)) + "\n" for row in m.rows)
    if cmd == "interval":
        P = interval(w, config.order)
        if emit == "json":
            return 0, dumps(P.to_json())
        if emit == "dot":
            return 0, emit_dot(P, "interval")
        lines = [f"rank {r}: " + " ".join(str(u) for u in P.elements if P.rank[u] == r)
                 for r in sorted(set(P.rank.values()))]
        lines.append(f"F = {rank_polynomial(P)}")
        return 0, "\n".join(lines) + "\n"
    if cmd == "codelattice":
        L = code_lattice(w)
        if emit == "json":
            return 0, dumps(L.to_json())
        if emit == "dot":
            return 0, emit_dot(L.as_poset(), "codelattice")
        lines = [f"rank {r}: " + " ".join(code_label(c) for c in L.codes if sum(c) == r)
                 for r in sorted({sum(c) for c in L.codes})]
        lines.append(f"F = {L.rank_polynomial()}")
        return 0, "\n".join(lines) + "\n"
    if cmd == "baseposet":
        M = base_poset(w)
        if emit == "json":
            return 0, dumps(M.to_json())
        if emit == "dot":
            return 0, emit_dot(M.poset, "baseposet")
        lines = [f"C_{i}: " + " ".join(code_label(c) for c in ch) for i, ch in sorted(M.chains.items()) if ch]
        lines += [f"{code_label(M.elements[a])} < {code_label(M.elements[b])}" for a, b in M.poset.sorted_covers()]
        return 0, "\n".join(lines) + "\n"
    if cmd == "rankgen":
        f = rank_polynomial(interval(w, config.order))
        return 0, dumps(f.to_json()) if emit == "json" else f"{f}\n"
    if cmd == "symmetric-scan":
        rows = symmetric_scan(config.n)
        if emit == "json":
            return 0, dumps({"n": config.n, "count": len(rows), "permutations": rows})
        out = [f"{Permutation(tuple(r['perm']))}  {RankPolynomial(tuple(r['rank_polynomial']))}"
               f"  self-dual={r['base_poset_self_dual']}" for r in rows]
        out.append(f"{len(rows)} rank-symmetric permutations in S_{config.n}")
        return 0, "\n".join(out) + "\n"
    if cmd == "realizable":
        f = RankPolynomial(config.poly)
        if f.degree > 8:
            raise UsageError(f"degree {f.degree} is too large (limit 8)")
        P = realizable_as_distributive(f, config.min_count, config.max_count)
        if emit == "json":
            return 0, dumps({"polynomial": f.to_json(), "witness": None if P is None else P.to_json()})
        if P is None:
            return 0, "NONE\n"
        return 0, f"witness: size {P.size}, covers {P.sorted_covers()}\n"
    if cmd == "counterexample":
        return _counterexample(config.which, emit)
    if cmd == "verify":
        report = run_suites(config.suites, config.oracle_depth)
        status = 0 if report["passed"] else 1
        if emit == "json":
            return status, dumps(report)
        lines = [
            f"{'PASS' if s['passed'] else 'FAIL'} {s['name']} ({s['checks']} checks)"
            + "".join(f"\n    {msg}" for msg in s["failures"])
            for s in report["suites"]
        ]
        return status, "\n".join(lines) + "\n"
    raise UsageError(f"unknown subcommand {cmd!r}")


def _counterexample(which: str | None, emit: str) -> tuple[int, str]:
    if which == "bruhat-3412":
        start = time.perf_counter()
        f = rank_polynomial(bruhat_interval(Permutation((3, 4, 1, 2))))
        g = f.reversed()
        witness = realizable_as_distributive(g)
        elapsed = time.perf_counter() - start
        data = {
            "polynomial": f.to_json(),
            "dual_polynomial": g.to_json(),
            "classes_searched": count_posets(g.degree),
            "witness": None if witness is None else witness.to_json(),
            "verdict": "NONE" if witness is None else "REALIZABLE",
        }
        status = 0 if witness is None else 1
        if emit == "json":
            return status, dumps(data)
        return status, (
            f"F(Bruhat [id, 3412]) = {f}\nF(dual) = {g}\n"
            f"search over {data['classes_searched']} classes of 4-element posets: {data['verdict']}\n"
            f"time: {elapsed:.3f} s\n"
        )
    if which == "d4":
        v = d4_nonrealizability()
        status = 1 if v.realizable else 0
        if emit == "json":
            return status, dumps(v.to_json())
        text = (
            f"F(Lambda_w) = {v.polynomial}\n"
            f"reduced target = {v.reduced}\n"
            f"3 minimal / 3 maximal classes searched: {v.constrained_classes}: "
            f"{'NONE' if v.constrained_witness is None else 'WITNESS FOUND'}\n"
            f"all {v.unconstrained_classes} classes searched: "
            f"{'NONE' if v.unconstrained_witness is None else 'WITNESS FOUND'}\n"
            f"time: {v.seconds:.3f} s\n"
        )
        for label, P in (("constrained", v.constrained_witness), ("unconstrained", v.unconstrained_witness)):
            if P is not None:
                text += f"{label} witness covers: {P.sorted_covers()}\n"
        return status, text
    raise UsageError(f"unknown counterexample {which!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        status, text = run(config)
    except UsageError as exc:
        print(f"weakcode: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"weakcode: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
