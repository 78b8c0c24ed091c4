"""Command-line entry point: ``biperiodic <command> [options]``.

Exit codes: 0 success, 1 an identity check failed, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import BiperiodicError
from .matrixseq import cassini_check, det_expected, f_binet, f_closed, f_det, f_recurrence
from .numerics import format_rational, make_params, parse_rational
from .sequence import q_binet, q_fast, q_recurrence
from .series import expand, gf_matrix, reciprocal_gf
from .summation import partial_sum_report, weighted_sum_report
from .verify import IDENTITIES, preset_value, run_all_verifications, verify_identity

PRESETS = {"fibonacci": 1, "pell": 2}


class UsageError(Exception):
    pass


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biperiodic",
        description="Exact bi-periodic Fibonacci numbers and matrix sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name: str, help: str, n: bool = True, params: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        if params:
            sp.add_argument("--a", type=_rational, required=True, help="rational p/q, nonzero")
            sp.add_argument("--b", type=_rational, required=True, help="rational p/q, nonzero")
        if n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    sp = cmd("q", "scalar term q_n")
    sp.add_argument("--method", choices=("recurrence", "fast", "binet"), default="fast")
    sp = cmd("matrix", "matrix term F_n")
    sp.add_argument("--method", choices=("recurrence", "closed", "binet"), default="recurrence")
    cmd("det", "determinant of F_n with its expected value")
    cmd("cassini", "both sides of the Cassini identity at n")
    cmd("binet", "F_n evaluated through the Binet formula")
    sp = cmd("gf", "dump generating-function coefficients", n=False)
    sp.add_argument("--order", type=_nonneg, default=16)
    sp.add_argument("--reciprocal", action="store_true",
                    help="expand sum F_k x^-k in t = 1/x instead")
    cmd("sum", "F_0 + ... + F_{n-1}, direct and closed")
    sp = cmd("wsum", "sum of F_k x^-k for k <= n, direct and closed")
    sp.add_argument("--x", type=_rational, required=True)
    sp = cmd("verify", "check identities over a range", n=False)
    sp.add_argument("--identity", choices=("all",) + IDENTITIES, default="all")
    sp.add_argument("--n-max", type=int, default=128)
    sp.add_argument("--k", type=int, default=3, help="k used by the k-Fibonacci preset check")
    sp = cmd("preset", "classical special cases a = b = k", params=False)
    sp.add_argument("--which", choices=("fibonacci", "pell", "k-fibonacci"), required=True)
    sp.add_argument("--k", type=int)
    return parser


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _params(args):
    try:
        return make_params(args.a, args.b)
    except BiperiodicError as exc:
        raise UsageError(f"--a/--b: {exc}") from None


def _index(args, lowest: int) -> int:
    if args.n < lowest:
        raise UsageError(f"--n: must be >= {lowest} for '{args.command}', got {args.n}")
    return args.n


def _base(args) -> dict:
    return {"a": format_rational(args.a), "b": format_rational(args.b)}


def run(args: argparse.Namespace) -> int:
    """Execute a parsed command; returns the process exit code."""
    c = args.command
    if c == "preset":
        if args.which == "k-fibonacci":
            if args.k is None:
                raise UsageError("--k: required for --which k-fibonacci")
            if args.k == 0:
                raise UsageError("--k: must be nonzero")
            k = args.k
        else:
            k = PRESETS[args.which]
        n = _index(args, 0)
        value, classical = preset_value(k, n)
        _emit(args, format_rational(value), {"which": args.which, "k": k, "n": n,
                                             "q": format_rational(value),
                                             "classical": str(classical),
                                             "matches": value == classical})
        return 0 if value == classical else 1

    p = _params(args)
    base = _base(args)

    if c == "q":
        n = _index(args, 0 if args.method == "binet" else -1)
        fn = {"recurrence": q_recurrence, "fast": q_fast, "binet": q_binet}[args.method]
        v = fn(p, n)
        _emit(args, format_rational(v), {**base, "n": n, "q": format_rational(v)})
        return 0
    if c in ("matrix", "binet"):
        n = _index(args, 0)
        method = "binet" if c == "binet" else args.method
        fn = {"recurrence": f_recurrence, "closed": f_closed, "binet": f_binet}[method]
        m = fn(p, n)
        _emit(args, str(m), {**base, "n": n, "matrix": m.to_json()})
        return 0
    if c == "det":
        n = _index(args, 0)
        got, want = f_det(p, n), det_expected(p, n)
        _emit(args, format_rational(got),
              {**base, "n": n, "det": format_rational(got), "expected": format_rational(want)})
        return 0 if got == want else 1
    if c == "cassini":
        n = _index(args, 1)
        lhs, rhs = cassini_check(p, n)
        _emit(args, f"lhs={format_rational(lhs)} rhs={format_rational(rhs)}",
              {**base, "n": n, "lhs": format_rational(lhs), "rhs": format_rational(rhs),
               "matches": lhs == rhs})
        return 0 if lhs == rhs else 1
    if c == "gf":
        if args.order < 1:
            raise UsageError("--order: must be positive")
        rf = reciprocal_gf(p) if args.reciprocal else gf_matrix(p)
        coeffs = expand(rf, args.order).coefficients
        if args.format == "json":
            print("\n".join(json.dumps(m.to_json()) for m in coeffs))
        else:
            print("\n\n".join(f"[{i}]\n{m}" for i, m in enumerate(coeffs)))
        return 0
    if c == "sum":
        report = partial_sum_report(p, _index(args, 1))
        return _emit_sum(args, report)
    if c == "wsum":
        report = weighted_sum_report(p, _index(args, 2), args.x)
        return _emit_sum(args, report)
    if c == "verify":
        if args.n_max < 4:
            raise UsageError(f"--n-max: must be >= 4, got {args.n_max}")
        if args.identity == "all":
            reports = run_all_verifications(p, args.n_max, k=args.k)
        else:
            reports = [verify_identity(args.identity, p, args.n_max, k=args.k)]
        if args.format == "json":
            print(json.dumps([r.to_json() for r in reports]))
        else:
            for r in reports:
                lo, hi = r.range
                extra = f" ({len(r.failures)} failures)" if r.failures else ""
                print(f"{r.identity:<12} n={lo}..{hi}  {r.status}{extra}")
        return 0 if all(r.passed for r in reports) else 1
    raise UsageError(f"unknown command {c!r}")


def _emit_sum(args, report) -> int:
    text = f"direct:\n{report.direct}\nclosed:\n{report.closed}\nmatches: {report.matches}"
    _emit(args, text, report.to_json())
    return 0 if report.matches else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except BiperiodicError as exc:
        print(f"{parser.prog} {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
