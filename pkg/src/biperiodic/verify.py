"""Batch verification of every identity over an index range.

Failures are returned as data.  Nothing here raises on a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .mat2 import Mat2
from .matrixseq import cassini_check, det_expected, f_binet, f_closed, f_table
from .numerics import Params, format_rational, make_params
from .sequence import q_recurrence, q_terms
from .series import expand, gf_matrix, quartic, reciprocal_gf
from .summation import partial_sum_closed, partial_sum_direct, weighted_sum_closed, weighted_sum_direct

IDENTITIES = (
    "closed_form", "determinant", "cassini", "binet", "gf",
    "sum_i", "sum_ii", "cor2", "preset_fib", "preset_pell", "preset_k",
)

# Candidate evaluation points for weighted sums, tried in this order.
_POINT_CANDIDATES = tuple(Fraction(v) for v in
                          ("2", "3", "-1/2", "5/3", "-7/4", "7", "-3/11", "13/5", "-9", "4/7"))


def weight_points(p: Params, count: int = 5) -> tuple[Fraction, ...]:
    """The first ``count`` fixed points where the quartic denominator is nonzero."""
    q = quartic(p)
    pts = tuple(x for x in _POINT_CANDIDATES if q(x) != 0)[:count]
    if len(pts) < count:
        raise ValueError(f"not enough non-singular evaluation points for {p}")
    return pts


def _fmt(v) -> object:
    if isinstance(v, Mat2):
        return v.to_json()
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    return str(v)


@dataclass(frozen=True)
class Failure:
    index: int
    expected: object
    got: object
    point: Fraction | None = None

    def to_json(self) -> dict:
        out = {"index": self.index, "expected": _fmt(self.expected), "got": _fmt(self.got)}
        if self.point is not None:
            out["x"] = format_rational(self.point)
        return out


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    params: Params
    range: tuple[int, int]
    failures: tuple[Failure, ...] = ()
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.skipped:
            return f"skipped: {self.skipped}"
        return "passed" if self.passed else "failed"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": {"a": format_rational(self.params.a), "b": format_rational(self.params.b)},
            "range": list(self.range),
            "passed": self.passed,
            "status": self.status,
            "failures": [f.to_json() for f in self.failures],
        }


def _compare(pairs: Iterable[tuple[int, object, object]]) -> tuple[Failure, ...]:
    return tuple(Failure(i, exp, got) for i, exp, got in pairs if exp != got)


def classical_sequence(k: int, stop: int) -> list[int]:
    """x_0 = 0, x_1 = 1, x_n = k*x_{n-1} + x_{n-2}: Fibonacci (k=1), Pell (k=2), k-Fibonacci."""
    xs = [0, 1]
    while len(xs) < stop:
        xs.append(k * xs[-1] + xs[-2])
    return xs[:stop]


def _check_preset(name: str, k: int, n_max: int) -> VerifyReport:
    p = make_params(k, k)
    expected = classical_sequence(k, n_max + 1)
    got = list(q_terms(p, n_max + 1))
    return VerifyReport(name, p, (0, n_max), _compare(zip(range(n_max + 1), expected, got)))


def verify_identity(identity: str, p: Params, n_max: int, k: int = 3,
                    table: list[Mat2] | None = None) -> VerifyReport:
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    if identity == "preset_fib":
        return _check_preset(identity, 1, n_max)
    if identity == "preset_pell":
        return _check_preset(identity, 2, n_max)
    if identity == "preset_k":
        return _check_preset(identity, k, n_max)

    if table is None or len(table) < n_max + 3:
        table = f_table(p, n_max + 3)
    span = range(n_max + 1)

    if identity == "closed_form":
        fails = _compare((n, table[n], f_closed(p, n)) for n in span)
        return VerifyReport(identity, p, (0, n_max), fails)
    if identity == "determinant":
        fails = _compare((n, det_expected(p, n), table[n].det()) for n in span)
        return VerifyReport(identity, p, (0, n_max), fails)
    if identity == "cassini":
        q = list(q_terms(p, n_max + 2))
        fails = _compare((n, *cassini_check(p, n, q)[::-1]) for n in range(1, n_max + 1))
        return VerifyReport(identity, p, (1, n_max), fails)
    if identity == "binet":
        if p.disc == 0:
            return VerifyReport(identity, p, (0, n_max), skipped="degenerate discriminant")
        fails = _compare((n, table[n], f_binet(p, n)) for n in span)
        return VerifyReport(identity, p, (0, n_max), fails)
    if identity in ("gf", "cor2"):
        rf = gf_matrix(p) if identity == "gf" else reciprocal_gf(p)
        series = expand(rf, n_max + 1)
        fails = _compare((n, table[n], series[n]) for n in span)
        return VerifyReport(identity, p, (0, n_max), fails)
    if identity == "sum_i":
        fails = _compare((n, partial_sum_direct(p, n, table), partial_sum_closed(p, n, table))
                         for n in range(1, n_max + 1))
        return VerifyReport(identity, p, (1, n_max), fails)
    # sum_ii
    fails = []
    for x in weight_points(p):
        for n in range(2, n_max + 1):
            direct = weighted_sum_direct(p, n, x, table)
            closed = weighted_sum_closed(p, n, x, table)
            if direct != closed:
                fails.append(Failure(n, direct, closed, x))
    return VerifyReport(identity, p, (2, n_max), tuple(fails))


def run_all_verifications(p: Params, n_max: int, k: int = 3,
                          progress: Callable[[VerifyReport], None] | None = None) -> list[VerifyReport]:
    """One report per identity, in the fixed order of IDENTITIES."""
    if n_max < 4:
        raise ValueError(f"n_max must be at least 4, got {n_max}")
    table = f_table(p, n_max + 3)
    reports = []
    for identity in IDENTITIES:
        r = verify_identity(identity, p, n_max, k=k, table=table)
        reports.append(r)
        if progress is not None:
            progress(r)
    return reports


def preset_value(k: int, n: int) -> tuple[Fraction, int]:
    """q_n at a = b = k, together with the classical two-term recurrence value."""
    return q_recurrence(make_params(k, k), n), classical_sequence(k, n + 1)[n]
