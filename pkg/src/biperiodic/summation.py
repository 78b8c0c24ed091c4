"""Finite sums of the matrix sequence: plain partial sums and x^{-k} weighted sums.

Each sum has a direct evaluation and a closed form.  For the weighted sum
the closed form is kept as a Laurent polynomial in x (exponent -> matrix)
so it can be compared term by term with :func:`telescoping_oracle`,
which multiplies the partial sum by 1 - (ab+2)x^2 + x^4 by brute-force
convolution and uses no recurrence at all.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IndexOutOfRange, SingularDenominator, ZeroEvaluationPoint
from .mat2 import Mat2
from .matrixseq import f_initial, f_table
from .numerics import Params, RationalLike
from .sequence import epsilon
from .series import quartic


@dataclass(frozen=True)
class SumReport:
    n: int
    direct: Mat2
    closed: Mat2

    @property
    def matches(self) -> bool:
        return self.direct == self.closed

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "direct": self.direct.to_json(),
            "closed": self.closed.to_json(),
            "matches": self.matches,
        }


def _table(p: Params, stop: int, terms: Sequence[Mat2] | None) -> Sequence[Mat2]:
    if terms is not None and len(terms) >= stop:
        return terms
    return f_table(p, stop)


def partial_sum_direct(p: Params, n: int, terms: Sequence[Mat2] | None = None) -> Mat2:
    """F_0 + ... + F_{n-1}."""
    if n < 1:
        raise IndexOutOfRange(f"partial sums need n >= 1, got {n}")
    t = _table(p, n, terms)
    acc = Mat2.zero()
    for k in range(n):
        acc = acc + t[k]
    return acc


def partial_sum_closed(p: Params, n: int, terms: Sequence[Mat2] | None = None) -> Mat2:
    if n < 1:
        raise IndexOutOfRange(f"partial sums need n >= 1, got {n}")
    t = _table(p, n + 1, terms)
    a, b = p.a, p.b
    f0, f1 = f_initial(p)
    if epsilon(n):
        head = a * t[n] + b * t[n - 1]
    else:
        head = b * t[n] + a * t[n - 1]
    num = head - a * f1 + p.ab * f0 - b * f0
    return num.scale(1 / p.ab)


def partial_sum_report(p: Params, n: int, terms: Sequence[Mat2] | None = None) -> SumReport:
    return SumReport(n, partial_sum_direct(p, n, terms), partial_sum_closed(p, n, terms))


def _check_point(x: Fraction) -> None:
    if x == 0:
        raise ZeroEvaluationPoint("weighted sums need x != 0")


def weighted_sum_direct(p: Params, n: int, x: RationalLike,
                        terms: Sequence[Mat2] | None = None) -> Mat2:
    """sum_{k=0}^{n} F_k x^{-k}, by Horner's rule in 1/x."""
    x = Fraction(x)
    _check_point(x)
    if n < 0:
        raise IndexOutOfRange(f"weighted sums need n >= 0, got {n}")
    t = _table(p, n + 1, terms)
    inv = 1 / x
    acc = Mat2.zero()
    for k in range(n, -1, -1):
        acc = acc.scale(inv) + t[k]
    return acc


def _laurent_add(acc: dict, exponent: int, m: Mat2) -> None:
    acc[exponent] = acc[exponent] + m if exponent in acc else m


def _prune(acc: dict) -> dict[int, Mat2]:
    zero = Mat2.zero()
    return {e: m for e, m in sorted(acc.items()) if m != zero}


def telescoping_oracle(p: Params, n: int, terms: Sequence[Mat2] | None = None) -> dict[int, Mat2]:
    """(1 - (ab+2)x^2 + x^4) * sum_{k<=n} F_k x^{-k} as {exponent of x: coefficient}.

    Plain convolution of the quartic with the truncated sum; zero
    coefficients are dropped.
    """
    if n < 0:
        raise IndexOutOfRange(f"weighted sums need n >= 0, got {n}")
    t = _table(p, n + 1, terms)
    acc: dict[int, Mat2] = defaultdict(Mat2.zero)
    q = quartic(p)
    for k in range(n + 1):
        for j, c in enumerate(q.coeffs):
            if c:
                acc[j - k] = acc[j - k] + c * t[k]
    return _prune(acc)


def weighted_sum_numerator(p: Params, n: int, terms: Sequence[Mat2] | None = None) -> dict[int, Mat2]:
    """Closed-form numerator of the weighted sum as {exponent of x: coefficient}.

    Telescoping with F_{k+2} = (ab+2) F_k - F_{k-2} leaves four tail terms,
        F_{n-1} x^{1-n} - F_{n+1} x^{3-n} + F_n x^{-n} - F_{n+2} x^{2-n},
    plus the fixed head x^4 F_0 + x^3 F_1 - x^2((ab+1)F_0 - aF_1) - x(F_1 - bF_0).
    """
    if n < 2:
        raise IndexOutOfRange(f"the closed weighted sum needs n >= 2, got {n}")
    t = _table(p, n + 3, terms)
    f0, f1 = f_initial(p)
    acc: dict[int, Mat2] = {}
    _laurent_add(acc, 1 - n, t[n - 1])
    _laurent_add(acc, 3 - n, -t[n + 1])
    _laurent_add(acc, -n, t[n])
    _laurent_add(acc, 2 - n, -t[n + 2])
    _laurent_add(acc, 4, f0)
    _laurent_add(acc, 3, f1)
    _laurent_add(acc, 2, -((p.ab + 1) * f0 - p.a * f1))
    _laurent_add(acc, 1, -(f1 - p.b * f0))
    return _prune(acc)


def evaluate_laurent(terms: dict[int, Mat2], x: Fraction) -> Mat2:
    acc = Mat2.zero()
    for e, m in terms.items():
        acc = acc + m.scale(x ** e)
    return acc


def weighted_sum_closed(p: Params, n: int, x: RationalLike,
                        terms: Sequence[Mat2] | None = None) -> Mat2:
    x = Fraction(x)
    _check_point(x)
    if n < 2:
        raise IndexOutOfRange(f"the closed weighted sum needs n >= 2, got {n}")
    den = quartic(p)(x)
    if den == 0:
        raise SingularDenominator(f"1 - (ab+2)x^2 + x^4 vanishes at x={x} for {p}")
    return evaluate_laurent(weighted_sum_numerator(p, n, terms), x).scale(1 / den)


def weighted_sum_report(p: Params, n: int, x: RationalLike,
                        terms: Sequence[Mat2] | None = None) -> SumReport:
    return SumReport(n, weighted_sum_direct(p, n, x, terms), weighted_sum_closed(p, n, x, terms))
