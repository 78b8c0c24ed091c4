"""Polynomials, matrix rational functions and truncated power series.

Used to check the matrix generating function and the expansion of
sum F_k x^{-k} in t = 1/x coefficient by coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonUnitDenominator
from .mat2 import Mat2
from .numerics import Params


class Poly:
    """Univariate polynomial with exact coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Poly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> float:
        """Degree, with -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reversed(self, degree: int) -> Poly:
        """x^degree * P(1/x); degree must be at least deg P."""
        if self.degree > degree:
            raise ValueError(f"cannot reverse degree {self.degree} polynomial at degree {degree}")
        return Poly(self[degree - i] for i in range(degree + 1))

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


X = Poly([0, 1])


@dataclass(frozen=True)
class MatRatFunc:
    """A 2x2 matrix of polynomials over one shared scalar denominator."""

    numerator: Mat2
    denominator: Poly

    def __post_init__(self):
        if not self.denominator:
            raise ZeroDivisionError("denominator polynomial is zero")

    def __add__(self, other: MatRatFunc) -> MatRatFunc:
        if not isinstance(other, MatRatFunc):
            return NotImplemented
        if self.denominator != other.denominator:
            raise ValueError("only rational functions over the same denominator can be added")
        return MatRatFunc(self.numerator + other.numerator, self.denominator)

    def reciprocal_substitution(self) -> MatRatFunc:
        """Rewrite R(x) as a rational function of t with x = 1/t."""
        d = int(max(self.denominator.degree, *(e.degree for e in self.numerator.entries())))
        return MatRatFunc(self.numerator.map(lambda e: e.reversed(d)), self.denominator.reversed(d))


@dataclass(frozen=True)
class SeriesTrunc:
    """sum_{i < order} C_i t^i with exact Mat2 coefficients."""

    coefficients: tuple[Mat2, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i: int) -> Mat2:
        return self.coefficients[i]

    def __add__(self, other: SeriesTrunc) -> SeriesTrunc:
        n = min(self.order, other.order)
        return SeriesTrunc(tuple(self[i] + other[i] for i in range(n)))

    def evaluate(self, t: Fraction) -> Mat2:
        acc = Mat2.zero()
        for c in reversed(self.coefficients):
            acc = acc.scale(t) + c
        return acc


def _series_divide(num: Poly, den: Poly, order: int) -> list[Fraction]:
    """First ``order`` Maclaurin coefficients of num/den."""
    d0 = den[0]
    if d0 == 0:
        raise NonUnitDenominator("denominator has zero constant term")
    out: list[Fraction] = []
    dcs = den.coeffs
    for i in range(order):
        acc = num[i]
        for j in range(1, min(i, len(dcs) - 1) + 1):
            acc -= dcs[j] * out[i - j]
        out.append(acc / d0)
    return out


def expand(rf: MatRatFunc, order: int) -> SeriesTrunc:
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    cols = [_series_divide(e, rf.denominator, order) for e in rf.numerator.entries()]
    return SeriesTrunc(tuple(Mat2(*(c[i] for c in cols)) for i in range(order)))


def quartic(p: Params) -> Poly:
    """1 - (ab+2) x^2 + x^4, the denominator shared by both generating functions."""
    return Poly([1, 0, -(p.ab + 2), 0, 1])


def gf_matrix(p: Params) -> MatRatFunc:
    a, b, ab = p.a, p.b, p.ab
    r = b / a
    num = Mat2(
        Poly([1, b, -1]),
        Poly([0, r, b, -r]),
        Poly([0, 1, a, -1]),
        Poly([1, 0, -(ab + 1), b]),
    )
    return MatRatFunc(num, quartic(p))


def reciprocal_gf_in_x(p: Params) -> MatRatFunc:
    """sum_k F_k x^{-k} written as a rational function of x."""
    a, b, ab = p.a, p.b, p.ab
    r = b / a
    inner = Mat2(
        Poly([0, -1, b, 1]),
        Poly([-r, b, r]),
        Poly([-1, a, 1]),
        Poly([b, -(ab + 1), 0, 1]),
    )
    return MatRatFunc(inner.map(lambda e: e * X), quartic(p))


def reciprocal_gf(p: Params) -> MatRatFunc:
    """The same series as a rational function of t = 1/x, ready for expand()."""
    return reciprocal_gf_in_x(p).reciprocal_substitution()


def series_matches(series: SeriesTrunc, expected: Sequence[Mat2]) -> list[int]:
    """Indices where the series disagrees with ``expected``."""
    return [i for i, (c, e) in enumerate(zip(series.coefficients, expected)) if c != e]
