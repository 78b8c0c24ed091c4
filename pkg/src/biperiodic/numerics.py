"""Exact scalars: rationals, sequence parameters and the ring Q[sqrt(D)].

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  Elements of the quadratic
extension are pairs ``rat + irr*sqrt(D)`` tied to the :class:`QuadRing`
they were built in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ContextMismatch, NonInvertible, ZeroParameter

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:/(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional sign) into a Fraction.

    Decimal and exponent notation are rejected on purpose so nothing is
    ever routed through a float.
    """
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: RationalLike) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Params:
    """The pair (a, b) with the derived constants ab and D = a^2 b^2 + 4ab."""

    a: Fraction
    b: Fraction
    ab: Fraction
    disc: Fraction

    @property
    def ring(self) -> QuadRing:
        return QuadRing(self.disc)

    def __str__(self) -> str:
        return f"a={format_rational(self.a)}, b={format_rational(self.b)}"


def make_params(a: RationalLike, b: RationalLike) -> Params:
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ZeroParameter(f"a and b must be nonzero (got a={a}, b={b})")
    ab = a * b
    return Params(a, b, ab, ab * (ab + 4))


@dataclass(frozen=True)
class QuadRing:
    """Evaluation context for Q[sqrt(D)] with a fixed rational D.

    This is a ring, not necessarily a field: when D is the square of a
    rational there are zero divisors.
    """

    disc: Fraction

    def __call__(self, rat: RationalLike = 0, irr: RationalLike = 0) -> QuadExt:
        return QuadExt(Fraction(rat), Fraction(irr), self)

    @property
    def one(self) -> QuadExt:
        return self(1)

    @property
    def zero(self) -> QuadExt:
        return self(0)

    @property
    def sqrt(self) -> QuadExt:
        return self(0, 1)


@dataclass(frozen=True)
class QuadExt:
    rat: Fraction
    irr: Fraction
    ring: QuadRing

    def _coerce(self, other) -> QuadExt:
        if isinstance(other, QuadExt):
            if other.ring != self.ring:
                raise ContextMismatch(
                    f"cannot combine elements over D={self.ring.disc} and D={other.ring.disc}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.rat + other.rat, self.irr + other.irr, self.ring)

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.rat, -self.irr, self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.rat - other.rat, self.irr - other.irr, self.ring)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.rat * other, self.irr * other, self.ring)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.ring.disc
        return QuadExt(
            self.rat * other.rat + d * self.irr * other.irr,
            self.rat * other.irr + self.irr * other.rat,
            self.ring,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return quad_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return quad_div(other, self)

    def __pow__(self, n: int) -> QuadExt:
        return quad_pow(self, n)

    def conjugate(self) -> QuadExt:
        return QuadExt(self.rat, -self.irr, self.ring)

    def norm(self) -> Fraction:
        return self.rat * self.rat - self.ring.disc * self.irr * self.irr

    def is_rational(self) -> bool:
        return self.irr == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.irr == 0 and self.rat == other
        if isinstance(other, QuadExt):
            return (self.ring, self.rat, self.irr) == (other.ring, other.rat, other.irr)
        return NotImplemented

    def __hash__(self) -> int:
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr, self.ring))

    def __repr__(self) -> str:
        return f"QuadExt({format_rational(self.rat)} + {format_rational(self.irr)}*sqrt({format_rational(self.ring.disc)}))"


def quad_alpha(p: Params) -> QuadExt:
    """(ab + sqrt(D)) / 2, the larger root of X^2 - abX - ab."""
    return p.ring(p.ab / 2, Fraction(1, 2))


def quad_beta(p: Params) -> QuadExt:
    return p.ring(p.ab / 2, Fraction(-1, 2))


def quad_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    return x * y


def quad_pow(x: QuadExt, n: int) -> QuadExt:
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    result = x.ring.one
    base = x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def quad_div(x: QuadExt, y: QuadExt) -> QuadExt:
    """Exact quotient x / y; needs norm(y) != 0 since Q[sqrt(D)] may have zero divisors."""
    y = x._coerce(y)
    n = y.norm()
    if n == 0:
        raise NonInvertible(f"{y!r} has zero norm and is not invertible")
    num = x * y.conjugate()
    return QuadExt(num.rat / n, num.irr / n, x.ring)
