"""2x2 matrices over any commutative ring whose elements support + - *.

Entries are normally Fractions; the Binet evaluation stores QuadExt
entries and the generating functions store polynomial entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .numerics import format_rational, parse_rational


@dataclass(frozen=True)
class Mat2:
    e11: Any
    e12: Any
    e21: Any
    e22: Any

    @classmethod
    def identity(cls) -> Mat2:
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def zero(cls) -> Mat2:
        return cls(Fraction(0), Fraction(0), Fraction(0), Fraction(0))

    def entries(self) -> tuple:
        return (self.e11, self.e12, self.e21, self.e22)

    def map(self, fn: Callable[[Any], Any]) -> Mat2:
        return Mat2(fn(self.e11), fn(self.e12), fn(self.e21), fn(self.e22))

    def __add__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.e11 + other.e11, self.e12 + other.e12,
                    self.e21 + other.e21, self.e22 + other.e22)

    def __sub__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.e11 - other.e11, self.e12 - other.e12,
                    self.e21 - other.e21, self.e22 - other.e22)

    def __neg__(self) -> Mat2:
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def scale(self, s) -> Mat2:
        """Scalar multiple s*M; the scalar is written on the left."""
        return Mat2(s * self.e11, s * self.e12, s * self.e21, s * self.e22)

    def __mul__(self, s) -> Mat2:
        if isinstance(s, Mat2):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def __pow__(self, n: int) -> Mat2:
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Mat2(1, 0, 0, 1)  # int identity keeps integer matrices integral
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def det(self):
        return self.e11 * self.e22 - self.e12 * self.e21

    def to_json(self) -> dict:
        return {
            "e11": format_rational(self.e11),
            "e12": format_rational(self.e12),
            "e21": format_rational(self.e21),
            "e22": format_rational(self.e22),
        }

    @classmethod
    def from_json(cls, obj: dict) -> Mat2:
        return cls(*(parse_rational(obj[k]) for k in ("e11", "e12", "e21", "e22")))

    def __str__(self) -> str:
        cells = [format_rational(e) for e in self.entries()]
        w1 = max(len(cells[0]), len(cells[2]))
        w2 = max(len(cells[1]), len(cells[3]))
        return (f"[{cells[0]:>{w1}}  {cells[1]:>{w2}}]\n"
                f"[{cells[2]:>{w1}}  {cells[3]:>{w2}}]")
