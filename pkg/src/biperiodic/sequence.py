"""The scalar bi-periodic Fibonacci sequence q_n.

q_0 = 0, q_1 = 1 and q_n = a*q_{n-1} + q_{n-2} for even n,
q_n = b*q_{n-1} + q_{n-2} for odd n.  The value q_{-1} = 1 is also
supported; nothing below -1 is.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .errors import IndexOutOfRange
from .mat2 import Mat2
from .numerics import Params


def epsilon(n: int) -> int:
    """Parity indicator n - 2*floor(n/2), so epsilon(-1) == 1."""
    return n - 2 * (n // 2)


def _check_index(n: int, lowest: int = -1) -> None:
    if n < lowest:
        raise IndexOutOfRange(f"index {n} is below the supported minimum {lowest}")


def q_terms(p: Params, stop: int) -> Iterator[Fraction]:
    """Yield q_0, q_1, ..., q_{stop-1}."""
    prev, cur = Fraction(1), Fraction(0)  # q_{-1}, q_0
    for n in range(stop):
        yield cur
        nxt = n + 1
        prev, cur = cur, (p.a if nxt % 2 == 0 else p.b) * cur + prev


def q_recurrence(p: Params, n: int) -> Fraction:
    _check_index(n)
    if n == -1:
        return Fraction(1)
    prev, cur = Fraction(1), Fraction(0)
    for k in range(1, n + 1):
        prev, cur = cur, (p.a if k % 2 == 0 else p.b) * cur + prev
    return cur


def _class_pair(p: Params, n: int) -> tuple[Fraction, Fraction]:
    """(q_n, q_{n+2}) in O(log n) steps.

    Both parity classes obey x_{k+2} = (ab+2) x_k - x_{k-2}, so with
    T = [[ab+2, -1], [1, 0]] we get (s_{m+1}, s_m) = T^m (s_1, s_0).
    """
    _check_index(n)
    if n == -1:
        return Fraction(1), Fraction(1)
    if n % 2 == 0:
        s0, s1 = Fraction(0), p.a          # q_0, q_2
    else:
        s0, s1 = Fraction(1), p.ab + 1     # q_1, q_3
    m = n // 2
    # Power the integer matrix D*T (c = N/D) and divide by D^m once at the end;
    # this avoids a gcd per entry operation inside the loop.
    c = p.ab + 2
    num, den = c.numerator, c.denominator
    t = Mat2(num, -den, den, 0) ** m
    scale = Fraction(1, den ** m)
    return (t.e21 * s1 + t.e22 * s0) * scale, (t.e11 * s1 + t.e12 * s0) * scale


def q_fast(p: Params, n: int) -> Fraction:
    return _class_pair(p, n)[0]


def q_neighbours(p: Params, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(q_{n-1}, q_n, q_{n+1}) for n >= 0, via the fast path."""
    _check_index(n, 0)
    lo, hi = _class_pair(p, n - 1)
    return lo, q_fast(p, n), hi


def q_binet(p: Params, n: int) -> Fraction:
    """q_n read off entry (2,1) of the Binet-evaluated matrix F_n."""
    from .matrixseq import f_binet

    _check_index(n, 0)
    return f_binet(p, n).e21
