"""The bi-periodic Fibonacci matrix sequence F_n(a, b).

F_0 = I, F_1 = [[b, b/a], [1, 0]] and F_n = a*F_{n-1} + F_{n-2} (n even),
F_n = b*F_{n-1} + F_{n-2} (n odd).  Besides the defining recurrence this
module evaluates F_n through the q-sequence closed form and through the
Binet formula in Q[sqrt(D)].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DegenerateDiscriminant, IndexOutOfRange, InternalIrrationalResidue
from .mat2 import Mat2
from .numerics import Params, QuadExt, quad_alpha, quad_beta, quad_pow
from .sequence import epsilon, q_neighbours


def f_initial(p: Params) -> tuple[Mat2, Mat2]:
    return Mat2.identity(), Mat2(p.b, p.b / p.a, Fraction(1), Fraction(0))


def f_terms(p: Params, stop: int) -> Iterator[Mat2]:
    """Yield F_0, ..., F_{stop-1} by iterating the recurrence."""
    prev, cur = f_initial(p)
    if stop > 0:
        yield prev
    for n in range(2, stop + 1):
        yield cur
        prev, cur = cur, (p.a if n % 2 == 0 else p.b) * cur + prev


def f_table(p: Params, stop: int) -> list[Mat2]:
    return list(f_terms(p, stop))


def f_recurrence(p: Params, n: int) -> Mat2:
    if n < 0:
        raise IndexOutOfRange(f"matrix index must be >= 0, got {n}")
    f0, f1 = f_initial(p)
    if n == 0:
        return f0
    prev, cur = f0, f1
    for k in range(2, n + 1):
        prev, cur = cur, (p.a if k % 2 == 0 else p.b) * cur + prev
    return cur


def f_closed(p: Params, n: int) -> Mat2:
    """F_n assembled from q_{n-1}, q_n, q_{n+1} and the parity of n."""
    if n < 0:
        raise IndexOutOfRange(f"matrix index must be >= 0, got {n}")
    q_prev, q_n, q_next = q_neighbours(p, n)
    r = p.b / p.a
    w = r if epsilon(n) else Fraction(1)
    return Mat2(w * q_next, r * q_n, q_n, w * q_prev)


def f_det(p: Params, n: int) -> Fraction:
    return f_recurrence(p, n).det()


def det_expected(p: Params, n: int) -> Fraction:
    """(-b/a)^epsilon(n)."""
    return -p.b / p.a if epsilon(n) else Fraction(1)


def cassini_check(p: Params, n: int, q: list[Fraction] | None = None) -> tuple[Fraction, Fraction]:
    """Both sides of the bi-periodic Cassini identity at index n.

    ``q`` may be a precomputed table holding at least q_0..q_{n+1}.
    """
    if n < 1:
        raise IndexOutOfRange(f"Cassini identity needs n >= 1, got {n}")
    if q is not None and len(q) > n + 1:
        q_prev, q_n, q_next = q[n - 1], q[n], q[n + 1]
    else:
        q_prev, q_n, q_next = q_neighbours(p, n)
    if epsilon(n):
        lhs = p.b * q_next * q_prev - p.a * q_n * q_n
    else:
        lhs = p.a * q_next * q_prev - p.b * q_n * q_n
    rhs = p.a * (-1) ** n
    return lhs, rhs


@dataclass(frozen=True)
class BinetCoefficients:
    """The matrix coefficients A1 and B1 multiplying the root-power differences for index n."""

    n: int
    A1: Mat2
    B1: Mat2


def _require_distinct_roots(p: Params) -> None:
    if p.disc == 0:
        raise DegenerateDiscriminant(
            f"ab = -4 ({p}) gives D = 0: the characteristic roots coincide"
        )


def binet_coefficients(p: Params, n: int) -> BinetCoefficients:
    if n < 0:
        raise IndexOutOfRange(f"matrix index must be >= 0, got {n}")
    _require_distinct_roots(p)
    f0, f1 = f_initial(p)
    h = n // 2
    root_gap = p.ring.sqrt  # alpha - beta
    if epsilon(n):
        top = f1 - p.b * f0
        b_weight = p.b
    else:
        top = p.a * f1 - f0 - p.ab * f0
        b_weight = Fraction(1)
    a_scale = 1 / (p.ab ** h * root_gap)
    b_scale = b_weight / (p.ab ** (h + 1) * root_gap)
    return BinetCoefficients(n, top.scale(a_scale), f0.scale(b_scale))


def f_binet_ext(p: Params, n: int) -> Mat2:
    """The Binet formula evaluated in Q[sqrt(D)], before any rationality check."""
    c = binet_coefficients(p, n)
    alpha, beta = quad_alpha(p), quad_beta(p)
    k = 2 * (n // 2) + 2
    da = quad_pow(alpha, n) - quad_pow(beta, n)
    db = quad_pow(alpha, k) - quad_pow(beta, k)
    return c.A1.map(lambda e: e * da) + c.B1.map(lambda e: e * db)


def f_binet(p: Params, n: int) -> Mat2:
    m = f_binet_ext(p, n)
    for e in m.entries():
        if not isinstance(e, QuadExt) or e.irr != 0:
            raise InternalIrrationalResidue(f"F_{n} via Binet has entry {e!r}")
    return m.map(lambda e: e.rat)
