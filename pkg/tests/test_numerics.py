from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from biperiodic import (
    ContextMismatch,
    NonInvertible,
    QuadRing,
    ZeroParameter,
    format_rational,
    make_params,
    parse_rational,
    quad_alpha,
    quad_beta,
    quad_div,
    quad_pow,
)

big_ints = st.integers(min_value=-(10**60), max_value=10**60)
rationals = st.fractions(max_denominator=10**12)
nonzero_rationals = rationals.filter(lambda x: x != 0)
small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=30)
discs = st.sampled_from([Fraction(5), Fraction(-3), Fraction(9, 4), Fraction(2), Fraction(45, 4)])


@st.composite
def quad_elements(draw, ring=None):
    ring = ring or QuadRing(draw(discs))
    return ring(draw(small_rationals), draw(small_rationals))


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)),
    ("-3", Fraction(-3)),
    ("+5/10", Fraction(1, 2)),
    ("-7/9", Fraction(-7, 9)),
    ("0", Fraction(0)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1e3", "1/-2", "a/b", "", "1/2/3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@given(rationals)
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x


def test_format_is_canonical():
    assert format_rational(Fraction(6, -4)) == "-3/2"
    assert format_rational(Fraction(8, 4)) == "2"


@given(big_ints, big_ints.filter(lambda v: v != 0), big_ints, big_ints.filter(lambda v: v != 0))
def test_rational_division_round_trip(p1, q1, p2, q2):
    x, y = Fraction(p1, q1), Fraction(p2, q2)
    if y != 0:
        assert (x / y) * y == x


def test_make_params_golden():
    p = make_params(1, 1)
    assert (p.ab, p.disc) == (1, 5)


def test_make_params_square_discriminant():
    p = make_params(1, Fraction(1, 2))
    assert p.ab == Fraction(1, 2)
    assert p.disc == Fraction(9, 4)


@pytest.mark.parametrize("a, b", [(0, 3), (3, 0), (0, 0)])
def test_make_params_rejects_zero(a, b):
    with pytest.raises(ZeroParameter):
        make_params(a, b)


@given(nonzero_rationals, nonzero_rationals)
def test_params_disc_formula(a, b):
    p = make_params(a, b)
    assert p.disc == a * a * b * b + 4 * a * b == p.ab * (p.ab + 4)


def test_alpha_golden_section():
    alpha = quad_alpha(make_params(1, 1))
    assert (alpha.rat, alpha.irr) == (Fraction(1, 2), Fraction(1, 2))


def test_alpha_beta_product_integer_pair():
    p = make_params(2, 3)
    assert quad_alpha(p) * quad_beta(p) == -6


@given(nonzero_rationals, nonzero_rationals)
def test_alpha_beta_vieta(a, b):
    p = make_params(a, b)
    alpha, beta = quad_alpha(p), quad_beta(p)
    assert alpha + beta == p.ab
    assert alpha * beta == -p.ab
    assert alpha.conjugate() == beta


@given(nonzero_rationals, nonzero_rationals)
def test_roots_satisfy_minimal_polynomial(a, b):
    p = make_params(a, b)
    for r in (quad_alpha(p), quad_beta(p)):
        assert r * r == p.ab * r + p.ab


def test_quad_pow_zero_is_one():
    alpha = quad_alpha(make_params(2, 3))
    one = quad_pow(alpha, 0)
    assert (one.rat, one.irr) == (1, 0)


def test_quad_pow_square_golden():
    alpha = quad_alpha(make_params(1, 1))
    sq = quad_pow(alpha, 2)
    assert sq == alpha + 1
    assert (sq.rat, sq.irr) == (Fraction(3, 2), Fraction(1, 2))


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (1, -1), (Fraction(-7, 9), Fraction(5, 8))])
def test_quad_pow_multiplicative(a, b):
    p = make_params(a, b)
    assert quad_pow(quad_alpha(p), 5) * quad_pow(quad_beta(p), 5) == (-p.ab) ** 5


@given(quad_elements(), st.integers(min_value=0, max_value=64))
def test_quad_pow_matches_repeated_product(x, n):
    acc = x.ring.one
    for _ in range(n):
        acc = acc * x
    assert quad_pow(x, n) == acc


def test_quad_pow_negative_exponent():
    with pytest.raises(ValueError):
        quad_pow(QuadRing(Fraction(5))(1, 1), -1)


@given(st.data())
def test_ring_axioms(data):
    ring = QuadRing(data.draw(discs))
    x, y, z = (data.draw(quad_elements(ring)) for _ in range(3))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x - y) + y == x


@given(st.data())
def test_conjugation_is_homomorphism(data):
    ring = QuadRing(data.draw(discs))
    x, y = data.draw(quad_elements(ring)), data.draw(quad_elements(ring))
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert x * x.conjugate() == x.norm()


@given(st.data())
def test_division_round_trip(data):
    ring = QuadRing(data.draw(discs))
    x, y = data.draw(quad_elements(ring)), data.draw(quad_elements(ring))
    if y.norm() != 0:
        assert quad_div(x * y, y) == x
        if x.norm() != 0:
            assert quad_div(x, x) == 1


@given(nonzero_rationals, nonzero_rationals)
def test_division_by_sqrt_disc(a, b):
    p = make_params(a, b)
    if p.disc != 0:
        root = p.ring.sqrt
        assert root.norm() == -p.disc
        assert quad_div(p.ring.one, root) * root == 1


def test_zero_divisor_not_invertible():
    ring = make_params(1, Fraction(1, 2)).ring
    y = ring(Fraction(3, 2), 1)
    assert y.norm() == 0
    with pytest.raises(NonInvertible):
        quad_div(ring.one, y)
    # y and its conjugate are a zero-divisor pair
    assert y * y.conjugate() == 0


def test_division_by_zero_element():
    ring = QuadRing(Fraction(5))
    with pytest.raises(NonInvertible):
        ring.one / ring.zero


def test_mixing_contexts_is_rejected():
    x = quad_alpha(make_params(1, 1))
    y = quad_alpha(make_params(2, 3))
    with pytest.raises(ContextMismatch):
        x + y
    with pytest.raises(ContextMismatch):
        x * y


def test_is_rational_predicate():
    ring = QuadRing(Fraction(5))
    assert ring(3).is_rational()
    assert not ring(3, 1).is_rational()
    assert ring(3) == 3
