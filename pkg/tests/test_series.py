import math
from fractions import Fraction

import pytest

from biperiodic import (
    Mat2,
    MatRatFunc,
    NonUnitDenominator,
    Poly,
    expand,
    f_initial,
    f_table,
    gf_matrix,
    make_params,
    quad_alpha,
    quad_beta,
    reciprocal_gf,
)
from biperiodic.series import X, quartic, reciprocal_gf_in_x, series_matches

F = Fraction


def test_poly_normalises_and_degree():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).degree == -math.inf
    assert Poly([5]).degree == 0
    assert Poly.monomial(3, 2) == Poly([0, 0, 0, 2])


def test_poly_arithmetic():
    p = Poly([1, 1])
    assert p * p == Poly([1, 2, 1])
    assert p - p == Poly()
    assert (p * p)(F(2)) == 9
    assert Poly([1, 2, 3]).reversed(3) == Poly([0, 3, 2, 1])


def test_gf_denominator(params):
    rf = gf_matrix(params)
    assert rf.denominator.coeffs == (1, 0, -(params.ab + 2), 0, 1)


def test_gf_numerator_fibonacci():
    assert gf_matrix(make_params(1, 1)).numerator.e11 == Poly([1, 1, -1])


def test_gf_numerator_integer_pair():
    assert gf_matrix(make_params(2, 3)).numerator.e21 == Poly([0, 1, 2, -1])


def test_expand_constant_and_linear(params):
    s = expand(gf_matrix(params), 2)
    f0, f1 = f_initial(params)
    assert s[0] == f0
    assert s[1] == f1


def test_expand_fibonacci_coefficient():
    assert expand(gf_matrix(make_params(1, 1)), 7)[6].e21 == 8


def test_gf_reproduces_sequence(params):
    s = expand(gf_matrix(params), 64)
    assert series_matches(s, f_table(params, 64)) == []


def test_reciprocal_gf_in_x_entries():
    p = make_params(2, 3)
    rf = reciprocal_gf_in_x(p)
    assert rf.numerator.e11 == Poly([0, -1, 3, 1]) * X
    assert rf.numerator.e12 == Poly([F(-3, 2), 3, F(3, 2)]) * X
    assert rf.numerator.e22 == Poly([3, -7, 0, 1]) * X


def test_reciprocal_gf_low_coefficients(params):
    s = expand(reciprocal_gf(params), 2)
    f0, f1 = f_initial(params)
    assert s[0] == f0
    assert s[1] == f1


def test_reciprocal_gf_reproduces_sequence(params):
    s = expand(reciprocal_gf(params), 64)
    assert series_matches(s, f_table(params, 64)) == []


def test_reciprocal_gf_integer_pair_sixteen_terms():
    p = make_params(2, 3)
    assert list(expand(reciprocal_gf(p), 16).coefficients) == f_table(p, 16)


def test_non_unit_denominator():
    one = Poly([1])
    rf = MatRatFunc(Mat2(one, one, one, one), Poly([0, 1]))
    with pytest.raises(NonUnitDenominator):
        expand(rf, 3)


def test_expand_rejects_bad_order():
    with pytest.raises(ValueError):
        expand(gf_matrix(make_params(1, 1)), 0)


def test_denominator_vanishes_at_shifted_roots(params):
    if params.disc == 0:
        pytest.skip("roots coincide")
    c = params.ab + 2
    in_square = Poly([1, -c, 1])  # quartic written in y = x^2
    for r in (quad_alpha(params), quad_beta(params)):
        assert in_square(r + 1) == 0


def test_linearity_of_expansion(params):
    g = gf_matrix(params)
    h = MatRatFunc(Mat2(Poly([0, 1]), Poly([2]), Poly([F(1, 3), 0, 1]), Poly([-1])), quartic(params))
    lhs = expand(g + h, 20)
    rhs = expand(g, 20) + expand(h, 20)
    assert lhs == rhs


def test_adding_different_denominators_rejected():
    g = gf_matrix(make_params(1, 1))
    h = gf_matrix(make_params(2, 3))
    with pytest.raises(ValueError):
        g + h
