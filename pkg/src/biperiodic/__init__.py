"""Exact arithmetic for bi-periodic Fibonacci numbers and their matrix sequence."""

from .errors import (
    BiperiodicError,
    ContextMismatch,
    DegenerateDiscriminant,
    IndexOutOfRange,
    InternalIrrationalResidue,
    NonInvertible,
    NonUnitDenominator,
    SingularDenominator,
    ZeroEvaluationPoint,
    ZeroParameter,
)
from .mat2 import Mat2
from .matrixseq import (
    BinetCoefficients,
    binet_coefficients,
    cassini_check,
    f_binet,
    f_closed,
    f_det,
    f_initial,
    f_recurrence,
    f_table,
    f_terms,
)
from .numerics import (
    Params,
    QuadExt,
    QuadRing,
    Rational,
    format_rational,
    make_params,
    parse_rational,
    quad_alpha,
    quad_beta,
    quad_div,
    quad_mul,
    quad_pow,
)
from .sequence import epsilon, q_binet, q_fast, q_recurrence, q_terms
from .series import MatRatFunc, Poly, SeriesTrunc, expand, gf_matrix, reciprocal_gf
from .summation import (
    SumReport,
    partial_sum_closed,
    partial_sum_direct,
    telescoping_oracle,
    weighted_sum_closed,
    weighted_sum_direct,
)
from .verify import VerifyReport, run_all_verifications

__version__ = "0.1.0"
