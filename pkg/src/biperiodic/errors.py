"""Exception hierarchy shared by every module of the package."""


class BiperiodicError(ValueError):
    """Base class for all domain errors raised by this package."""


class ZeroParameter(BiperiodicError):
    pass


class NonInvertible(BiperiodicError, ZeroDivisionError):
    pass


class ContextMismatch(BiperiodicError):
    """Two quadratic-extension values built over different discriminants were combined."""


class IndexOutOfRange(BiperiodicError, IndexError):
    pass


class DegenerateDiscriminant(BiperiodicError):
    """ab = -4, so the two characteristic roots coincide."""


class InternalIrrationalResidue(ArithmeticError):
    """A result that must be rational kept a sqrt(D) component.

    Never raised by a correct implementation; deliberately not a
    BiperiodicError so that callers do not swallow it as a usage error.
    """


class NonUnitDenominator(BiperiodicError):
    pass


class ZeroEvaluationPoint(BiperiodicError, ZeroDivisionError):
    pass


class SingularDenominator(BiperiodicError, ZeroDivisionError):
    pass
