"""Exception types raised across the package."""


class CycodesError(Exception):
    """Base class for all package-specific errors."""


class CompositeCharacteristic(CycodesError):
    """A prime was required but the given characteristic is composite."""


class ReduciblePolynomial(CycodesError):
    """A user-supplied defining polynomial is not irreducible."""


class IncompatibleFields(CycodesError):
    """Operands belong to contexts that are not on a common embedding chain."""


class DivisionByZero(CycodesError, ZeroDivisionError):
    """Inversion of zero, or division by the zero polynomial."""


class NotMonic(CycodesError):
    """A monic linearized polynomial was required."""


class ZeroCoefficient(CycodesError):
    """A construction coefficient that must be nonzero is zero."""


class ZeroShift(CycodesError):
    """Cyclic shift by zero is undefined."""


class GcdViolation(CycodesError):
    """The exponent parameters of a trinomial family are not coprime."""


class SplittingFieldNotContained(CycodesError):
    """The ambient field does not contain the root space of a polynomial."""


class ConditionViolated(CycodesError):
    """The pairwise combination condition fails for a pair of generators.

    Attributes carry the offending (i, j) generator indices.
    """

    def __init__(self, i, j, message=None):
        self.i = i
        self.j = j
        super().__init__(message or f"combination condition fails for generator pair ({i}, {j})")


class CapExceeded(CycodesError):
    """An iteration or enumeration cap was hit before the computation finished.

    ``iterations`` records how far the computation got.
    """

    def __init__(self, message, iterations=None):
        self.iterations = iterations
        super().__init__(message)
