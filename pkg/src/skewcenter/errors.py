"""Exception types raised by the library."""


class SkewParamsError(ValueError):
    """Base class for invalid ring parameters."""


class BadDimension(SkewParamsError):
    pass


class NotSkewSymmetric(SkewParamsError):
    pass


class NonzeroDiagonal(SkewParamsError):
    pass


class CommutativeRing(SkewParamsError):
    """All exponents vanish modulo ell; the ring would be commutative."""


class WeightedGrading(SkewParamsError):
    pass


class DimensionMismatch(SkewParamsError):
    pass


class WrongDimension(SkewParamsError):
    pass


class OddDimension(SkewParamsError):
    pass


class ArithmeticOverflow(OverflowError):
    """An intermediate value left the fixed-width budget."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured size budget."""


class DefinitionMismatch(AssertionError):
    """Two definitional computations of the same quantity disagree."""
