"""Exception hierarchy shared by all modules.

``NumericError`` subclasses signal a numerical failure (CLI exit code 1);
plain ``ValueError`` signals invalid input (CLI exit code 2).
"""


class NumericError(ArithmeticError):
    """Base class for numerical failures."""


class NonConvergence(NumericError):
    pass


class DegenerateSegment(NumericError):
    pass


class PointOnCurve(NumericError):
    pass


class InconclusiveAtResolution(NumericError):
    pass


class SingularDenominator(NumericError, ZeroDivisionError):
    pass


class PoleProximity(NumericError):
    pass


class QuadratureNonConvergence(NumericError):
    pass


class NormalizationFailure(NumericError):
    pass


class SingularParameter(NumericError):
    pass
