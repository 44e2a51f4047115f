"""Numerics for Suffridge polynomials and related univalent families."""
from .errors import NumericError
from .poly_core import CurveSamples, Polynomial, RealPolynomial
from .suffridge import SuffridgeParams

__all__ = ["CurveSamples", "NumericError", "Polynomial", "RealPolynomial",
           "SuffridgeParams"]
__version__ = "0.1.0"
