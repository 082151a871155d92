"""Exact constants and coefficient functions."""
from .gaussian import GaussianRational
from .fraction import ParamFraction
from .scalar import Scalar, prime_logs
from .coefficient import Coefficient

__all__ = ["GaussianRational", "ParamFraction", "Scalar", "Coefficient", "prime_logs"]
