"""Numeric oracle: interior evaluation, adaptive cubature and cutoff fits."""
from .cubature import CubatureResult, cubature
from .quadrature import (
    DivergenceFit, PoorFit, QuadratureResult, QuadratureSpec, cutoff_integral, default_tolerance,
    divergence_fit, eval_interior, quadrature,
)

__all__ = [
    "cubature", "CubatureResult", "QuadratureSpec", "QuadratureResult", "quadrature",
    "eval_interior", "divergence_fit", "DivergenceFit", "PoorFit", "cutoff_integral",
    "default_tolerance",
]
