"""Regularized restriction, scales, regularized limits and homotopy operators."""
from .operations import (
    apply_scale, combined_projection, homotopy_combined, homotopy_interval, homotopy_phantom,
    is_continuous, normal_projection, reg_restrict, reglim, unit_projection,
)

__all__ = [
    "reg_restrict", "apply_scale", "reglim", "is_continuous", "homotopy_phantom",
    "homotopy_interval", "homotopy_combined", "combined_projection", "unit_projection",
    "normal_projection",
]
