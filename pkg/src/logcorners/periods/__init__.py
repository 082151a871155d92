from .examples import (
    Circle,
    DoubleCopyConfigP1,
    KummerConfig,
    Segment,
    chain_period,
    circle_of_radius_zero,
    double_copy_p1,
    eta0,
    fourier_profile,
    gamma0,
    i2_closed_form,
    i2_via_stokes,
    kummer_period_matrix,
    residue_radius_zero,
)
from .oracle import i2_quadrature
from .polar import INF, Expander, PolarForm, PolarSeries

__all__ = [
    "Circle", "DoubleCopyConfigP1", "Expander", "INF", "KummerConfig", "PolarForm", "PolarSeries",
    "Segment", "chain_period", "circle_of_radius_zero", "double_copy_p1", "eta0", "fourier_profile",
    "gamma0", "i2_closed_form", "i2_quadrature", "i2_via_stokes", "kummer_period_matrix",
    "residue_radius_zero",
]
