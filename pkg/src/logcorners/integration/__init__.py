from .integrate import (
    Convergence,
    IntegrationDomain,
    IntegrationResult,
    StokesReport,
    boundary_integral,
    circle_integral,
    convergence_classify,
    integrate,
    integrate_circle,
    integrate_interval,
    interval_integral,
    stokes_check,
)

__all__ = [
    "Convergence", "IntegrationDomain", "IntegrationResult", "StokesReport", "boundary_integral",
    "circle_integral", "convergence_classify", "integrate", "integrate_circle", "integrate_interval",
    "interval_integral", "stokes_check",
]
