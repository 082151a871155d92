"""Floating-point oracle: interior evaluation, quadrature of top forms and
the cutoff fit that exposes divergences as polynomials in ``log eps``."""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from ..errors import LeftoverPhantoms, MathDomainError, MissingAssignment
from ..logforms.logform import LogForm, as_form
from ..logforms.logfunction import LogFunction
from .cubature import cubature

# u = log(a / r) is integrated up to this value when no cutoff is given
DEFAULT_LOG_DEPTH = 60.0


def default_tolerance() -> float:
    """Relative tolerance; the ``LOGC_PRECISION`` environment variable overrides it."""
    raw = os.environ.get("LOGC_PRECISION")
    if raw:
        value = float(raw)
        if value <= 0:
            raise ValueError("LOGC_PRECISION must be positive")
        return value
    return 1e-10


class PoorFit(MathDomainError):
    """The cutoff integrals are not fitted by a polynomial in log eps."""


@dataclass
class QuadratureSpec:
    """Region and budget for :func:`quadrature`.

    ``region`` maps coordinates to numeric ``(lo, hi)``; basic coordinates
    left out default to ``(a * exp(-60), a)`` with ``a`` the chart bound,
    angular ones to ``(0, 2 pi)``.
    """

    region: dict = field(default_factory=dict)
    tolerance: float = field(default_factory=default_tolerance)
    max_subdivisions: int = 4000
    eps_sequence: tuple = tuple(10.0 ** -k for k in range(8, 15))

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        for name, (lo, hi) in self.region.items():
            if not lo < hi:
                raise ValueError(f"empty range for {name}")
        if any(e <= 0 for e in self.eps_sequence):
            raise ValueError("cutoffs must be positive")


@dataclass
class QuadratureResult:
    value: complex
    error: float
    converged: bool
    evaluations: int = 0

    def as_dict(self) -> dict:
        return {"approx": [self.value.real, self.value.imag], "error": self.error, "converged": self.converged}


def numeric_bound(chart, name, params) -> float:
    b = chart.bound(name)
    if b is None:
        raise MathDomainError(f"basic coordinate {name} has no upper bound")
    return b.constant_scalar().evaluate(params).real


def eval_interior(f, point: dict, params: dict | None = None):
    """Evaluate a phantom-free log function (or each form component) at an interior point."""
    chart = f.chart
    for name in chart.basic:
        if name not in point:
            raise MissingAssignment(f"no value for coordinate {name!r}")
        v = point[name]
        if v <= 0:
            raise MathDomainError(f"{name} = {v} is not an interior point")
        bound = chart.bound(name)
        if bound is not None and params is not None:
            try:
                if v >= numeric_bound(chart, name, params):
                    raise MathDomainError(f"{name} = {v} is not an interior point")
            except MissingAssignment:
                pass
    if isinstance(f, LogFunction):
        return complex(f.evaluate(point, params))
    return {b: complex(v) for b, v in f.evaluate(point, params).items()}


def _top_density(w: LogForm):
    chart = w.chart
    if w.has_phantom_content():
        raise LeftoverPhantoms("apply a scale before numeric integration")
    top = tuple(chart.free + chart.basic + chart.angular)
    return top, w.component(top)


def quadrature(w, spec: QuadratureSpec | None = None, params: dict | None = None,
               orientation: int = 1) -> QuadratureResult:
    """Integrate a top-degree form over its chart numerically.

    Basic coordinates use ``r = hi * exp(-u)``, which turns ``dlog r`` into
    ``du`` and flattens the logarithmic endpoint behaviour.
    """
    spec = spec or QuadratureSpec()
    params = params or {}
    w = as_form(w)
    chart = w.chart
    top, density = _top_density(w)
    names, lows, highs, kinds, scales = [], [], [], [], []
    for name in top:
        kind = chart.kind(name)
        if kind == "basic":
            hi = spec.region.get(name, (None, None))[1] or numeric_bound(chart, name, params)
            lo = spec.region[name][0] if name in spec.region else hi * math.exp(-DEFAULT_LOG_DEPTH)
            names.append(name)
            lows.append(0.0)
            highs.append(math.log(hi / lo))
            kinds.append("basic")
            scales.append(hi)
        elif kind == "angular":
            lo, hi = spec.region.get(name, (0.0, 2 * math.pi))
            names.append(name)
            lows.append(lo)
            highs.append(hi)
            kinds.append("angular")
            scales.append(None)
        else:
            if name not in spec.region:
                raise MathDomainError(f"free coordinate {name} needs an explicit range")
            lo, hi = spec.region[name]
            names.append(name)
            lows.append(lo)
            highs.append(hi)
            kinds.append("free")
            scales.append(None)

    def integrand(pts):
        values = {}
        for k, name in enumerate(names):
            if kinds[k] == "basic":
                values[name] = scales[k] * np.exp(-pts[k])
            else:
                values[name] = pts[k]
        out = density.evaluate(values, params)
        return np.broadcast_to(np.asarray(out, dtype=complex), pts.shape[1:])

    if not names:
        value = complex(density.evaluate({}, params))
        return QuadratureResult(value * orientation, 0.0, True, 1)
    res = cubature(integrand, lows, highs, tol=spec.tolerance, max_subdivisions=spec.max_subdivisions)
    return QuadratureResult(res.value * orientation, res.error, res.converged, res.evaluations)


@dataclass
class DivergenceFit:
    coefficients: list  # c_k multiplying log(eps)^k
    residual: float
    cutoffs: list
    integrals: list

    def as_dict(self) -> dict:
        return {"coefficients": [[c.real, c.imag] for c in self.coefficients], "residual": self.residual}


def cutoff_integral(w, eps: float, params: dict | None = None, tol: float = 1e-13) -> complex:
    """``int_eps^a w`` for a one-form on a bounded interval chart."""
    w = as_form(w)
    (name,) = w.chart.basic
    a = numeric_bound(w.chart, name, params or {})
    spec = QuadratureSpec(region={name: (eps, a)}, tolerance=tol)
    return quadrature(w, spec, params).value


def divergence_fit(w, eps_sequence=None, params: dict | None = None, degree: int | None = None,
                   threshold: float = 1e-6) -> DivergenceFit:
    """Least-squares fit of ``int_eps^a w`` by ``sum_k c_k log(eps)^k``.

    The constant term ``c_0`` is the regularized integral for the unit
    tangential basepoint at 0.
    """
    w = as_form(w)
    chart = w.chart
    if len(chart.basic) != 1 or chart.free or chart.angular or chart.phantom:
        raise MathDomainError("divergence_fit needs a form on a single interval")
    (name,) = chart.basic
    if degree is None:
        pole = w.component((name,))
        degree = 0
        for key, c in pole.terms.items():
            if not c.restrict(name).is_zero():
                degree = max(degree, dict(key).get(name, 0) + 1)
    eps_sequence = list(eps_sequence or QuadratureSpec().eps_sequence)
    if len(eps_sequence) < degree + 2:
        raise ValueError("not enough cutoffs for the requested degree")
    values = [cutoff_integral(w, e, params) for e in eps_sequence]
    logs = np.log(np.asarray(eps_sequence))
    design = np.vander(logs, degree + 1, increasing=True)
    y = np.asarray(values, dtype=complex)
    coef, *_ = np.linalg.lstsq(design.astype(complex), y, rcond=None)
    resid = float(np.max(np.abs(design @ coef - y)))
    scale = max(1.0, float(np.max(np.abs(y))))
    if resid > threshold * scale:
        raise PoorFit(f"residual {resid:.3g} above threshold")
    return DivergenceFit([complex(c) for c in coef], resid, eps_sequence, [complex(v) for v in values])
