"""Exact regularized integrals over products of intervals, circles and ends.

Integrands are finite sums of products of one-variable factors
``r^m log^k r dlog r`` and ``exp(i n theta) dtheta``, so with a product
regularization every integral is a sum of products of one-dimensional
regularized integrals:

    int_0^a r^m log^k r dlog r = sum_j (-1)^j k!/(k-j)! a^m log^(k-j) a / m^(j+1)   (m >= 1)
    int_0^a log^k r dlog r     = (log^(k+1) a - log^(k+1) lam) / (k+1)              (m = 0)

where ``lam`` is the tangential basepoint at 0.  Terms with exp factors are
split into a pole part, done exactly, and a convergent remainder handed to
the numeric oracle.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import LeftoverPhantoms, MathDomainError, NotRepresentable
from ..geometry.chart import POINT, Chart
from ..geometry.monoid import MonoidElement
from ..geometry.morphism import WeakMorphism, _monoid
from ..geometry.scale import Regularization, Scale, check_regularization
from ..logforms.logform import LogForm, as_form
from ..logforms.logfunction import LogFunction
from ..logforms.pullback import pullback
from ..regularization.operations import apply_scale, reg_restrict
from ..symcore import Coefficient, Scalar


@dataclass(frozen=True)
class IntegrationDomain:
    """An oriented, product-regularized chart ``prod [0, a_i] x prod S^1 x [0)^k``.

    ``basepoints`` holds the tangential basepoint constant at ``r = 0`` for
    every basic coordinate; ``end_basepoints`` the constant at the upper end
    (recorded only: integrands are smooth there).  ``chart_scale`` removes
    the chart's own phantoms.  The orientation is ``sign`` times the
    coordinate ``order`` (default: chart order of basic, then angular).
    """

    chart: Chart
    basepoints: tuple = ()
    end_basepoints: tuple = ()
    chart_scale: Scale | None = None
    sign: int = 1
    order: tuple | None = None

    def __post_init__(self):
        if self.chart.free:
            raise MathDomainError("free coordinates are not compact; use bounded basic coordinates")
        for attr in ("basepoints", "end_basepoints"):
            raw = getattr(self, attr)
            raw = raw.items() if isinstance(raw, dict) else raw
            object.__setattr__(self, attr, tuple(sorted((k, _monoid(v)) for k, v in raw)))
        bp = dict(self.basepoints)
        for name in self.chart.basic:
            if self.chart.bound(name) is None:
                raise MathDomainError(f"basic coordinate {name} needs an upper bound")
            if name not in bp:
                raise MathDomainError(f"basic coordinate {name} needs a basepoint at 0")
            if not bp[name].is_constant():
                raise MathDomainError("only constant endpoint basepoints are supported")
        if self.chart.phantom and self.chart_scale is not None:
            self.chart_scale.chart.require_same(self.chart)
        if self.sign not in (1, -1):
            raise ValueError("orientation sign must be +1 or -1")
        order = self.order if self.order is not None else self.chart.basic + self.chart.angular
        if sorted(order) != sorted(self.chart.basic + self.chart.angular):
            raise ValueError(f"orientation order {order} must list the basic and angular coordinates")
        object.__setattr__(self, "order", tuple(order))

    @property
    def dimension(self) -> int:
        return len(self.chart.basic) + len(self.chart.angular)

    def canonical_order(self) -> tuple:
        return self.chart.basic + self.chart.angular

    def orientation_sign(self) -> int:
        """Sign relating the orientation to the canonical basis order."""
        canon = self.canonical_order()
        idx = [canon.index(n) for n in self.order]
        inv = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
        return self.sign * (-1) ** inv

    def basepoint(self, name: str) -> MonoidElement:
        return dict(self.basepoints)[name]

    def bound(self, name: str) -> MonoidElement:
        return self.chart.bound(name)

    def regularization(self) -> Regularization:
        return Regularization.product(self.chart.basic_part(), dict(self.basepoints))

    def check(self):
        return check_regularization(self.regularization())

    def drop(self, name: str, sign: int) -> "IntegrationDomain":
        """The domain with one basic coordinate removed (a boundary face)."""
        chart = self.chart.basic_part()
        sub = Chart((), tuple(b for b in chart.basic if b != name), (), chart.angular,
                    tuple((b, v) for b, v in chart.bounds if b != name))
        return IntegrationDomain(sub, {k: v for k, v in self.basepoints if k != name},
                                 {k: v for k, v in self.end_basepoints if k != name}, None,
                                 sign, tuple(n for n in self.order if n != name))


@dataclass
class IntegrationResult:
    exact: Scalar | None
    approx: complex | None = None
    mode: str = "exact"
    error: float | None = None

    def as_dict(self) -> dict:
        return {
            "exact": None if self.exact is None else str(self.exact),
            "approx": None if self.approx is None else [self.approx.real, self.approx.imag],
            "mode": self.mode,
        }


# --------------------------------------------------------------- 1D integrals
def interval_integral(m: int, k: int, a: MonoidElement, lam: MonoidElement) -> Scalar:
    """Regularized ``int_0^a r^m log^k r dlog r`` with basepoint ``lam`` at 0."""
    if m < 0:
        raise MathDomainError(f"r^{m} is not integrable at 0 and has no log regularization")
    La = a.log_constant()
    if m == 0:
        return (La ** (k + 1) - lam.log_constant() ** (k + 1)) / (k + 1)
    am = a.constant_scalar() ** m
    out = Scalar()
    for j in range(k + 1):
        c = Fraction((-1) ** j * math.factorial(k), math.factorial(k - j) * m ** (j + 1))
        out = out + am * La ** (k - j) * c
    return out


def circle_integral(n: int) -> Scalar:
    return Scalar.pi() * 2 if n == 0 else Scalar()


def _prepare(w, dom: IntegrationDomain) -> LogForm:
    form = as_form(w)
    dom.chart.require_same(form.chart)
    if form.chart.phantom:
        if form.has_phantom_content():
            if dom.chart_scale is None:
                raise LeftoverPhantoms("the domain has phantoms but no chart scale")
            form = apply_scale(dom.chart_scale, form)
        else:
            basic = form.chart.basic_part()
            form = LogForm(basic, form.terms)
    return form


def _exact_term(dom, key, q_m_f, s: Scalar) -> Scalar:
    _, mono, fourier = q_m_f
    md, fd, kd = dict(mono), dict(fourier), dict(key)
    out = s
    for name in dom.chart.basic:
        out = out * interval_integral(md.get(name, 0), kd.get(name, 0), dom.bound(name), dom.basepoint(name))
        if out.is_zero():
            return out
    for name in dom.chart.angular:
        out = out * circle_integral(fd.get(name, 0))
        if out.is_zero():
            return out
    return out


def integrate(w, dom: IntegrationDomain, params: dict | None = None,
              tolerance: float | None = None) -> IntegrationResult:
    """Regularized integral of the top-degree part of ``w`` over ``dom``.

    Components of other degrees integrate to zero.  ``params`` requests a
    float value and is required when exp factors force the numeric route.
    """
    form = _prepare(w, dom)
    chart = form.chart
    top = chart.basic + chart.angular
    sign = dom.orientation_sign()
    density = form.component(top)
    exact = Scalar()
    numeric_terms: dict = {}
    for key, c in density.terms.items():
        for qmf, s in c.terms.items():
            if qmf[0].is_zero():
                exact = exact + _exact_term(dom, key, qmf, s)
            else:
                numeric_terms.setdefault(key, Coefficient())
                numeric_terms[key] = numeric_terms[key] + Coefficient({qmf: s})
    exact = exact * sign
    if not numeric_terms:
        approx = exact.evaluate(params) if params is not None else None
        return IntegrationResult(exact, approx, "exact")
    if params is None:
        raise NotRepresentable("exp factors have no exact antiderivative; pass params for the numeric route")
    value, err = _numeric_part(chart, dom, numeric_terms, params, tolerance)
    return IntegrationResult(None, exact.evaluate(params) + sign * value, "numeric", err)


def _numeric_part(chart, dom, terms: dict, params: dict, tolerance):
    """Pole parts exactly (as floats), convergent remainders by quadrature."""
    from ..numeric.quadrature import QuadratureSpec, quadrature

    basic = chart.basic
    total, err = 0j, 0.0
    spec = QuadratureSpec() if tolerance is None else QuadratureSpec(tolerance=tolerance)
    for key, c in terms.items():
        kd = dict(key)
        for size in range(len(basic) + 1):
            for subset in itertools.combinations(basic, size):
                # E_S prod_{r not in S} (1 - E_r) c
                cs = c.substitute({r: Coefficient() for r in subset})
                rest = [r for r in basic if r not in subset]
                piece = Coefficient()
                for tsize in range(len(rest) + 1):
                    for tset in itertools.combinations(rest, tsize):
                        part = cs.substitute({r: Coefficient() for r in tset}) if tset else cs
                        piece = piece + (part if tsize % 2 == 0 else -part)
                if piece.is_zero():
                    continue
                factor = Scalar.one()
                for r in subset:
                    factor = factor * interval_integral(0, kd.get(r, 0), dom.bound(r), dom.basepoint(r))
                fval = factor.evaluate(params)
                if fval == 0:
                    continue
                sub = Chart((), tuple(rest), (), chart.angular, tuple((b, v) for b, v in chart.bounds if b in rest))
                logs = tuple((n, e) for n, e in key if n in rest)
                f = LogFunction(sub, {logs: piece})
                w = LogForm.basis(sub, *(tuple(rest) + chart.angular)) * f
                res = quadrature(w, spec, params)
                total += fval * res.value
                err += abs(fval) * res.error
    return total, err


def integrate_interval(w, a, lam, mu=None, coordinate: str | None = None, params=None) -> IntegrationResult:
    """Regularized integral of a one-form on ``[0, a]`` with basepoint ``lam`` at 0."""
    form = as_form(w)
    chart = form.chart
    if len(chart.basic) != 1 or chart.angular or chart.free:
        raise MathDomainError("integrate_interval needs a chart with one basic coordinate")
    name = coordinate or chart.basic[0]
    bounded = Chart((), chart.basic, chart.phantom, (), {name: _monoid(a)})
    form = LogForm(bounded, form.terms)
    dom = IntegrationDomain(bounded, {name: lam}, {name: mu} if mu is not None else {})
    return integrate(form, dom, params)


def integrate_circle(w, params=None) -> IntegrationResult:
    form = as_form(w)
    chart = form.chart
    if chart.basic or chart.free or len(chart.angular) != 1:
        raise MathDomainError("integrate_circle needs a chart with one angular coordinate")
    return integrate(form, IntegrationDomain(chart), params)


# --------------------------------------------------------------------- Stokes
@dataclass
class StokesReport:
    lhs: Scalar
    rhs: Scalar
    equal: bool
    faces: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"lhs": str(self.lhs), "rhs": str(self.rhs), "equal": self.equal,
                "faces": [[name, str(v)] for name, v in self.faces]}


def boundary_integral(eta, dom: IntegrationDomain) -> tuple[Scalar, list]:
    """Sum over boundary faces of the regularized restriction of ``eta``.

    At ``r = 0`` the face is reached with the outward normal ``-d/dr``, so it
    carries the sign ``(-1)^pos`` with ``pos`` the 1-based position of ``r``
    in the orientation order; at ``r = a`` the sign is ``(-1)^(pos-1)``.
    """
    form = _prepare(eta, dom)
    chart = form.chart
    sign = dom.sign
    total = Scalar()
    faces = []
    for name in chart.basic:
        pos = dom.order.index(name) + 1
        # face at r = 0, regularized by the tangential basepoint
        restricted = reg_restrict(form, (name,))
        fchart = restricted.chart
        (t,) = [p for p in fchart.phantom]
        scaled = apply_scale(Scale(fchart, {t: dom.basepoint(name)}), restricted)
        sub = dom.drop(name, sign * (-1) ** pos)
        scaled = LogForm(sub.chart, scaled.terms)
        v0 = integrate(scaled, sub).exact
        # face at r = a, an ordinary interior point of [0, inf)
        at_a = WeakMorphism.build(sub.chart, chart, r={name: dom.bound(name)})
        va = integrate(pullback(at_a, form), dom.drop(name, sign * (-1) ** (pos - 1))).exact
        faces.append((f"{name}=0", v0))
        faces.append((f"{name}={dom.bound(name).constant_scalar()}", va))
        total = total + v0 + va
    return total, faces


def stokes_check(eta, dom: IntegrationDomain) -> StokesReport:
    """Compare ``int d eta`` with the boundary integral of ``eta``."""
    form = as_form(eta)
    lhs = integrate(form.d(), dom).exact
    rhs, faces = boundary_integral(form, dom)
    return StokesReport(lhs, rhs, lhs == rhs, faces)


# ---------------------------------------------------------------- convergence
@dataclass
class Convergence:
    status: str  # "absolutely-convergent" or "divergent"
    certificate: list = field(default_factory=list)

    @property
    def convergent(self) -> bool:
        return self.status == "absolutely-convergent"

    def as_dict(self) -> dict:
        return {"status": self.status, "certificate": [[f, str(w)] for f, w in self.certificate]}


def convergence_classify(w, dom: IntegrationDomain) -> Convergence:
    """Absolutely convergent iff the restriction to every face ``r = 0`` vanishes."""
    form = as_form(w)
    if form.chart.phantom:
        raise MathDomainError("convergence_classify needs a basic domain")
    chart = form.chart
    top = form.homogeneous_part(len(chart.basic) + len(chart.angular))
    cert = []
    for name in chart.basic:
        restricted = reg_restrict(top, (name,))
        if not restricted.is_zero():
            cert.append((f"{name}=0", restricted))
    return Convergence("divergent" if cert else "absolutely-convergent", cert)


def point_domain() -> IntegrationDomain:
    return IntegrationDomain(POINT)
