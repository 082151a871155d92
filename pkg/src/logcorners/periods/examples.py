"""Worked periods assembled from engine operations: residues on circles of
radius zero, the regularized Kummer matrix, the single-valued integral of
``(dz/(z-a) - dz/(z-1)) ^ dlog zbar`` via regularized Stokes and via the
double copy formula."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import MathDomainError, NotRepresentable
from ..geometry.chart import Chart
from ..geometry.monoid import MonoidElement
from ..geometry.morphism import AngleMap, WeakMorphism, _monoid
from ..geometry.scale import Scale
from ..integration.integrate import IntegrationDomain, integrate, integrate_circle, integrate_interval
from ..logforms.logform import LogForm
from ..logforms.pullback import pullback
from ..regularization.operations import apply_scale, reg_restrict
from ..symcore import Scalar
from .polar import INF, POLAR, Expander, as_point, log_abs

CIRCLE = Chart((), (), (), ("th",))


def _profile(value) -> MonoidElement:
    m = _monoid(value) if value is not None else MonoidElement()
    if not m.is_unit():
        raise MathDomainError(f"scale profile {m} is not a positive unit")
    if m.exp_arg.coordinates() - {"th"}:
        raise MathDomainError("scale profile may only depend on the angle th")
    if not m.exp_arg.is_real():
        raise MathDomainError("scale profile must be real")
    return m


def circle_of_radius_zero(w: LogForm, profile=None, sign: int = 1) -> Scalar:
    """``int`` over the boundary circle ``r = 0`` of a form on the polar chart.

    The circle is reached by regularized restriction and the normal scale
    ``t -> profile(th)``; ``sign`` is the orientation relative to ``dth``.
    """
    restricted = reg_restrict(w, ("r",))
    (t,) = restricted.chart.phantom
    scaled = apply_scale(Scale(restricted.chart, {t: _profile(profile)}), restricted)
    scaled = LogForm(CIRCLE, scaled.terms)
    return integrate_circle(scaled).exact * sign


def residue_radius_zero(profile=None) -> Scalar:
    """``int_{gamma_0} dlog z`` for the circle of radius zero with normal scale ``profile``."""
    dlog_z = Expander(0, 1).dlog(0).to_form()
    return circle_of_radius_zero(dlog_z, profile)


def fourier_profile(coeffs: dict, constant=1) -> MonoidElement:
    """``constant * exp(sum_n c_n e^{i n th})``; ``coeffs`` must be conjugate-symmetric."""
    from ..symcore import Coefficient

    q = Coefficient()
    for n, c in coeffs.items():
        if n == 0:
            raise MathDomainError("put constant factors in ``constant``")
        q = q + Coefficient.fourier("th", n) * Scalar.const(c)
    return _profile(MonoidElement.unit(q, Fraction(1), ()) * MonoidElement.constant(constant))


# ------------------------------------------------------------------ Kummer
@dataclass(frozen=True)
class KummerConfig:
    a: object = "a"
    lam: object = "lam"
    profile: object = None  # normal scale of the radius-zero circle

    def endpoint(self) -> MonoidElement:
        return _monoid(self.a)

    def basepoint(self) -> MonoidElement:
        return _monoid(self.lam)


def eta0(cfg: KummerConfig) -> WeakMorphism:
    """``[0, a] -> [0, inf) x S^1``, ``r -> r``, ``th -> 0``."""
    interval = Chart((), ("r",), (), (), {"r": cfg.endpoint()})
    return WeakMorphism.build(interval, POLAR, theta={"th": AngleMap(1, None, 0)})


def gamma0(cfg: KummerConfig) -> WeakMorphism:
    """``S^1 -> [0, inf) x S^1``, ``r -> profile(th) d/dr at 0``."""
    return WeakMorphism.build(CIRCLE, POLAR, r={"r": _profile(cfg.profile)}, boundary={"r"})


def kummer_period_matrix(cfg: KummerConfig | None = None) -> list:
    """Rows ``(eta_0, gamma_0)``, columns ``(dz, dlog z)``."""
    cfg = cfg or KummerConfig()
    ex = Expander(0, 1)
    dz = ex.dz().to_form()
    dlog_z = ex.dlog(0).to_form()
    eta = eta0(cfg)
    row_eta = [integrate_interval(pullback(eta, w), cfg.endpoint(), cfg.basepoint()).exact for w in (dz, dlog_z)]
    gamma_dz = integrate(pullback(gamma0(cfg), dz), IntegrationDomain(CIRCLE)).exact
    return [row_eta, [gamma_dz, residue_radius_zero(cfg.profile)]]


# -------------------------------------------------------- single-valued I2
def _i2_primitive(ex: Expander, a) -> LogForm:
    """``alpha = -log|z|^2 (dz/(z-a) - dz/(z-1))`` near the expander's point."""
    return ((ex.dlog(a) - ex.dlog(1)) * (-ex.log_abs_sq(0))).to_form()


def i2_via_stokes(a="a", order: int = 2, profiles: dict | None = None, detail: bool = False):
    """``iint (dz/(z-a) - dz/(z-1)) ^ dlog zbar`` as the sum of regularized
    boundary integrals of its primitive over the four blown-up punctures.

    Boundary circles carry the orientation induced from the complex one,
    which is ``-dth`` at ``r = 0``.
    """
    if order < 1:
        raise MathDomainError("expansion order must be at least 1")
    profiles = profiles or {}
    total = Scalar()
    parts = {}
    for p in (0, 1, a, INF):
        ex = Expander(p, order)
        key = "inf" if p == INF else str(p)
        parts[key] = circle_of_radius_zero(_i2_primitive(ex, a), profiles.get(key), sign=-1)
        total = total + parts[key]
    return (total, parts) if detail else total


# ------------------------------------------------------------ double copy
@dataclass(frozen=True)
class Circle:
    """Circle of radius zero around ``center``, counterclockwise in the local coordinate."""

    center: object
    profile: object = None


@dataclass(frozen=True)
class Segment:
    """Straight path from ``start`` to ``end`` along the real line.

    ``"inf"`` and ``"-inf"`` are the two ends of the real line; both are the
    point at infinity, the sign only fixes the side of the path.
    ``basepoints`` gives the tangential scale at an endpoint that is a pole.
    """

    start: object
    end: object
    basepoints: tuple = ()


@dataclass
class DoubleCopyConfigP1:
    """Forms ``omega = sum c_q dz/(z-q)`` (poles in A) and ``nu`` (poles in B),
    with dual chains ``pairs = [(gamma_i, gamma_i_dual, sign_i)]``."""

    a: object = "a"
    omega: dict = field(default_factory=lambda: {"a": 1, 1: -1})
    nu: dict = field(default_factory=lambda: {0: 1})
    A: tuple = (1, "a")
    B: tuple = (0, INF)
    pairs: list | None = None

    def chains(self) -> list:
        if self.pairs is not None:
            return self.pairs
        return [
            (Segment(0, "-inf"), Circle(0), 1),
            (Circle(self.a), Segment(1, self.a), 1),
        ]


def _residues(form: dict) -> dict:
    out = {}
    for q, c in form.items():
        p = as_point(q)
        if p == INF:
            raise MathDomainError("list finite poles only; the residue at infinity is implied")
        out[p] = out.get(p, Scalar()) + Scalar.const(c)
    return {p: c for p, c in out.items() if not c.is_zero()}


def _check_residues(res: dict, allowed: set, label: str):
    bad = [p for p in res if p not in allowed]
    if bad:
        raise MathDomainError(f"{label} has poles {bad} outside its divisor")
    total = sum(res.values(), Scalar())
    if INF not in allowed and not total.is_zero():
        raise MathDomainError(f"{label}: residues must sum to zero (no pole at infinity allowed)")


def _line_value(point, q, basepoint) -> Scalar:
    """Regularized ``log |z - q|`` at an endpoint of a real segment.

    Endpoint values come from the Kummer matrix: ``log |p - q|`` is the
    ``eta_0`` entry for ``a = |p - q|`` with unit basepoint; an endpoint at the
    pole contributes ``log`` of its basepoint; infinity contributes
    ``-log`` of its basepoint in the coordinate ``1/z``.
    """
    if point == INF:
        return -_monoid(basepoint).log_constant()
    diff = point - q
    if diff.is_zero():
        return _monoid(basepoint).log_constant()
    for v in (diff, -diff):
        try:
            m = MonoidElement.constant(v)
        except NotRepresentable:
            continue
        return kummer_period_matrix(KummerConfig(m, 1))[0][1]
    raise NotRepresentable(f"log|{diff}| is not expressible")


def _end(value):
    if value == "-inf":
        return INF, float("-inf")
    p = as_point(value)
    return p, float("inf") if p == INF else _real_value(p)


def _real_value(p: Scalar):
    if p.parameters():
        return None
    v = p.evaluate()
    if v.imag:
        raise MathDomainError(f"segment endpoint {p} is not real")
    return v.real


def _segment_period(seg: Segment, residues: dict) -> Scalar:
    (start, s), (end, e) = _end(seg.start), _end(seg.end)
    bps = dict(seg.basepoints)
    out = Scalar()
    for q, c in residues.items():
        x = _real_value(q)
        if None not in (s, e, x) and min(s, e) < x < max(s, e):
            raise MathDomainError(f"pole {q} lies on the segment")
        vs = _line_value(start, q, bps.get(seg.start, 1))
        ve = _line_value(end, q, bps.get(seg.end, 1))
        out = out + c * (ve - vs)
    return out


def _circle_period(circle: Circle, residues: dict) -> Scalar:
    ex = Expander(circle.center, 1)
    out = Scalar()
    for q, c in residues.items():
        out = out + c * circle_of_radius_zero(ex.dlog(q).to_form(), circle.profile)
    return out


def chain_period(chain, residues: dict) -> Scalar:
    if isinstance(chain, Circle):
        return _circle_period(chain, residues)
    if isinstance(chain, Segment):
        return _segment_period(chain, residues)
    raise TypeError(f"unknown chain {chain!r}")


def double_copy_p1(cfg: DoubleCopyConfigP1 | None = None, detail: bool = False):
    """``sum_i int_{gamma_i} omega * conj(int_{gamma_i_dual} nu)``."""
    cfg = cfg or DoubleCopyConfigP1()
    A = {as_point(p) for p in cfg.A}
    B = {as_point(p) for p in cfg.B}
    if A & B:
        raise MathDomainError("A and B must be disjoint")
    om, nu = _residues(cfg.omega), _residues(cfg.nu)
    _check_residues(om, A, "omega")
    _check_residues(nu, B, "nu")
    total = Scalar()
    terms = []
    for chain, dual, sign in cfg.chains():
        p = chain_period(chain, om)
        q = chain_period(dual, nu).conjugate()
        terms.append((p, q, sign))
        total = total + p * q * sign
    return (total, terms) if detail else total


def i2_closed_form(a="a") -> Scalar:
    """``2 pi i log|a|^2`` for a real puncture ``a``."""
    return Scalar.two_pi_i() * log_abs(as_point(a)) * 2
