"""Scales, regularizations and the compatibility solver for corner scales."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ChartMismatch, LogCornersError
from .chart import Chart
from .monoid import MonoidElement
from .morphism import WeakMorphism, _monoid, face


@dataclass(frozen=True)
class Scale:
    """Positive basic values ``t_j -> s^j`` for every phantom of ``chart``."""

    chart: Chart
    values: tuple = ()

    def __post_init__(self):
        items = self.values.items() if isinstance(self.values, dict) else self.values
        items = tuple(sorted(((k, _monoid(v)) for k, v in items), key=lambda kv: kv[0]))
        object.__setattr__(self, "values", items)
        keys = [k for k, _ in items]
        if sorted(keys) != sorted(self.chart.phantom):
            raise ChartMismatch(f"scale must give a value for exactly {self.chart.phantom}, got {keys}")
        basic = self.chart.basic_part()
        for name, m in items:
            if not m.is_basic():
                raise ValueError(f"scale value for {name} must be basic")
            if not m.coordinates() <= set(basic.coordinates()):
                raise ChartMismatch(f"scale value for {name} uses coordinates outside {basic}")

    def value(self, name: str) -> MonoidElement:
        return dict(self.values)[name]

    def is_nondegenerate(self) -> bool:
        return all(not m.r_exp for _, m in self.values)

    def morphism(self) -> WeakMorphism:
        """The weak section from the basic part back to the chart."""
        return WeakMorphism.build(self.chart.basic_part(), self.chart, t=dict(self.values))

    @classmethod
    def unit(cls, chart: Chart) -> "Scale":
        return cls(chart, {name: MonoidElement() for name in chart.phantom})


UNKNOWN = None


@dataclass
class Regularization:
    """Scales on a chart and on its faces of depth one and two.

    ``faces`` maps a basic coordinate to the scale values (dict phantom ->
    MonoidElement) on the face where it vanishes.  ``corners`` maps a
    frozenset of two basic coordinates to the values on that corner; a value
    ``None`` marks an unknown positive constant to be solved for.  Corner
    data are keyed by phantom names, so they are automatically invariant
    under swapping the two faces.
    """

    chart: Chart
    chart_scale: dict = field(default_factory=dict)
    faces: dict = field(default_factory=dict)
    corners: dict = field(default_factory=dict)

    def face_scale(self, name: str) -> Scale:
        fchart, _ = face(self.chart, (name,))
        return Scale(fchart, self.faces[name])

    @classmethod
    def product(cls, chart: Chart, basepoints: dict) -> "Regularization":
        """Constant scales ``t_i -> lam_i`` on every face and corner."""
        faces, corners = {}, {}
        chart_phantoms = {p: MonoidElement() for p in chart.phantom}
        for name in chart.basic:
            fchart, ren = chart.face_chart((name,))
            faces[name] = {ren[name]: _monoid(basepoints[name]), **chart_phantoms}
        for a in chart.basic:
            for b in chart.basic:
                if a < b:
                    _, ren = chart.face_chart((a, b))
                    corners[frozenset((a, b))] = {
                        ren[a]: _monoid(basepoints[a]), ren[b]: _monoid(basepoints[b]), **chart_phantoms}
        return cls(chart, dict(chart_phantoms), faces, corners)


@dataclass
class RegularizationReport:
    status: str  # "ok", "violated", "solved", "unsolvable", "underdetermined"
    violations: list = field(default_factory=list)
    solution: dict = field(default_factory=dict)
    free_parameters: list = field(default_factory=list)
    unchecked: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "violations": [str(v) for v in self.violations],
            "solution": {k: str(v) for k, v in self.solution.items()},
            "free_parameters": list(self.free_parameters),
            "unchecked": list(self.unchecked),
        }


def check_regularization(reg: Regularization) -> RegularizationReport:
    """Check that face inclusions are scale-preserving up to depth two.

    For a face ``F_i`` (where ``r_i = 0``) and a further face ``F_ij``, the
    condition ``i^* s_i^* p = s_ij^* i^* p`` is tested after evaluating both
    sides with ``s_ij``.  Unknown corner constants turn the conditions into a
    linear system for their logarithms, solved exactly.
    """
    from ..logforms.logfunction import LogFunction, log_of

    chart = reg.chart
    if len(chart.basic) < 1:
        return RegularizationReport("ok")
    for name in chart.basic:
        if name not in reg.faces:
            raise LogCornersError(f"missing face scale for {name}")
    unknown_names = {}
    for pair, values in reg.corners.items():
        for p, v in values.items():
            if v is None:
                suffix = "" if len(reg.corners) == 1 else "_" + "_".join(sorted(pair))
                unknown_names[(pair, p)] = f"log(lam_{p}{suffix})"
    rows = []  # (coefficients {unknown: Fraction}, rhs LogFunction on corner chart)
    unchecked = []
    if len(chart.basic) > 2:
        unchecked.append("faces of depth three and more")
    for name in chart.basic:
        fchart, ren = chart.face_chart((name,))
        s_face = reg.faces[name]
        # chart scale against face scale on the chart's own phantoms
        for p in chart.phantom:
            if p in reg.chart_scale:
                lhs = reg.chart_scale[p].restrict_basic(ren)
                rhs = s_face[p]
                lhs = Scale(fchart, s_face).morphism().pull_monoid(lhs)
                if log_of(lhs, fchart.basic_part()) != log_of(rhs, fchart.basic_part()):
                    rows.append(({}, log_of(lhs, fchart.basic_part()) - log_of(rhs, fchart.basic_part())))
        for other in chart.basic:
            if other == name:
                continue
            pair = frozenset((name, other))
            if pair not in reg.corners:
                raise LogCornersError(f"missing corner scale for {sorted(pair)}")
            cchart, ren2 = fchart.face_chart((other,))
            corner_vals = reg.corners[pair]
            known = {p: v for p, v in corner_vals.items() if v is not None}
            unknown = {p: unknown_names[(pair, p)] for p, v in corner_vals.items() if v is None}
            basic = cchart.basic_part()
            for p in fchart.phantom:
                left = s_face[p].restrict_basic(ren2)
                coeffs: dict = {}
                const = LogFunction.zero(basic)
                # evaluate the phantoms of ``left`` with the corner scale
                base = MonoidElement(left.coeff, left.sigma, left.exp_arg, left.r_exp)
                const = const + log_of(base, basic)
                for t, e in left.t_exp:
                    if t in known:
                        const = const + log_of(known[t], basic) * e
                    else:
                        coeffs[unknown[t]] = coeffs.get(unknown[t], 0) + e
                if p in known:
                    const = const - log_of(known[p], basic)
                else:
                    coeffs[unknown[p]] = coeffs.get(unknown[p], 0) - 1
                rows.append(({k: Fraction(v) for k, v in coeffs.items() if v}, const))
    return _solve(rows, sorted(set(unknown_names.values())), unchecked)


def _solve(rows, unknowns, unchecked) -> RegularizationReport:
    """Exact Gaussian elimination for ``sum c_k X_k + const = 0``."""
    work = [(dict(c), -const) for c, const in rows]  # sum c_k X_k = rhs
    pivots = []
    # later unknowns are eliminated first, so earlier ones stay free
    for var in reversed(unknowns):
        idx = next((i for i, (c, _) in enumerate(work) if c.get(var, 0) != 0 and i >= len(pivots)), None)
        if idx is None:
            continue
        k = len(pivots)
        work[k], work[idx] = work[idx], work[k]
        c, rhs = work[k]
        piv = c[var]
        c = {v: x / piv for v, x in c.items()}
        rhs = rhs * (1 / piv)
        work[k] = (c, rhs)
        for i, (ci, ri) in enumerate(work):
            if i == k or ci.get(var, 0) == 0:
                continue
            f = ci[var]
            new = dict(ci)
            for v, x in c.items():
                new[v] = new.get(v, 0) - f * x
            new = {v: x for v, x in new.items() if x != 0}
            work[i] = (new, ri - rhs * f)
        pivots.append(var)
    violations = [rhs for c, rhs in work[len(pivots):] if not c and not rhs.is_zero()]
    if violations:
        status = "unsolvable" if unknowns else "violated"
        return RegularizationReport(status, violations=violations, unchecked=unchecked)
    if not unknowns:
        return RegularizationReport("ok", unchecked=unchecked)
    free = [v for v in unknowns if v not in pivots]
    solution = {}
    for k, var in enumerate(pivots):
        c, rhs = work[k]
        solution[var] = (rhs, {v: -x for v, x in c.items() if v != var})
    status = "underdetermined" if free else "solved"
    rendered = {}
    for var, (rhs, deps) in solution.items():
        rendered[var] = _render_solution(rhs, deps)
    return RegularizationReport(status, solution=rendered, free_parameters=free, unchecked=unchecked)


class _Affine:
    def __init__(self, rhs, deps):
        self.rhs = rhs
        self.deps = deps

    def __str__(self):
        parts = [str(self.rhs)] if not self.rhs.is_zero() or not self.deps else []
        for v, x in sorted(self.deps.items()):
            coef = "" if x == 1 else ("-" if x == -1 else f"{x}*")
            parts.append(f"{coef}{v}")
        return "+".join(parts).replace("+-", "-")


def _render_solution(rhs, deps):
    return _Affine(rhs, deps)

