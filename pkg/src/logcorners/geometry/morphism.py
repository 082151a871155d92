"""Weak morphisms between charts, faces and tangential basepoints.

A weak morphism ``phi: source -> target`` is stored as a substitution table
on target coordinates.  Basic and phantom target coordinates receive monoid
elements of the source, free coordinates receive coefficients and angular
coordinates receive ``sign * theta' + offset * pi``.

The underlying map sends a basic coordinate ``r`` to ``alpha(phi^* r)``
except for the coordinates listed in ``boundary``, which land on ``r = 0``
even though their monoid image is a unit.  Tangential basepoints are the
typical example: ``r -> lam`` with underlying point ``r = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ChartMismatch, InvalidFace, UnknownCoordinate
from ..symcore import Coefficient
from .chart import POINT, Chart
from .monoid import MonoidElement


@dataclass(frozen=True)
class AngleMap:
    """``theta -> sign * source + offset * pi``; ``source`` may be ``None``."""

    sign: int = 1
    source: str | None = None
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("angular sign must be +1 or -1")
        object.__setattr__(self, "offset", Fraction(self.offset))
        if (2 * self.offset).denominator != 1:
            raise ValueError("angular offsets must be multiples of pi/2")

    def as_tuple(self):
        return (self.sign, self.source, self.offset)


def _sorted_items(d) -> tuple:
    items = d.items() if isinstance(d, dict) else d
    return tuple(sorted(items, key=lambda kv: kv[0]))


@dataclass(frozen=True)
class WeakMorphism:
    source: Chart
    target: Chart
    r_map: tuple = ()
    t_map: tuple = ()
    x_map: tuple = ()
    theta_map: tuple = ()
    boundary: frozenset = frozenset()

    def __post_init__(self):
        for attr in ("r_map", "t_map", "x_map", "theta_map"):
            object.__setattr__(self, attr, _sorted_items(getattr(self, attr)))
        object.__setattr__(self, "boundary", frozenset(self.boundary))
        tgt, src = self.target, self.source
        checks = (("r_map", tgt.basic), ("t_map", tgt.phantom), ("x_map", tgt.free), ("theta_map", tgt.angular))
        for attr, names in checks:
            keys = [k for k, _ in getattr(self, attr)]
            if sorted(keys) != sorted(names):
                raise ChartMismatch(f"{attr} must assign exactly {names}, got {keys}")
        src_x_r_theta = set(src.free) | set(src.basic) | set(src.angular)
        for name, m in self.r_map + self.t_map:
            if not isinstance(m, MonoidElement):
                raise TypeError(f"image of {name} must be a MonoidElement")
            if not {n for n, _ in m.r_exp} <= set(src.basic):
                raise ChartMismatch(f"image of {name} uses non-basic source coordinates")
            if not {n for n, _ in m.t_exp} <= set(src.phantom):
                raise ChartMismatch(f"image of {name} uses non-phantom source coordinates")
            if not m.exp_arg.coordinates() <= src_x_r_theta:
                raise ChartMismatch(f"image of {name} uses unknown coordinates")
        for name, c in self.x_map:
            if not isinstance(c, Coefficient):
                raise TypeError(f"image of {name} must be a Coefficient")
            if not c.coordinates() <= src_x_r_theta:
                raise ChartMismatch(f"image of {name} uses unknown coordinates")
        for name, a in self.theta_map:
            if a.source is not None and a.source not in src.angular:
                raise ChartMismatch(f"image of {name} uses non-angular source coordinate {a.source}")
        if not self.boundary <= set(tgt.basic):
            raise UnknownCoordinate("boundary set must consist of target basic coordinates")

    # ---------------------------------------------------------- construction
    @classmethod
    def build(cls, source: Chart, target: Chart, r=None, t=None, x=None, theta=None, boundary=()):
        """Assemble a morphism; target coordinates not mentioned map to the
        same-named source coordinate of the same kind."""
        r, t, x, theta = dict(r or {}), dict(t or {}), dict(x or {}), dict(theta or {})

        def default(name, kind):
            if name not in getattr(source, kind):
                raise ChartMismatch(f"no assignment for target coordinate {name!r}")
            return name

        for name in target.basic:
            if name not in r:
                r[name] = MonoidElement.coordinate(default(name, "basic"))
            r[name] = _monoid(r[name])
        for name in target.phantom:
            if name not in t:
                t[name] = MonoidElement.coordinate(default(name, "phantom"), phantom=True)
            t[name] = _monoid(t[name])
        for name in target.free:
            if name not in x:
                x[name] = Coefficient.var(default(name, "free"))
            x[name] = Coefficient.coerce(x[name])
        for name in target.angular:
            if name not in theta:
                theta[name] = AngleMap(1, default(name, "angular"))
            a = theta[name]
            theta[name] = a if isinstance(a, AngleMap) else AngleMap(*a)
        return cls(source, target, r, t, x, theta, frozenset(boundary))

    @classmethod
    def identity(cls, chart: Chart) -> "WeakMorphism":
        return cls.build(chart, chart)

    # ------------------------------------------------------------- structure
    def image(self, name: str):
        for table in (self.r_map, self.t_map, self.x_map, self.theta_map):
            for k, v in table:
                if k == name:
                    return v
        raise UnknownCoordinate(f"{name!r} is not a coordinate of the target")

    def underlying(self) -> tuple[dict, dict]:
        """Substitution tables of the underlying map for coefficients."""
        mapping = {}
        for name, m in self.r_map:
            mapping[name] = Coefficient() if name in self.boundary else m.alpha()
        for name, c in self.x_map:
            mapping[name] = c
        angular = {name: a.as_tuple() for name, a in self.theta_map}
        return mapping, angular

    def pull_coefficient(self, c: Coefficient) -> Coefficient:
        mapping, angular = self.underlying()
        return c.substitute(mapping, angular)

    def pull_monoid(self, m: MonoidElement) -> MonoidElement:
        """Pullback of a monoid section of the target."""
        out = MonoidElement(m.coeff, m.sigma)
        if not m.exp_arg.is_zero():
            out = out * MonoidElement(exp_arg=self.pull_coefficient(m.exp_arg))
        images = dict(self.r_map + self.t_map)
        for name, e in m.r_exp + m.t_exp:
            out = out * images[name] ** e
        return out

    def is_ordinary(self) -> bool:
        """Phantoms go to phantoms and no basic coordinate is pushed onto the boundary."""
        if any(not m.is_phantom() for _, m in self.t_map):
            return False
        return not any(self.image(name).is_basic() for name in self.boundary)

    def __str__(self):
        from ..cli.render import render_morphism
        return render_morphism(self)


def _monoid(value) -> MonoidElement:
    if isinstance(value, MonoidElement):
        return value
    return MonoidElement.constant(value)


def compose(g: WeakMorphism, f: WeakMorphism) -> WeakMorphism:
    """``g o f`` for ``f: A -> B`` and ``g: B -> C``."""
    if g.source != f.target:
        raise ChartMismatch(f"cannot compose: {g.source} != {f.target}")
    r_map = {name: f.pull_monoid(m) for name, m in g.r_map}
    t_map = {name: f.pull_monoid(m) for name, m in g.t_map}
    x_map = {name: f.pull_coefficient(c) for name, c in g.x_map}
    f_angles = dict(f.theta_map)
    theta_map = {}
    for name, a in g.theta_map:
        if a.source is None:
            theta_map[name] = a
        else:
            b = f_angles[a.source]
            theta_map[name] = AngleMap(a.sign * b.sign, b.source, a.sign * b.offset + a.offset)
    f_images = dict(f.r_map + f.t_map)
    boundary = set()
    for name, m in g.r_map:
        if name in g.boundary:
            boundary.add(name)
            continue
        # the underlying value vanishes although the composite image may not
        if any(n in f.boundary and f_images[n].is_basic() for n, _ in m.r_exp):
            boundary.add(name)
        elif any(f_images[n].is_basic() for n, _ in m.t_exp):
            boundary.add(name)
    boundary = {name for name in boundary if r_map[name].is_basic()}
    return WeakMorphism(f.source, g.target, r_map, t_map, x_map, theta_map, frozenset(boundary))


def face(chart: Chart, selected) -> tuple[Chart, WeakMorphism]:
    """Face chart where the ``selected`` basic coordinates vanish, with its inclusion."""
    if not chart.basic:
        raise InvalidFace(f"{chart} has no basic coordinates, so its boundary is empty")
    face_chart, renames = chart.face_chart(selected)
    r = {name: MonoidElement.coordinate(new, phantom=True) for name, new in renames.items()}
    inclusion = WeakMorphism.build(face_chart, chart, r=r)
    return face_chart, inclusion


def face_renames(chart: Chart, selected) -> dict:
    return chart.face_chart(selected)[1]


def tangential_basepoint(chart: Chart, r=None, x=None, theta=None, t=None, boundary=None) -> WeakMorphism:
    """A weak morphism from the point chart.

    ``r`` gives positive constants for the basic coordinates; by default each
    of them lands at ``r = 0`` with that constant as normal vector.  Pass
    ``boundary`` explicitly to place some coordinates at interior points.
    """
    r = {k: _monoid(v) for k, v in dict(r or {}).items()}
    t = {k: _monoid(v) for k, v in dict(t or {}).items()}
    x = {k: Coefficient.coerce(v) for k, v in dict(x or {}).items()}
    theta = dict(theta or {})
    for name in chart.angular:
        a = theta.get(name, AngleMap(1, None, 0))
        if not isinstance(a, AngleMap):
            a = AngleMap(1, None, Fraction(a))
        theta[name] = a
    for name in chart.basic:
        r.setdefault(name, MonoidElement())
    for name in chart.free:
        x.setdefault(name, Coefficient())
    for name in chart.phantom:
        if name not in t:
            raise ChartMismatch(f"basepoint needs a value for phantom {name!r}")
    for name, m in list(r.items()) + list(t.items()):
        if not m.is_constant():
            raise ValueError(f"basepoint value for {name} must be a positive constant")
    if boundary is None:
        boundary = set(chart.basic)
    return WeakMorphism(POINT, chart, r, t, x, theta, frozenset(boundary))


def is_tangential_basepoint(phi: WeakMorphism) -> bool:
    return phi.source == POINT and all(m.is_constant() for _, m in phi.r_map + phi.t_map)
