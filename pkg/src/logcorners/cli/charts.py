"""Chart descriptions, basepoints, scales and maps given on the command line.

Chart grammar: factors joined by ``x`` (or ``×``), each optionally named
``name:factor``.

    I(0,b)    bounded basic coordinate on [0, b]      default names r, s, u, v, w
    [0,inf)   unbounded basic coordinate
    S1        angular coordinate                      default names th, ph, ...
    R         free coordinate                         default names x, y, ...
    [0)       phantom coordinate                      default names t, t2, ...

Charts may also be JSON documents in the ``logcorners-chart/1`` format.
"""
from __future__ import annotations

import json
import os
import re
from fractions import Fraction

from ..errors import ExpressionTypeError, ParseError
from ..geometry.chart import Chart
from ..geometry.monoid import MonoidElement
from ..geometry.morphism import AngleMap, WeakMorphism, tangential_basepoint
from ..geometry.scale import Scale
from ..symcore import Scalar
from .build import Builder, build_function, build_monoid, build_scalar
from .grammar import parse
from .render import render_monoid

CHART_FORMAT = "logcorners-chart/1"
_DEFAULTS = {
    "basic": ["r", "s", "u", "v", "w"],
    "angular": ["th", "ph", "psi"],
    "free": ["x", "y", "z"],
    "phantom": ["t", "t2", "t3"],
}
_FACTOR = re.compile(r"^(?:(?P<name>[A-Za-z_]\w*)\s*:\s*)?(?P<body>.+)$")


def _split_factors(text: str) -> list:
    """Split on ``x``/``×`` at depth zero, right after the end of a factor."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "x×" and cur.rstrip()[-1:] in tuple(")]1RH"):
            parts.append(cur)
            cur = ""
            continue
        cur += ch
    parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def parse_chart(text: str) -> Chart:
    if text.strip() in ("", "pt", "point"):
        return Chart()
    kinds = {"free": [], "basic": [], "phantom": [], "angular": []}
    bounds = {}
    used = set()
    pending = []
    for pos, factor in enumerate(_split_factors(text)):
        m = _FACTOR.match(factor)
        name, body = m.group("name"), m.group("body").replace(" ", "")
        if body.startswith("I(") and body.endswith(")"):
            inner = body[2:-1].split(",")
            if len(inner) != 2 or inner[0] != "0":
                raise ParseError(f"interval factor must look like I(0,b): {factor!r}", pos)
            kind, bound = "basic", inner[1]
        elif body in ("[0,inf)", "[0,oo)", "H"):
            kind, bound = "basic", None
        elif body in ("S1", "S^1"):
            kind, bound = "angular", None
        elif body in ("R", "R1"):
            kind, bound = "free", None
        elif body == "[0)":
            kind, bound = "phantom", None
        else:
            raise ParseError(f"unknown chart factor {factor!r}", pos)
        pending.append((kind, name, bound))
        if name:
            used.add(name)
    for kind, name, bound in pending:
        if name is None:
            name = next(n for n in _DEFAULTS[kind] + [f"{kind}{k}" for k in range(1, 50)] if n not in used)
            used.add(name)
        kinds[kind].append(name)
        if bound is not None:
            bounds[name] = bound
    chart = Chart(kinds["free"], kinds["basic"], kinds["phantom"], kinds["angular"])
    resolved = {n: _bound(b) for n, b in bounds.items()}
    return Chart(chart.free, chart.basic, chart.phantom, chart.angular, resolved)


def _bound(text: str) -> MonoidElement:
    m = build_monoid(text, Chart())
    if not m.is_constant():
        raise ExpressionTypeError(f"interval bound {text!r} must be a positive constant")
    return m


def chart_to_json(chart: Chart) -> dict:
    return {
        "format": CHART_FORMAT,
        "free": list(chart.free),
        "basic": [{"name": n, "bound": None if chart.bound(n) is None else render_monoid(chart.bound(n))}
                  for n in chart.basic],
        "phantom": list(chart.phantom),
        "angular": list(chart.angular),
    }


def chart_from_json(data: dict) -> Chart:
    if data.get("format") != CHART_FORMAT:
        raise ParseError(f"chart document must declare format {CHART_FORMAT!r}")
    basic, bounds = [], {}
    for item in data.get("basic", []):
        if isinstance(item, str):
            basic.append(item)
        else:
            basic.append(item["name"])
            if item.get("bound") is not None:
                bounds[item["name"]] = _bound(str(item["bound"]))
    return Chart(data.get("free", []), basic, data.get("phantom", []), data.get("angular", []), bounds)


def load_chart(text: str) -> Chart:
    """Inline chart grammar, a JSON document, or ``@path`` / an existing file path."""
    path = text[1:] if text.startswith("@") else text
    if text.startswith("@") or (os.path.isfile(path) and path.endswith(".json")):
        with open(path) as fh:
            return chart_from_json(json.load(fh))
    if text.lstrip().startswith("{"):
        return chart_from_json(json.loads(text))
    return parse_chart(text)


# ------------------------------------------------------------- basepoints
_TANGENT = re.compile(r"^\s*(?P<vec>.*?)\s*\*?\s*d/d(?P<coord>[A-Za-z_]\w*)\s*@\s*(?P<at>.+?)\s*$")


def _items(text: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in text:
        depth += ch == "("
        depth -= ch == ")"
        if ch in ",;" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [p.strip() for p in out if p.strip()]


def infer_chart(at: str) -> Chart:
    """Chart with one basic coordinate per ``d/dNAME`` in a basepoint string."""
    names = [m.group("coord") for item in _items(at) if (m := _TANGENT.match(item))]
    return Chart((), tuple(dict.fromkeys(names)), (), ())


def _pi_multiple(s: Scalar, what: str) -> Fraction:
    """``q`` with ``s = q*pi`` for rational ``q``."""
    if s.is_zero():
        return Fraction(0)
    frac = s.terms.get((1, ()))
    if set(s.terms) != {(1, ())} or not frac.is_constant():
        raise ExpressionTypeError(f"{what} must be a rational multiple of pi")
    g = frac.num.get(())
    if g.imag:
        raise ExpressionTypeError(f"{what} must be real")
    return Fraction(g.real)


def _angle(text: str) -> AngleMap:
    return AngleMap(1, None, _pi_multiple(build_scalar(text), f"angle {text!r}"))


def parse_basepoint(text: str, chart: Chart) -> WeakMorphism:
    """``c*d/dr@0`` (tangential), ``c*d/dr@b`` or ``r=b`` (interior), ``th=angle``, ``x=value``.

    Unlisted basic coordinates default to ``1*d/dr@0``, angles to 0 and free
    coordinates to 0.
    """
    r, x, theta, boundary = {}, {}, {}, set()
    for item in _items(text):
        m = _TANGENT.match(item)
        if m:
            name = m.group("coord")
            if name not in chart.basic:
                raise ExpressionTypeError(f"{name} is not a basic coordinate", ("at",))
            vec = m.group("vec") or "1"
            if vec.startswith("-"):
                vec = vec[1:] or "1"
            at = m.group("at")
            if build_scalar(at).is_zero():
                r[name] = build_monoid(vec, Chart())
                boundary.add(name)
            else:
                r[name] = build_monoid(at, Chart())
            continue
        if "=" not in item:
            raise ParseError(f"cannot read basepoint item {item!r}")
        name, value = (p.strip() for p in item.split("=", 1))
        kind = chart.kind(name)
        if kind == "basic":
            r[name] = build_monoid(value, Chart())
        elif kind == "angular":
            theta[name] = _angle(value)
        elif kind == "free":
            x[name] = build_scalar(value)
        else:
            raise ExpressionTypeError(f"phantom {name} takes its value from a scale, not a point", ("at",))
    for name in chart.basic:
        if name not in r:
            r[name] = MonoidElement()
            boundary.add(name)
    return tangential_basepoint(chart, r=r, x=x, theta=theta, boundary=boundary)


# ------------------------------------------------------------------ scales
_SCALE = re.compile(r"^\s*(?P<value>.*?)\s*\*?\s*d/d(?P<coord>[A-Za-z_]\w*)\s*$")


def parse_scale(text: str, chart: Chart) -> Scale:
    """``g*r^j d/dt`` items, one per phantom; unlisted phantoms get the unit scale."""
    values = {}
    basic = chart.basic_part()
    for item in _items(text):
        m = _SCALE.match(item)
        if not m:
            raise ParseError(f"scale items look like 'g*r^j d/dt', got {item!r}")
        name = m.group("coord")
        if name not in chart.phantom:
            raise ExpressionTypeError(f"{name} is not a phantom coordinate", ("scale",))
        values[name] = build_monoid(m.group("value") or "1", basic)
    for name in chart.phantom:
        values.setdefault(name, MonoidElement())
    return Scale(chart, values)


def parse_assignments(text: str | None) -> dict:
    """``a=2, lam=1/2`` as floats."""
    out = {}
    for item in _items(text or ""):
        if "=" not in item:
            raise ParseError(f"expected name=value, got {item!r}")
        name, value = (p.strip() for p in item.split("=", 1))
        out[name] = build_scalar(value).evaluate().real
    return out


def parse_map(text: str, source: Chart, target: Chart) -> WeakMorphism:
    """``r=u^2, th=-ph+1/2*pi, t=t1, x=y+1``; ``r=c@0`` lands on the boundary."""
    r, t, x, theta, boundary = {}, {}, {}, {}, set()
    for item in _items(text):
        if "=" not in item:
            raise ParseError(f"expected target=image, got {item!r}")
        name, value = (p.strip() for p in item.split("=", 1))
        kind = target.kind(name)
        if kind in ("basic", "phantom"):
            if value.endswith("@0"):
                value = value[:-2]
                boundary.add(name)
            m = build_monoid(value, source)
            (r if kind == "basic" else t)[name] = m
        elif kind == "free":
            x[name] = build_function(value, source).terms.get((), None)
            if x[name] is None:
                raise ExpressionTypeError(f"image of {name} must not involve logarithms", ("map", name))
        else:
            theta[name] = _angle_map(value, source)
    return WeakMorphism.build(source, target, r=r, t=t, x=x, theta=theta, boundary=boundary)


def _angle_map(text: str, source: Chart) -> AngleMap:
    node = parse(text)
    b = Builder(source)
    coeff, th = b._linear(node, ("map",))
    if len(th) > 1:
        raise ExpressionTypeError("an angle maps to at most one source angle", ("map",))
    if not coeff.is_constant():
        raise ExpressionTypeError("angle offset must be constant", ("map",))
    offset = _pi_multiple(coeff.constant_term(), "angle offset")
    if not th:
        return AngleMap(1, None, offset)
    (src, s), = th.items()
    if s not in (Scalar.one(), -Scalar.one()):
        raise ExpressionTypeError("angles map by +/- identity plus a constant", ("map",))
    return AngleMap(1 if s == Scalar.one() else -1, src, offset)
