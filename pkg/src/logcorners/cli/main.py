"""``logcorners`` command line.

Every subcommand prints one JSON document in the ``logcorners-result/1``
format.  Exit status: 0 on success, 2 for parse or type errors, 3 for
mathematically undefined requests.
"""
from __future__ import annotations

import argparse
import json
import sys

from ..errors import (
    ChartMismatch,
    ExpressionTypeError,
    LogCornersError,
    MathDomainError,
    ParseError,
    UnknownCoordinate,
)
from ..geometry.chart import Chart
from ..geometry.monoid import MonoidElement
from ..geometry.scale import Regularization, check_regularization
from ..integration.integrate import IntegrationDomain, convergence_classify, integrate, stokes_check
from ..logforms.logform import LogForm, as_form
from ..logforms.pullback import pullback
from ..numeric.quadrature import QuadratureSpec, divergence_fit, quadrature
from ..regularization.operations import (
    apply_scale,
    combined_projection,
    homotopy_combined,
    homotopy_interval,
    homotopy_phantom,
    reg_restrict,
    reglim,
    unit_projection,
)
from .build import build, build_form, build_function, build_monoid
from .charts import (
    chart_to_json,
    infer_chart,
    load_chart,
    parse_assignments,
    parse_basepoint,
    parse_map,
    parse_scale,
)
from .render import render_logform, render_logfunction, render_scalar

RESULT_FORMAT = "logcorners-result/1"
EXIT_OK, EXIT_PARSE, EXIT_DOMAIN = 0, 2, 3


def _complex(z):
    return None if z is None else [float(z.real), float(z.imag)]


def _render(obj) -> str:
    if isinstance(obj, LogForm):
        return render_logform(obj)
    return render_logfunction(obj)


def _approx(scalar, args):
    if getattr(args, "approx", None) is None:
        return None
    return _complex(scalar.evaluate(parse_assignments(args.approx)))


# ---------------------------------------------------------------- commands
def cmd_reglim(args):
    chart = load_chart(args.chart) if args.chart else infer_chart(args.at)
    f = build_function(args.expr, chart)
    if args.scale:
        f = apply_scale(parse_scale(args.scale, chart), f)
        chart = f.chart
    value = reglim(f, parse_basepoint(args.at, chart))
    out = {"exact": render_scalar(value)}
    if args.approx is not None:
        out["approx"] = _approx(value, args)
    return out


def cmd_restrict(args):
    chart = load_chart(args.chart)
    obj = build(args.expr, chart)
    faces = tuple(n.strip() for n in args.face.split(",") if n.strip())
    res = reg_restrict(obj, faces)
    if args.scale:
        res = apply_scale(parse_scale(args.scale, res.chart), res)
    return {"result": _render(res), "chart": chart_to_json(res.chart)}


def cmd_scale(args):
    chart = load_chart(args.chart)
    obj = build(args.expr, chart)
    res = apply_scale(parse_scale(args.scale, chart), obj)
    return {"result": _render(res), "chart": chart_to_json(res.chart)}


def cmd_pullback(args):
    source, target = load_chart(args.source), load_chart(args.target)
    phi = parse_map(args.map, source, target)
    res = pullback(phi, build(args.expr, target))
    return {"result": _render(res), "morphism": str(phi), "chart": chart_to_json(source)}


def _domain(args, chart: Chart) -> IntegrationDomain:
    base = {}
    text = args.scale0 or "1"
    if "=" in text:
        for item in text.split(","):
            name, value = (p.strip() for p in item.split("=", 1))
            base[name] = build_monoid(value, Chart())
    else:
        value = build_monoid(text, Chart())
        base = {name: value for name in chart.basic}
    chart_scale = parse_scale(args.chart_scale or "", chart) if chart.phantom else None
    order = tuple(n.strip() for n in args.order.split(",")) if args.order else None
    return IntegrationDomain(chart, base, (), chart_scale, args.sign, order)


def cmd_integrate(args):
    chart = load_chart(args.chart)
    w = build_form(args.form, chart)
    dom = _domain(args, chart)
    params = parse_assignments(args.approx) if args.approx is not None else None
    res = integrate(w, dom, params)
    out = {"exact": None if res.exact is None else render_scalar(res.exact), "approx": _complex(res.approx)}
    if res.mode != "exact":
        out["mode"] = res.mode
    return out


def cmd_stokes(args):
    chart = load_chart(args.chart)
    eta = build_form(args.form, chart)
    rep = stokes_check(eta, _domain(args, chart))
    return {"lhs": render_scalar(rep.lhs), "rhs": render_scalar(rep.rhs), "equal": rep.equal,
            "faces": [[name, render_scalar(v)] for name, v in rep.faces]}


def cmd_classify(args):
    if args.quadrant:
        return _classify_quadrant(args)
    if not (args.chart and args.form):
        raise ParseError("classify needs --chart and --form, or --quadrant")
    chart = load_chart(args.chart)
    w = build_form(args.form, chart)
    res = convergence_classify(w, None)
    return {"status": res.status, "certificate": [[f, render_logform(v)] for f, v in res.certificate]}


def _classify_quadrant(args):
    """Corner of ``[0,inf)^2``: face scales ``t1 -> f2(r2) r2^a2`` and ``t2 -> f1(r1) r1^a1``."""
    a1, a2 = (int(v) for v in args.quadrant.split(","))
    chart = Chart((), ("r1", "r2"), (), ())
    f1 = build_monoid(args.f1 or "1", Chart((), ("r1",), (), ()))
    f2 = build_monoid(args.f2 or "1", Chart((), ("r2",), (), ()))
    if not (f1.is_unit() and f2.is_unit()):
        raise ExpressionTypeError("f1 and f2 must be positive units (no coordinate powers)", ("quadrant",))
    faces = {
        "r1": {"t1": f2 * MonoidElement.coordinate("r2", power=a2)},
        "r2": {"t2": f1 * MonoidElement.coordinate("r1", power=a1)},
    }
    reg = Regularization(chart, {}, faces, {frozenset(("r1", "r2")): {"t1": None, "t2": None}})
    report = check_regularization(reg)
    out = report.as_dict()
    out["regime"] = {"solved": "solved", "unsolvable": "unsolvable",
                     "underdetermined": "one-parameter family"}.get(report.status, report.status)
    return out


def cmd_homotopy(args):
    chart = load_chart(args.chart)
    w = build_form(args.form, chart)
    coord = args.coord
    if args.kind == "phantom":
        h = homotopy_phantom
        defect = unit_projection(w, coord)
    elif args.kind == "interval":
        h = homotopy_interval
        defect = LogForm.zero(chart)
    else:
        h = homotopy_combined
        defect = combined_projection(w, coord)
    hw = h(w, coord)
    lhs = hw.d() + h(w.d(), coord)
    return {"result": render_logform(hw), "identity": lhs == w - defect,
            "projection": render_logform(as_form(defect))}


def cmd_quadrature(args):
    chart = load_chart(args.chart)
    w = build_form(args.form, chart)
    params = parse_assignments(args.params)
    if args.fit:
        fit = divergence_fit(w, params=params)
        return {"coefficients": [_complex(c) for c in fit.coefficients], "residual": fit.residual}
    spec = QuadratureSpec(tolerance=args.tol) if args.tol else QuadratureSpec()
    if args.scale:
        w = apply_scale(parse_scale(args.scale, chart), w)
    res = quadrature(w, spec, params)
    return {"approx": _complex(res.value), "error": res.error, "converged": res.converged}


def cmd_period(args):
    from ..periods import (
        DoubleCopyConfigP1,
        KummerConfig,
        double_copy_p1,
        i2_closed_form,
        i2_quadrature,
        i2_via_stokes,
        kummer_period_matrix,
        residue_radius_zero,
    )
    from ..periods.examples import CIRCLE

    profile = build_monoid(args.profile, CIRCLE) if getattr(args, "profile", None) else None
    if args.kind == "residue":
        value = residue_radius_zero(profile)
        return {"exact": render_scalar(value), "approx": _approx(value, args)}
    a = _period_param(args.a)
    if args.kind == "kummer":
        m = kummer_period_matrix(KummerConfig(a, _period_param(args.lam), profile))
        return {"matrix": [[render_scalar(v) for v in row] for row in m]}
    if args.kind == "i2":
        value, parts = i2_via_stokes(a, args.order, detail=True)
        out = {"exact": render_scalar(value), "closed_form": render_scalar(i2_closed_form(a)),
               "boundary": {k: render_scalar(v) for k, v in parts.items()}, "approx": _approx(value, args)}
        if args.oracle:
            params = parse_assignments(args.approx)
            num = a if not isinstance(a, str) else params.get(a)
            if num is None:
                raise ParseError("--oracle needs a numeric a or --approx with its value")
            out["oracle"] = _complex(i2_quadrature(float(num)))
        return out
    value, terms = double_copy_p1(DoubleCopyConfigP1(a=a, A=(1, a), omega={a: 1, 1: -1}), detail=True)
    return {"exact": render_scalar(value),
            "terms": [[render_scalar(p), render_scalar(q), s] for p, q, s in terms],
            "approx": _approx(value, args)}


def _period_param(text: str):
    """A parameter name stays symbolic; a numeric literal becomes a Fraction."""
    from fractions import Fraction

    text = text.strip()
    if text.isidentifier():
        return text
    try:
        return Fraction(text)
    except ValueError:
        raise ParseError(f"expected a parameter name or a positive rational, got {text!r}") from None


# ------------------------------------------------------------------ parser
def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="logcorners", description="Exact regularized calculus on log corners.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reglim", help="regularized limit at a tangential basepoint")
    s.add_argument("--chart")
    s.add_argument("--expr", required=True)
    s.add_argument("--at", required=True, help="e.g. '1*d/dr@0'")
    s.add_argument("--scale")
    s.add_argument("--approx")
    s.set_defaults(func=cmd_reglim)

    s = sub.add_parser("restrict", help="regularized restriction to a boundary face")
    s.add_argument("--chart", required=True)
    s.add_argument("--expr", "--form", dest="expr", required=True)
    s.add_argument("--face", required=True)
    s.add_argument("--scale")
    s.set_defaults(func=cmd_restrict)

    s = sub.add_parser("scale", help="apply a scale to the phantom coordinates")
    s.add_argument("--chart", required=True)
    s.add_argument("--expr", "--form", dest="expr", required=True)
    s.add_argument("--scale", required=True, help="e.g. 'exp(r)*r d/dt'")
    s.set_defaults(func=cmd_scale)

    s = sub.add_parser("pullback", help="pull back along a weak morphism")
    s.add_argument("--source", required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--map", required=True, help="e.g. 'r=u^2, th=ph'")
    s.add_argument("--expr", "--form", dest="expr", required=True)
    s.set_defaults(func=cmd_pullback)

    for name, func, help_text in (("integrate", cmd_integrate, "regularized integral"),
                                  ("stokes-check", cmd_stokes, "compare int d(eta) with the boundary term")):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("--chart", required=True)
        s.add_argument("--form", required=True)
        s.add_argument("--scale0", help="basepoint constant at 0: 'lam' or 'r=lam,s=mu'")
        s.add_argument("--chart-scale", dest="chart_scale")
        s.add_argument("--order", help="orientation order of coordinates")
        s.add_argument("--sign", type=int, default=1, choices=(1, -1))
        s.add_argument("--approx", help="parameter values, e.g. 'a=2,lam=1'")
        s.set_defaults(func=func)

    s = sub.add_parser("classify", help="convergence of a form, or the quadrant regularization solver")
    s.add_argument("--chart")
    s.add_argument("--form")
    s.add_argument("--quadrant", help="exponents 'a1,a2' of the face scales")
    s.add_argument("--f1")
    s.add_argument("--f2")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("homotopy", help="contracting homotopies and their identities")
    s.add_argument("--chart", required=True)
    s.add_argument("--form", required=True)
    s.add_argument("--kind", choices=("phantom", "interval", "combined"), required=True)
    s.add_argument("--coord", required=True)
    s.set_defaults(func=cmd_homotopy)

    s = sub.add_parser("quadrature", help="floating-point oracle")
    s.add_argument("--chart", required=True)
    s.add_argument("--form", required=True)
    s.add_argument("--params")
    s.add_argument("--scale")
    s.add_argument("--tol", type=float)
    s.add_argument("--fit", action="store_true", help="fit the cutoff integrals in log(eps)")
    s.set_defaults(func=cmd_quadrature)

    s = sub.add_parser("period", help="worked periods")
    s.add_argument("kind", choices=("residue", "kummer", "i2", "double-copy"))
    s.add_argument("--a", default="a")
    s.add_argument("--lam", default="lam")
    s.add_argument("--profile", help="normal scale on the circle, e.g. 'exp((exp(i*th)+exp(-i*th))/2)'")
    s.add_argument("--order", type=int, default=2)
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--approx")
    s.set_defaults(func=cmd_period)
    return p


def run(argv=None) -> tuple[int, dict]:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
        code = EXIT_OK
    except (ParseError, json.JSONDecodeError) as exc:
        payload, code = {"error": {"kind": "parse", "message": str(exc)}}, EXIT_PARSE
    except (ExpressionTypeError, ChartMismatch, UnknownCoordinate) as exc:
        payload, code = {"error": {"kind": "type", "message": str(exc)}}, EXIT_PARSE
    except (MathDomainError, ZeroDivisionError) as exc:
        payload, code = {"error": {"kind": "domain", "message": str(exc)}}, EXIT_DOMAIN
    except (LogCornersError, ValueError) as exc:
        payload, code = {"error": {"kind": "input", "message": str(exc)}}, EXIT_PARSE
    return code, {"format": RESULT_FORMAT, "command": args.command if args.command != "period"
                  else f"period {args.kind}", **payload}


def main(argv=None) -> int:
    code, doc = run(argv)
    print(json.dumps(doc, ensure_ascii=False))
    return code


if __name__ == "__main__":
    sys.exit(main())
