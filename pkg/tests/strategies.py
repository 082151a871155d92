"""Hypothesis strategies for random exact objects."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from logcorners.geometry import AngleMap, Chart, MonoidElement, WeakMorphism
from logcorners.logforms import LogForm, LogFunction
from logcorners.symcore import Coefficient, Scalar

rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
positive_rationals = st.builds(Fraction, st.integers(1, 5), st.integers(1, 3))


@st.composite
def scalars(draw, params=("a",), transcendental=True, fractions=False, real=False):
    """Small sums of rational multiples of 1, i, pi, log(a), log(2), a."""
    atoms = [Scalar.one()] if real else [Scalar.one(), Scalar.i()]
    if transcendental:
        atoms += [Scalar.pi(), Scalar.log("2")] + [Scalar.log(p) for p in params]
    atoms += [Scalar.param(p) for p in params]
    if fractions and params:
        atoms.append(Scalar.one() / (Scalar.param(params[0]) + 1))
    out = Scalar()
    for _ in range(draw(st.integers(0, 3))):
        out = out + draw(st.sampled_from(atoms)) * draw(rationals)
    return out


def _exp_args(names):
    """Real exp arguments without constant term."""
    opts = [Coefficient()]
    for n in names:
        opts += [Coefficient.var(n), -Coefficient.var(n), Coefficient.var(n, 2) * Fraction(1, 2)]
    return st.sampled_from(opts)


@st.composite
def coefficients(draw, chart: Chart, exps=True, fourier=True, max_terms=3, max_power=2,
                 scalar_strategy=None, exp_names=None):
    polys = chart.free + chart.basic
    exp_names = polys if exp_names is None else tuple(exp_names)
    if scalar_strategy is None:
        scalar_strategy = scalars(transcendental=False)
    out = Coefficient()
    for _ in range(draw(st.integers(0, max_terms))):
        term = Coefficient.const(draw(scalar_strategy))
        for n in polys:
            term = term * Coefficient.var(n, draw(st.integers(0, max_power)))
        if fourier:
            for th in chart.angular:
                k = draw(st.integers(-2, 2))
                if k:
                    term = term * Coefficient.fourier(th, k)
        if exps and exp_names:
            q = draw(_exp_args(exp_names))
            if not q.is_zero():
                term = term * Coefficient.exp(q)
        out = out + term
    return out


@st.composite
def log_functions(draw, chart: Chart, max_log=2, **kw):
    logs = chart.basic + chart.phantom
    out = LogFunction.zero(chart)
    for _ in range(draw(st.integers(0, 3))):
        key = tuple((n, k) for n in logs if (k := draw(st.integers(0, max_log))))
        c = draw(coefficients(chart, **kw))
        out = out + LogFunction(chart, {key: c})
    return out


@st.composite
def log_forms(draw, chart: Chart, degree=None, **kw):
    names = chart.coordinates()
    out = LogForm.zero(chart)
    for _ in range(draw(st.integers(0, 3))):
        if degree is None:
            basis = [n for n in names if draw(st.booleans())]
        else:
            basis = draw(st.permutations(names))[:degree]
        f = draw(log_functions(chart, **kw))
        out = out + LogForm.basis(chart, *basis) * f if basis else out + LogForm.from_function(f)
    return out


@st.composite
def units(draw, names, allow_exp=True):
    """Positive unit ``c * exp(q)`` in the given coordinates."""
    q = draw(_exp_args(names)) if allow_exp else Coefficient()
    return MonoidElement(coeff=draw(positive_rationals), exp_arg=q)


@st.composite
def morphisms(draw, source: Chart, target: Chart, allow_exp=True, phantom_to_basic=True, nonconstant=False):
    """Random weak morphism; every target basic coordinate hits a nonzero monomial.

    With ``nonconstant`` basic images have positive degree and free images
    no constant term, so exp arguments of the target pull back to exp
    arguments of the source.
    """
    polys = source.free + source.basic
    r = {}
    for name in target.basic:
        m = draw(units(polys, allow_exp))
        powers = [draw(st.integers(0, 2)) for _ in source.basic]
        if nonconstant and source.basic and not any(powers):
            powers[draw(st.integers(0, len(powers) - 1))] = 1
        for n, e in zip(source.basic, powers):
            m = m * MonoidElement.coordinate(n, power=e)
        r[name] = m
    t = {}
    for name in target.phantom:
        m = draw(units(polys, allow_exp))
        if source.phantom and (not phantom_to_basic or draw(st.booleans())):
            m = m * MonoidElement.coordinate(draw(st.sampled_from(source.phantom)), phantom=True,
                                             power=draw(st.integers(1, 2)))
        else:
            for n in source.basic:
                m = m * MonoidElement.coordinate(n, power=draw(st.integers(0, 1)))
        t[name] = m
    x = {}
    for name in target.free:
        c = draw(coefficients(source, exps=False, fourier=False, max_terms=2,
                              scalar_strategy=scalars(transcendental=False, real=True)))
        if nonconstant:
            c = c - Coefficient.const(c.constant_term())
        x[name] = c
    theta = {}
    for name in target.angular:
        src = draw(st.sampled_from(source.angular + (None,)))
        theta[name] = AngleMap(draw(st.sampled_from((1, -1))), src, Fraction(draw(st.integers(-3, 3)), 2))
    return WeakMorphism.build(source, target, r=r, t=t, x=x, theta=theta)


