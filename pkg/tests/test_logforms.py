import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logcorners.errors import ChartMismatch, UnknownCoordinate
from logcorners.geometry import Chart, MonoidElement, Scale, WeakMorphism, compose, face, tangential_basepoint
from logcorners.logforms import LogForm, LogFunction, log_of, pullback
from logcorners.symcore import Coefficient, Scalar
from strategies import log_forms, log_functions, morphisms

A = Chart(basic=("u", "v"), phantom=("p",), angular=("ph",))
B = Chart(free=("x",), basic=("r", "s"), phantom=("t",), angular=("th",))
C = Chart(basic=("w",), phantom=("q",), angular=("psi",))
I = Chart(basic=("r",))


# ---------------------------------------------------------------- examples
def test_dr_is_r_dlog_r():
    assert LogFunction.var(I, "r").d() == LogForm.dr(I, "r")
    assert LogForm.dr(I, "r") == LogForm.basis(I, "r") * LogFunction.var(I, "r")


def test_d_of_log():
    assert LogFunction.log(I, "r").d() == LogForm.basis(I, "r")
    assert (LogFunction.log(I, "r", 2)).d() == LogForm.basis(I, "r") * LogFunction.log(I, "r") * 2


def test_wedge_is_graded_commutative():
    a, b = LogForm.basis(B, "r"), LogForm.basis(B, "th")
    assert a.wedge(b) == -b.wedge(a)
    assert a.wedge(a).is_zero()


def test_log_of_monoid_element():
    ch = Chart(basic=("r",), phantom=("t",))
    m = MonoidElement(coeff=2, sigma=(("a", 1),), exp_arg=Coefficient.var("r"), r_exp=(("r", 3),), t_exp=(("t", 1),))
    expect = (LogFunction.const(ch, Scalar.log("2") + Scalar.log("a")) + LogFunction.var(ch, "r")
              + LogFunction.log(ch, "r") * 3 + LogFunction.log(ch, "t"))
    assert log_of(m, ch) == expect


def test_relation_for_flat_free_instances():
    # r * log(e^r) canonicalizes to r^2
    f = LogFunction.var(I, "r") * log_of(MonoidElement.unit(Coefficient.var("r")), I)
    assert f == LogFunction.var(I, "r", 2)


def test_face_inclusion_sends_log_r_to_log_t():
    fchart, inc = face(I, ("r",))
    (t,) = fchart.phantom
    assert pullback(inc, LogFunction.log(I, "r")) == LogFunction.log(fchart, t)


def test_basepoint_pullback():
    f = LogFunction.log(I, "r", 2) * Coefficient.exp(Coefficient.var("r")) + LogFunction.var(I, "r")
    bp = tangential_basepoint(I, r={"r": "lam"})
    assert pullback(bp, f).as_scalar() == Scalar.log("lam") ** 2


def test_scale_sends_log_t_to_log_r():
    ch = Chart(basic=("r",), phantom=("t",))
    q = Scale(ch, {"t": MonoidElement.coordinate("r")}).morphism()
    assert pullback(q, LogFunction.log(ch, "t")) == LogFunction.log(ch.basic_part(), "r")


def test_unknown_coordinates_rejected():
    with pytest.raises(UnknownCoordinate):
        LogFunction.log(B, "th")
    with pytest.raises(ChartMismatch):
        LogFunction.one(I) + LogFunction.one(B)


# -------------------------------------------------------------- properties
@given(log_forms(B))
def test_d_squared_is_zero(w):
    assert w.d().d().is_zero()


@given(log_forms(A), log_forms(A))
def test_leibniz_rule_for_wedge(a, b):
    for k in a.degrees() or {0}:
        ak = a.homogeneous_part(k)
        assert ak.wedge(b).d() == ak.d().wedge(b) + ak.wedge(b.d()) * (-1) ** k


@given(morphisms(A, B, allow_exp=False, nonconstant=True), log_forms(B))
def test_pullback_commutes_with_d(phi, w):
    assert pullback(phi, w.d()) == pullback(phi, w).d()


@given(morphisms(A, B), log_forms(B, exps=False))
def test_pullback_commutes_with_d_exp_units(phi, w):
    assert pullback(phi, w.d()) == pullback(phi, w).d()


@given(morphisms(C, A, allow_exp=False, nonconstant=True), morphisms(A, B, allow_exp=False, nonconstant=True),
       log_forms(B))
def test_pullback_respects_composition(f, g, w):
    assert pullback(compose(g, f), w) == pullback(f, pullback(g, w))


@given(morphisms(C, A), morphisms(A, B, allow_exp=False), log_forms(B, exps=False))
def test_pullback_respects_composition_exp_units(f, g, w):
    assert pullback(compose(g, f), w) == pullback(f, pullback(g, w))


@given(morphisms(A, B), log_forms(B, exps=False), log_forms(B, exps=False))
def test_pullback_is_multiplicative(phi, a, b):
    assert pullback(phi, a.wedge(b)) == pullback(phi, a).wedge(pullback(phi, b))


NOPH_A = Chart(free=("y",), basic=("u",), angular=("ph",))
NOPH_B = Chart(free=("x",), basic=("r", "s"), angular=("th",))


@given(morphisms(NOPH_A, NOPH_B, allow_exp=False, nonconstant=True), log_functions(NOPH_B),
       st.integers(0, 10 ** 6))
def test_pullback_agrees_with_numeric_substitution(phi, f, seed):
    rng = random.Random(seed)
    params = {"a": 1.3}
    point = {"y": rng.uniform(-1, 1), "u": rng.uniform(0.2, 1.5), "ph": rng.uniform(0, 6.28)}
    image = {}
    for name, m in phi.r_map:
        image[name] = m.alpha().evaluate(point, params).real
    for name, c in phi.x_map:
        image[name] = c.evaluate(point, params).real
    for name, a in phi.theta_map:
        image[name] = a.sign * (point[a.source] if a.source else 0) + float(a.offset) * math.pi
    lhs = pullback(phi, f).evaluate(point, params)
    rhs = f.evaluate(image, params)
    assert abs(lhs - rhs) <= 1e-9 * (1 + abs(rhs))
