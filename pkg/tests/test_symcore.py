import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logcorners.errors import MissingAssignment
from logcorners.geometry import Chart
from logcorners.symcore import Coefficient, GaussianRational, ParamFraction, Scalar, prime_logs
from strategies import coefficients, scalars

CH = Chart(free=("x",), basic=("r", "s"), angular=("th",))
PARAMS = {"a": 1.7}


# ------------------------------------------------------------------ basics
def test_gaussian_reduced_form():
    g = GaussianRational(2, 4, -6)
    assert (g.a, g.b, g.d) == (-1, -2, 3)
    assert GaussianRational(1, 1) * GaussianRational(1, -1) == GaussianRational(2)
    assert GaussianRational(0, 1) ** 2 == GaussianRational(-1)


def test_param_fraction_cancels_common_factor():
    a = ParamFraction.param("a")
    f = (a * a - 1) / (a - 1)
    assert f == a + 1
    assert f.den is None


def test_prime_logs():
    assert prime_logs(Fraction(12, 5)) == {"2": 2, "3": 1, "5": -1}
    assert Scalar.log_rational(Fraction(1, 4)) == Scalar.log("2") * -2


def test_transcendentals_are_independent():
    assert Scalar.pi() != Scalar.const(Fraction(355, 113))
    assert Scalar.log("2") * 2 != Scalar.log("3")
    assert (Scalar.pi() * Scalar.i()) ** 2 == -(Scalar.pi() ** 2)


def test_division_by_transcendental_rejected():
    with pytest.raises(ZeroDivisionError):
        Scalar.one() / Scalar.pi()


def test_specialize_parameter_to_one_kills_its_log():
    s = Scalar.log("a") * Scalar.param("a") + 3
    assert s.specialize("a", 1) == Scalar.const(3)
    assert Scalar.log("a").specialize("a", 8) == Scalar.log("2") * 3


def test_evaluate_requires_assignment():
    with pytest.raises(MissingAssignment):
        Scalar.log("lam").evaluate()
    assert Scalar.log("lam").evaluate({"lam": math.e}) == pytest.approx(1)


def test_coefficient_diff_examples():
    r = Coefficient.var("r")
    assert (r ** 2).diff("r") == r * 2
    q = Coefficient.var("r", 2)
    assert Coefficient.exp(q).diff("r") == Coefficient.exp(q) * r * 2
    e = Coefficient.fourier("th")
    assert e.diff("th") == e * Scalar.i()


def test_negative_powers_rejected():
    with pytest.raises(ValueError):
        Coefficient.var("r", -1)


# ------------------------------------------------------------- ring axioms
S = scalars(fractions=True)


@given(S, S, S)
def test_scalar_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a * Scalar.one() == a and a + Scalar() == a
    assert (a - a).is_zero()


C = coefficients(CH)


@given(C, C, C)
def test_coefficient_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a * Coefficient.one() == a
    assert (a - a).is_zero()


def _point(rng):
    return {"x": rng.uniform(-1, 1), "r": rng.uniform(0.1, 2), "s": rng.uniform(0.1, 2),
            "th": rng.uniform(0, 2 * math.pi)}


@given(C, C, st.integers(0, 10 ** 6))
def test_evaluation_is_a_ring_homomorphism(a, b, seed):
    p = _point(random.Random(seed))
    va, vb = a.evaluate(p, PARAMS), b.evaluate(p, PARAMS)
    tol = 1e-9 * (1 + abs(va) * abs(vb) + abs(va) + abs(vb))
    assert abs((a * b).evaluate(p, PARAMS) - va * vb) <= tol
    assert abs((a + b).evaluate(p, PARAMS) - (va + vb)) <= tol


@given(C)
def test_partial_derivatives_commute(c):
    for u, v in (("r", "s"), ("x", "th"), ("r", "th")):
        assert c.diff(u).diff(v) == c.diff(v).diff(u)


@given(C, C)
def test_leibniz_rule(a, b):
    assert (a * b).diff("r") == a.diff("r") * b + a * b.diff("r")


@given(C, st.integers(0, 10 ** 6))
def test_zero_test_matches_numeric_evaluation(c, seed):
    """Canonical zero iff it vanishes at 20 random interior points."""
    rng = random.Random(seed)
    vanishes = all(abs(c.evaluate(_point(rng), PARAMS)) < 1e-9 for _ in range(20))
    assert vanishes == c.is_zero()
    d = c - c
    assert d.is_zero()


@given(C, st.integers(0, 10 ** 6))
def test_numeric_derivative(c, seed):
    p = _point(random.Random(seed))
    h = 1e-5
    hi, lo = dict(p), dict(p)
    hi["r"] += h
    lo["r"] -= h
    fd = (c.evaluate(hi, PARAMS) - c.evaluate(lo, PARAMS)) / (2 * h)
    exact = c.diff("r").evaluate(p, PARAMS)
    assert abs(fd - exact) <= 1e-4 * (1 + abs(exact))


@given(C)
def test_conjugation_is_an_involution(c):
    assert c.conjugate().conjugate() == c
    assert (c * c.conjugate()).is_real()


def test_euler_identity_in_fourier_modes():
    e = Coefficient.fourier("th")
    p = {"th": 0.3}
    assert cmath.isclose(e.evaluate(p), cmath.exp(0.3j))
    assert e * Coefficient.fourier("th", -1) == Coefficient.one()
