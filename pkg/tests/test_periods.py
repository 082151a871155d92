import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logcorners.errors import MathDomainError
from logcorners.geometry import MonoidElement
from logcorners.periods import (
    INF, Circle, DoubleCopyConfigP1, Expander, KummerConfig, Segment, double_copy_p1,
    fourier_profile, i2_closed_form, i2_quadrature, i2_via_stokes, kummer_period_matrix, residue_radius_zero,
)
from logcorners.symcore import Scalar

TWO_PI_I = Scalar.two_pi_i()


@st.composite
def profiles(draw):
    """Real positive profiles c * exp(b e^{i th} + conj(b) e^{-i th} + ...)."""
    coeffs = {}
    for n in (1, 2):
        re, im = draw(st.integers(-2, 2)), draw(st.integers(-2, 2))
        if re or im:
            coeffs[n] = complex(re, im) / 2
            coeffs[-n] = complex(re, -im) / 2
    return fourier_profile(coeffs, draw(st.sampled_from([1, 2, Fraction(1, 3), "c"])))


# ------------------------------------------------------------- polar series
@pytest.mark.parametrize("point", ["a", 2, INF])
def test_expander_inverse(point):
    ex = Expander(point, 3)
    assert (ex.z() * ex.inv(0)).terms == {(0, 0, 0): Scalar.one()}


def test_log_abs_sq_constant_term():
    ex = Expander(2, 2)
    series = ex.log_abs_sq(0)
    assert series.terms[(0, 0, 0)] == Scalar.log("2") * 2


# ------------------------------------------------------------------ residue
def test_residue_default_profile():
    assert residue_radius_zero() == TWO_PI_I


@settings(max_examples=200)
@given(profiles())
def test_residue_independent_of_profile(profile):
    assert residue_radius_zero(profile) == TWO_PI_I


def test_profile_must_be_positive_unit():
    with pytest.raises(MathDomainError):
        residue_radius_zero(MonoidElement.coordinate("r"))  # vanishes on the circle
    with pytest.raises(MathDomainError):
        fourier_profile({1: 1j})  # not real


# ------------------------------------------------------------------- Kummer
def test_kummer_matrix_symbolic():
    m = kummer_period_matrix(KummerConfig("a", "lam"))
    assert m == [[Scalar.param("a"), Scalar.log("a") - Scalar.log("lam")], [Scalar(), TWO_PI_I]]


def test_kummer_unit_basepoint_gives_log_a():
    assert kummer_period_matrix(KummerConfig("a", 1))[0][1] == Scalar.log("a")


@given(st.sampled_from(["lam", "mu", 1, 3, Fraction(2, 5)]), profiles())
def test_kummer_second_row_independent_of_basepoint(lam, profile):
    m = kummer_period_matrix(KummerConfig("a", lam, profile))
    assert m[1] == [Scalar(), TWO_PI_I]


# ----------------------------------------------------------------------- I2
@pytest.mark.parametrize("order", [1, 2, 3, 4])
def test_i2_independent_of_order(order):
    assert i2_via_stokes("a", order) == Scalar.log("a") * TWO_PI_I * 2


@settings(max_examples=30)
@given(profiles(), profiles(), profiles(), profiles())
def test_i2_independent_of_profiles(p0, p1, pa, pinf):
    value = i2_via_stokes("a", 2, {"0": p0, "1": p1, "a": pa, "inf": pinf})
    assert value == i2_closed_form("a")


def test_i2_boundary_contributions():
    _, parts = i2_via_stokes("a", detail=True)
    assert parts["0"].is_zero() and parts["1"].is_zero() and parts["inf"].is_zero()


@pytest.mark.parametrize("a", ["a", "b", 3, Fraction(5, 2), Fraction(1, 2)])
def test_double_copy_equals_stokes(a):
    cfg = DoubleCopyConfigP1(a=a, omega={a: 1, 1: -1}, A=(1, a))
    assert double_copy_p1(cfg) == i2_via_stokes(a)


def test_double_copy_zero_forms():
    assert double_copy_p1(DoubleCopyConfigP1(omega={})).is_zero()
    assert double_copy_p1(DoubleCopyConfigP1(nu={})).is_zero()


def test_double_copy_rejects_bad_data():
    with pytest.raises(MathDomainError):
        double_copy_p1(DoubleCopyConfigP1(omega={"a": 1}))  # residues do not sum to zero
    with pytest.raises(MathDomainError):
        double_copy_p1(DoubleCopyConfigP1(A=(0, "a"), B=(0, INF)))
    bad = [(Segment(0, "inf"), Circle(0), 1)]  # passes through the pole at 1
    with pytest.raises(MathDomainError):
        double_copy_p1(DoubleCopyConfigP1(a=3, omega={3: 1, 1: -1}, A=(1, 3), pairs=bad))


def test_i2_oracle_at_two():
    exact = i2_closed_form(2).evaluate()
    assert abs(i2_quadrature(2.0) - exact) < 1e-6
    assert abs(exact - 4j * math.pi * math.log(2)) < 1e-12
