from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logcorners.errors import ChartMismatch, InvalidFace, NotRepresentable
from logcorners.geometry import (
    POINT, Chart, MonoidElement, Regularization, Scale, WeakMorphism, check_regularization, compose, face,
    is_tangential_basepoint, tangential_basepoint,
)
from logcorners.symcore import Coefficient
from strategies import morphisms, units

A = Chart(basic=("u", "v"), phantom=("p",), angular=("ph",))
B = Chart(free=("x",), basic=("r", "s"), phantom=("t",), angular=("th",))
C = Chart(basic=("w",), phantom=("q",), angular=("psi",))


def test_chart_validation():
    with pytest.raises(ValueError):
        Chart(basic=("r",), angular=("r",))
    assert B.dimension == (1, 2, 1, 1)
    assert B.real_dimension == 4


def test_face_chart_dimensions():
    fchart, inc = face(B, ("r",))
    assert fchart.dimension == (1, 1, 2, 1)
    assert inc.source == fchart and inc.target == B
    with pytest.raises(InvalidFace):
        face(Chart(angular=("th",)), ())


def test_face_swap_gives_same_corner_up_to_phantom_order():
    c1, i1 = face(B, ("r", "s"))
    c2, i2 = face(B, ("s", "r"))
    assert set(c1.phantom) == set(c2.phantom) and c1.basic == c2.basic
    swap = WeakMorphism.build(c1, c2)
    assert compose(i2, swap) == i1


def test_monoid_constants_must_be_positive():
    with pytest.raises(NotRepresentable):
        MonoidElement.constant(-2)
    assert MonoidElement.constant("a").log_constant().log_symbols() == {"a"}


def test_scale_nondegeneracy():
    ch = Chart(basic=("r",), phantom=("t",))
    assert Scale(ch, {"t": MonoidElement.unit(Coefficient.var("r"))}).is_nondegenerate()
    assert not Scale(ch, {"t": MonoidElement.coordinate("r")}).is_nondegenerate()
    with pytest.raises(ChartMismatch):
        Scale(ch, {})


def test_tangential_basepoint():
    bp = tangential_basepoint(Chart(basic=("r",)), r={"r": "lam"})
    assert is_tangential_basepoint(bp)
    assert bp.source == POINT and bp.boundary == {"r"}


@given(morphisms(A, B, allow_exp=False), morphisms(B, C, allow_exp=False), morphisms(C, A))
def test_composition_is_associative(f, g, h):
    # h: C -> A, f: A -> B, g: B -> C; exp units only in the innermost map
    assert compose(compose(g, f), h) == compose(g, compose(f, h))


@given(morphisms(A, B))
def test_identities_are_neutral(f):
    assert compose(f, WeakMorphism.identity(A)) == f
    assert compose(WeakMorphism.identity(B), f) == f


@given(units(("r", "s")), units(("r", "s")), st.integers(0, 2), st.integers(0, 2))
def test_alpha_is_a_monoid_homomorphism(f, g, j, k):
    f = f * MonoidElement.coordinate("r", power=j)
    g = g * MonoidElement.coordinate("s", power=k)
    assert (f * g).alpha() == f.alpha() * g.alpha()


@given(morphisms(A, B, allow_exp=False, nonconstant=True), units(("x", "r", "s")), st.integers(0, 2), st.integers(0, 2))
def test_alpha_commutes_with_pullback(phi, unit, j, k):
    m = unit * MonoidElement.coordinate("r", power=j) * MonoidElement.coordinate("s", power=k)
    assert phi.pull_monoid(m).alpha() == phi.pull_coefficient(m.alpha())


@given(morphisms(A, B, phantom_to_basic=False), morphisms(B, C, allow_exp=False, phantom_to_basic=False))
def test_ordinary_closed_under_composition(f, g):
    assert f.is_ordinary() and g.is_ordinary()
    assert compose(g, f).is_ordinary()


def test_scale_morphism_is_not_ordinary():
    ch = Chart(basic=("r",), phantom=("t",))
    assert not Scale(ch, {"t": MonoidElement.coordinate("r")}).morphism().is_ordinary()


# --------------------------------------------------------- regularizations
Q = Chart(basic=("r1", "r2"))


def quadrant(a1, a2, f1, f2):
    faces = {
        "r1": {"t1": MonoidElement(coeff=f2) * MonoidElement.coordinate("r2", power=a2)},
        "r2": {"t2": MonoidElement(coeff=f1) * MonoidElement.coordinate("r1", power=a1)},
    }
    return Regularization(Q, {}, faces, {frozenset(("r1", "r2")): {"t1": None, "t2": None}})


def test_quadrant_trivial_exponents_solved():
    rep = check_regularization(quadrant(0, 0, Fraction(3), Fraction(5)))
    assert rep.status == "solved"
    sol = {str(k): str(v) for k, v in rep.solution.items()}
    assert sol == {"log(lam_t1)": "log(5)", "log(lam_t2)": "log(3)"}


def test_quadrant_unsolvable():
    assert check_regularization(quadrant(1, 1, Fraction(2), Fraction(3))).status == "unsolvable"


def test_quadrant_one_parameter_family():
    rep = check_regularization(quadrant(1, 1, Fraction(2), Fraction(1, 2)))
    assert rep.status == "underdetermined"
    assert len(rep.free_parameters) == 1


def test_product_regularization_is_consistent():
    reg = Regularization.product(Q, {"r1": "lam", "r2": "mu"})
    assert check_regularization(reg).status == "ok"


def test_exp_unit_in_face_scale_evaluated_at_corner():
    # f2(r2) = 2 exp(r2): only f2(0) = 2 matters at the corner
    faces = {
        "r1": {"t1": MonoidElement(coeff=2, exp_arg=Coefficient.var("r2"), r_exp=(("r2", 1),))},
        "r2": {"t2": MonoidElement(coeff=Fraction(1, 2), r_exp=(("r1", 1),))},
    }
    reg = Regularization(Q, {}, faces, {frozenset(("r1", "r2")): {"t1": None, "t2": None}})
    assert check_regularization(reg).status == "underdetermined"
