"""Regularized restriction, scale application, regularized limits and the
contracting homotopies of the log de Rham complex."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..errors import LeftoverPhantoms, MathDomainError, NotInKernel, NotRepresentable, UnknownCoordinate
from ..geometry.chart import Chart
from ..geometry.monoid import MonoidElement
from ..geometry.morphism import WeakMorphism, is_tangential_basepoint
from ..geometry.scale import Scale
from ..logforms.logform import LogForm, as_form, sort_basis
from ..logforms.logfunction import LogFunction, log_of
from ..logforms.pullback import pullback
from ..symcore import Coefficient, Scalar
from ..symcore.fraction import mono_mul


def _same_kind(obj, form: LogForm):
    return form.as_function() if isinstance(obj, LogFunction) else form


def reg_restrict(obj, selected):
    """Restrict to the face where the ``selected`` basic coordinates vanish.

    Coefficients are evaluated at ``r = 0``; ``log r`` and ``dlog r`` become
    the logarithm and dlog of the new phantom coordinate.
    """
    if isinstance(selected, str):
        selected = (selected,)
    chart = obj.chart
    fchart, renames = chart.face_chart(tuple(selected))
    zero = {name: Coefficient() for name in renames}
    form = as_form(obj)
    out: dict = {}
    for (basis, key), c in form.terms.items():
        c0 = c.substitute(zero)
        if c0.is_zero():
            continue
        sign, nb = sort_basis(fchart, [renames.get(n, n) for n in basis])
        nk = tuple(sorted((renames.get(n, n), e) for n, e in key))
        if sign < 0:
            c0 = -c0
        k = (nb, nk)
        s = out.get(k)
        out[k] = c0 if s is None else s + c0
    return _same_kind(obj, LogForm(fchart, out))


def apply_scale(scale: Scale, obj):
    """Replace ``log t`` by ``log s(t)`` and ``dlog t`` by ``d log s(t)``."""
    chart = obj.chart
    scale.chart.require_same(chart)
    target = chart.basic_part()
    ph = set(chart.phantom)
    logs = {t: log_of(scale.value(t), target) for t in chart.phantom}
    dlogs = {t: logs[t].d() for t in chart.phantom}
    form = as_form(obj)
    out = LogForm.zero(target)
    for (basis, key), c in form.terms.items():
        f = LogFunction(target, {tuple((n, e) for n, e in key if n not in ph): c}, _check=False)
        for n, e in key:
            if n in ph:
                f = f * logs[n] ** e
        piece = LogForm.from_function(f)
        for n in basis:
            piece = piece.wedge(dlogs[n] if n in ph else LogForm.basis(target, n))
        out = out + piece
    return _same_kind(obj, out)


def reglim(f: LogFunction, at: WeakMorphism) -> Scalar:
    """Regularized limit of ``f`` at a tangential basepoint."""
    if not is_tangential_basepoint(at):
        raise MathDomainError("reglim needs a tangential basepoint (a weak morphism from the point)")
    if f.has_phantom_logs():
        raise LeftoverPhantoms("apply a scale before taking the regularized limit")
    return pullback(at, f).as_scalar()


def is_continuous(f) -> bool:
    """Every term carrying ``log r`` has a coefficient divisible by ``r``."""
    form = as_form(f)
    for (_, key), c in form.terms.items():
        for name, e in key:
            if name in form.chart.basic and not c.restrict(name).is_zero():
                return False
    return True


# ------------------------------------------------------------------ homotopies
def _move_to_front(chart: Chart, basis: tuple, name: str):
    """``(sign, rest)`` with ``basis = sign * (name, *rest)``."""
    pos = basis.index(name)
    return (-1) ** pos, basis[:pos] + basis[pos + 1:]


def unit_projection(w, t: str):
    """``p^* s^*`` for the unit scale ``t -> 1``: drop everything involving ``t``."""
    form = as_form(w)
    kept = {(b, k): c for (b, k), c in form.terms.items() if t not in b and t not in dict(k)}
    return _same_kind(w, LogForm(form.chart, kept, _check=False))


def homotopy_phantom(w, t: str) -> LogForm:
    """``log^j t dlog t ^ beta -> log^(j+1) t / (j+1) beta`` and ``log^j t alpha -> 0``."""
    form = as_form(w)
    chart = form.chart
    if chart.kind(t) != "phantom":
        raise UnknownCoordinate(f"{t} is not a phantom coordinate")
    out: dict = {}
    for (basis, key), c in form.terms.items():
        if t not in basis:
            continue
        sign, rest = _move_to_front(chart, basis, t)
        j = dict(key).get(t, 0)
        nk = mono_mul(key, ((t, 1),))
        v = c * Scalar.const(Fraction(sign, j + 1))
        k = (rest, nk)
        s = out.get(k)
        out[k] = v if s is None else s + v
    return LogForm(chart, out, _check=False)


def _power_log_integral(n: int, k: int, r: str) -> dict:
    """``int_0^r s^n log^k s ds`` as ``{log power: Coefficient}`` (n >= 0)."""
    out = {}
    for j in range(k + 1):
        coef = Fraction((-1) ** j * factorial(k), factorial(k - j) * (n + 1) ** (j + 1))
        out[k - j] = Coefficient.var(r, n + 1) * Scalar.const(coef)
    return out


def homotopy_interval(w, r: str) -> LogForm:
    """``h' w = int_0^r w_1`` where ``w = w_0 + dr ^ w_1``; needs ``w`` in ker i^*."""
    form = as_form(w)
    chart = form.chart
    if chart.kind(r) != "basic":
        raise UnknownCoordinate(f"{r} is not a basic coordinate")
    if not reg_restrict(form, (r,)).is_zero():
        raise NotInKernel(f"form does not vanish on the face {r} = 0")
    out: dict = {}
    for (basis, key), c in form.terms.items():
        if r not in basis:
            continue
        sign, rest = _move_to_front(chart, basis, r)
        k = dict(key).get(r, 0)
        other = tuple((n, e) for n, e in key if n != r)
        try:
            pieces = c.polynomial_in(r)
        except NotRepresentable:
            raise NotRepresentable(f"exp factor in {r} has no exact antiderivative") from None
        for m, cm in pieces.items():
            if m == 0:
                raise NotInKernel("coefficient of dlog r does not vanish at r = 0")
            for p, cr in _power_log_integral(m - 1, k, r).items():
                v = cm * cr
                if sign < 0:
                    v = -v
                nk = mono_mul(other, ((r, p),)) if p else other
                kk = (rest, nk)
                s = out.get(kk)
                out[kk] = v if s is None else s + v
    return LogForm(chart, out, _check=False)


def normal_projection(chart: Chart, r: str):
    """Face chart at ``r = 0`` with the projection ``q`` (``t -> r``) onto it."""
    fchart, renames = chart.face_chart((r,))
    t = renames[r]
    q = WeakMorphism.build(chart, fchart, t={t: MonoidElement.coordinate(r)})
    return fchart, t, q


def homotopy_combined(w, r: str) -> LogForm:
    """Composite homotopy on ``Sigma x [0, inf)``.

    ``H = h'(1 - q^* i^*) + q^* h i^*`` with ``i`` the face at ``r = 0``,
    ``q`` its normal projection and ``h`` the phantom homotopy; it satisfies
    ``dH + Hd = 1 - q^* p^* s^* i^*`` for the unit scale.
    """
    form = as_form(w)
    fchart, t, q = normal_projection(form.chart, r)
    restricted = reg_restrict(form, (r,))
    rest = form - pullback(q, restricted)
    return homotopy_interval(rest, r) + pullback(q, homotopy_phantom(restricted, t))


def combined_projection(w, r: str) -> LogForm:
    """``q^* p^* s^* i^*``, the defect of the composite homotopy."""
    form = as_form(w)
    fchart, t, q = normal_projection(form.chart, r)
    return pullback(q, unit_projection(reg_restrict(form, (r,)), t))
