"""Canonical text rendering of exact values.

The output is valid input for :mod:`logcorners.cli.grammar`, so every
rendered object parses back to itself.  ``log(x)`` denotes the logarithm of
a positive parameter or prime.
"""
from __future__ import annotations

from fractions import Fraction


def _rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _split_sign(g):
    """Return (negative, body) for a Gaussian rational, body without sign."""
    re, im = g.real, g.imag
    if im == 0:
        return re < 0, ("", abs(re))
    if re == 0:
        return im < 0, ("i", abs(im))
    return False, ("complex", g)


def _gaussian_factor(g):
    """(negative, factor string or '' for unit) for a Gaussian rational coefficient."""
    neg, (kind, val) = _split_sign(g)
    if kind == "":
        return neg, "" if val == 1 else _rational(val)
    if kind == "i":
        return neg, "i" if val == 1 else f"{_rational(val)}*i"
    re, im = g.real, g.imag
    sign = "+" if im > 0 else "-"
    body = "i" if abs(im) == 1 else f"{_rational(abs(im))}*i"
    return False, f"({_rational(re)}{sign}{body})"


def _monomial(mono) -> tuple[str, str]:
    ups, downs = [], []
    for name, e in mono:
        target = ups if e > 0 else downs
        target.append(name if abs(e) == 1 else f"{name}^{abs(e)}")
    return "*".join(ups), "*".join(downs)


def _poly(p: dict) -> str:
    """Sum of Gaussian-rational multiples of Laurent monomials."""
    if not p:
        return "0"
    parts = []
    for mono, c in sorted(p.items(), key=lambda kv: (-sum(abs(e) for _, e in kv[0]), kv[0])):
        neg, cf = _gaussian_factor(c)
        up, down = _monomial(mono)
        factors = [f for f in (cf, up) if f]
        body = "*".join(factors) if factors else "1"
        if down:
            body = f"{body}/{down}" if "*" not in down else f"{body}/({down})"
        parts.append(("-" if neg else "+", body))
    return _join(parts)


def _join(parts) -> str:
    out = ""
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f"{sign}{body}"
    return out


def _fraction_factor(frac):
    """(negative, factor) for a ParamFraction appearing as a product factor."""
    if frac.den is None and len(frac.num) == 1:
        (mono, c), = frac.num.items()
        neg, cf = _gaussian_factor(c)
        up, down = _monomial(mono)
        factors = [f for f in (cf, up) if f]
        body = "*".join(factors)
        if down:
            body = f"{body or '1'}/{down}" if "*" not in down else f"{body or '1'}/({down})"
        return neg, body
    text = render_fraction(frac)
    return False, f"({text})"


def render_fraction(frac) -> str:
    if frac.den is None:
        return _poly(frac.num)
    num, den = _poly(frac.num), _poly(frac.den)
    if len(frac.num) > 1 or num.startswith("-"):
        num = f"({num})"
    return f"{num}/({den})"


def _scalar_parts(s):
    parts = []
    for (p, logs), v in sorted(s.terms.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        neg, cf = _fraction_factor(v)
        factors = [cf] if cf else []
        if p:
            factors.append("pi" if p == 1 else f"pi^{p}")
        for name, e in logs:
            factors.append(f"log({name})" if e == 1 else f"log({name})^{e}")
        body = "*".join(factors) if factors else "1"
        parts.append(("-" if neg else "+", body))
    return parts


def render_scalar(s) -> str:
    if s.is_zero():
        return "0"
    return _join(_scalar_parts(s))


def scalar_factor(s):
    """(negative, factor) for a Scalar used inside a product; '' means 1."""
    if len(s.terms) == 1:
        (_, v), = s.terms.items()
        (neg, body), = [(sg == "-", b) for sg, b in _scalar_parts(s)]
        return neg, "" if body == "1" else body
    return False, f"({render_scalar(s)})"


def _coeff_parts(c):
    parts = []
    items = sorted(c.terms.items(), key=lambda kv: (kv[0][0].sort_key(), _deg(kv[0][1]), kv[0][1], kv[0][2]))
    for (q, m, f), v in items:
        neg, sf = scalar_factor(v)
        factors = [sf] if sf else []
        if not q.is_zero():
            factors.append(f"exp({render_coefficient(q)})")
        for name, e in m:
            factors.append(name if e == 1 else f"{name}^{e}")
        for name, n in f:
            if n == 1:
                factors.append(f"exp(i*{name})")
            elif n == -1:
                factors.append(f"exp(-i*{name})")
            else:
                factors.append(f"exp({n}*i*{name})")
        body = "*".join(factors) if factors else "1"
        parts.append(("-" if neg else "+", body))
    return parts


def _deg(m):
    return sum(e for _, e in m)


def render_coefficient(c) -> str:
    if c.is_zero():
        return "0"
    if c.is_constant():
        return render_scalar(c.constant_term())
    return _join(_coeff_parts(c))


def coefficient_factor(c):
    if len(c.terms) == 1:
        (sign, body), = _coeff_parts(c)
        return sign == "-", "" if body == "1" else body
    return False, f"({render_coefficient(c)})"


def _basis_token(chart, name) -> str:
    kind = chart.kind(name)
    if kind in ("basic", "phantom"):
        return f"dlog({name})"
    return f"d({name})"


def _log_factors(key) -> list:
    return [f"log({n})" if e == 1 else f"log({n})^{e}" for n, e in key]


def _function_parts(terms):
    parts = []
    for key, c in sorted(terms.items(), key=lambda kv: (sum(e for _, e in kv[0]), kv[0])):
        neg, cf = coefficient_factor(c)
        factors = ([cf] if cf else []) + _log_factors(key)
        parts.append(("-" if neg else "+", "*".join(factors) if factors else "1"))
    return parts


def render_logfunction(f) -> str:
    if f.is_zero():
        return "0"
    if set(f.terms) == {()}:
        return render_coefficient(f.terms[()])
    return _join(_function_parts(f.terms))


def render_logform(w) -> str:
    if w.is_zero():
        return "0"
    chart = w.chart
    parts = []
    order = sorted(w.terms.items(), key=lambda kv: ([chart.index(n) for n in kv[0][0]], kv[0][1]))
    for (basis, key), c in order:
        neg, cf = coefficient_factor(c)
        factors = ([cf] if cf else []) + _log_factors(key)
        if basis:
            head = "*".join(factors + [_basis_token(chart, basis[0])])
            body = " ^wedge ".join([head] + [_basis_token(chart, n) for n in basis[1:]])
        else:
            body = "*".join(factors) if factors else "1"
        parts.append(("-" if neg else "+", body))
    return _join(parts)


def render_monoid(m) -> str:
    factors = []
    frac_neg, cf = _fraction_factor(m.constant_scalar().as_fraction())
    if cf:
        factors.append(cf)
    if not m.exp_arg.is_zero():
        factors.append(f"exp({render_coefficient(m.exp_arg)})")
    for name, e in m.r_exp + m.t_exp:
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def render_morphism(phi) -> str:
    items = []
    for name, m in phi.r_map + phi.t_map:
        items.append(f"{name} -> {render_monoid(m)}" + (" @0" if name in phi.boundary else ""))
    for name, c in phi.x_map:
        items.append(f"{name} -> {render_coefficient(c)}")
    for name, a in phi.theta_map:
        rhs = []
        if a.source is not None:
            rhs.append(a.source if a.sign > 0 else f"-{a.source}")
        if a.offset:
            rhs.append(f"{_rational(a.offset)}*pi")
        items.append(f"{name} -> {'+'.join(rhs) if rhs else '0'}")
    return "{" + ", ".join(items) + "}"
