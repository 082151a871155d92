"""Rational functions over Q(i) in the positive parameters.

Numerators are Laurent polynomials; a denominator is stored only when it is
not a monomial.  That keeps the common case (Laurent monomials coming from
``sigma^E`` factors) free of gcd computations.  Non-monomial denominators are
reduced against the numerator with sympy's polynomial gcd over QQ_I.
"""
from __future__ import annotations

from fractions import Fraction

from .gaussian import GaussianRational, ONE, ZERO

# A monomial is a sorted tuple of (parameter name, nonzero exponent).
Monomial = tuple


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for name, e in m2:
        total = exps.get(name, 0) + e
        if total:
            exps[name] = total
        else:
            del exps[name]
    return tuple(sorted(exps.items()))


def mono_pow(m: Monomial, n: int) -> Monomial:
    if n == 0:
        return ()
    return tuple((name, e * n) for name, e in m)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def poly_add(p: dict, q: dict, sign: int = 1) -> dict:
    out = dict(p)
    for m, c in q.items():
        if sign < 0:
            c = -c
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s.is_zero():
                del out[m]
            else:
                out[m] = s
    return out


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            c = c1 * c2
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
    return out


def poly_scale(p: dict, c: GaussianRational, m: Monomial = ()) -> dict:
    if c.is_zero():
        return {}
    return {mono_mul(k, m): v * c for k, v in p.items()}


def _content(p: dict) -> Monomial:
    """Largest monomial dividing every term (exponents may be negative)."""
    names = {name for m in p for name, _ in m}
    content = []
    for name in sorted(names):
        low = min(dict(m).get(name, 0) for m in p)
        if low:
            content.append((name, low))
    return tuple(content)


def _leading(p: dict):
    return max(p, key=lambda m: (mono_degree(m), m))


def _to_sympy(p: dict, names):
    from sympy import Poly, QQ_I, Symbol

    gens = [Symbol(n) for n in names]
    data = {}
    for m, c in p.items():
        exps = dict(m)
        key = tuple(exps.get(n, 0) for n in names)
        data[key] = QQ_I(c.real, c.imag)
    return Poly.from_dict(data, *gens, domain=QQ_I)


def _from_sympy(poly, names) -> dict:
    out = {}
    # Poly.terms() yields sympy numbers, not domain elements
    for exps, c in poly.terms():
        re_s, im_s = c.as_real_imag()
        re = Fraction(int(re_s.p), int(re_s.q))
        im = Fraction(int(im_s.p), int(im_s.q))
        den = re.denominator * im.denominator
        g = GaussianRational(int(re * den), int(im * den), den)
        if g.is_zero():
            continue
        m = tuple((n, e) for n, e in zip(names, exps) if e)
        out[m] = g
    return out


class ParamFraction:
    """Reduced quotient ``num / den`` of polynomials over Q(i)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=None, den=None, _reduced=False):
        num = {} if num is None else num
        if den is not None and not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # ---------------------------------------------------------- construction
    @classmethod
    def const(cls, value) -> "ParamFraction":
        g = GaussianRational.coerce(value)
        return cls({} if g.is_zero() else {(): g})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=ONE) -> "ParamFraction":
        g = GaussianRational.coerce(coeff)
        return cls({} if g.is_zero() else {tuple(sorted(mono)): g})

    @classmethod
    def param(cls, name: str, power: int = 1) -> "ParamFraction":
        return cls.monomial(((name, power),) if power else ())

    @staticmethod
    def _reduce(num: dict, den: dict):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return {}, None
        if len(den) == 1:
            (m, c), = den.items()
            return poly_scale(num, c.inverse(), mono_pow(m, -1)), None
        dc = _content(den)
        if dc:
            inv = mono_pow(dc, -1)
            den = poly_scale(den, ONE, inv)
            num = poly_scale(num, ONE, inv)
        nc = _content(num)
        num_p = poly_scale(num, ONE, mono_pow(nc, -1)) if nc else num
        names = sorted({n for m in num_p for n, _ in m} | {n for m in den for n, _ in m})
        if names:
            sn, sd = _to_sympy(num_p, names), _to_sympy(den, names)
            g = sn.gcd(sd)
            if g.total_degree() > 0:
                num_p = _from_sympy(sn.exquo(g), names)
                den = _from_sympy(sd.exquo(g), names)
        if nc:
            num_p = poly_scale(num_p, ONE, nc)
        if len(den) == 1:
            (m, c), = den.items()
            return poly_scale(num_p, c.inverse(), mono_pow(m, -1)), None
        lc = den[_leading(den)]
        if not lc.is_one():
            inv = lc.inverse()
            num_p = poly_scale(num_p, inv)
            den = poly_scale(den, inv)
        return num_p, den

    # ------------------------------------------------------------ predicates
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return self.den is None and (not self.num or (len(self.num) == 1 and () in self.num))

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("fraction depends on parameters")
        return self.num.get((), ZERO)

    def is_monomial(self) -> bool:
        return self.den is None and len(self.num) == 1

    def variables(self) -> set:
        out = {n for m in self.num for n, _ in m}
        if self.den:
            out |= {n for m in self.den for n, _ in m}
        return out

    # ------------------------------------------------------------ arithmetic
    def __eq__(self, other):
        if not isinstance(other, ParamFraction):
            try:
                other = ParamFraction.const(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            den = frozenset(self.den.items()) if self.den else None
            self._hash = hash((frozenset(self.num.items()), den))
        return self._hash

    def __neg__(self):
        return ParamFraction({m: -c for m, c in self.num.items()}, self.den, _reduced=True)

    def _coerce(self, other):
        if isinstance(other, ParamFraction):
            return other
        return ParamFraction.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.den is None and other.den is None:
            return ParamFraction(poly_add(self.num, other.num), None, _reduced=True)
        if self.den == other.den:
            return ParamFraction(poly_add(self.num, other.num), self.den)
        d1 = self.den or {(): ONE}
        d2 = other.den or {(): ONE}
        num = poly_add(poly_mul(self.num, d2), poly_mul(other.num, d1))
        return ParamFraction(num, poly_mul(d1, d2))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.num or not other.num:
            return ParamFraction()
        num = poly_mul(self.num, other.num)
        if self.den is None and other.den is None:
            return ParamFraction(num, None, _reduced=True)
        d1 = self.den or {(): ONE}
        d2 = other.den or {(): ONE}
        return ParamFraction(num, poly_mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "ParamFraction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        if len(self.num) == 1:
            (m, c), = self.num.items()
            num = {mono_pow(m, -1): c.inverse()}
            if self.den is None:
                return ParamFraction(num, None, _reduced=True)
            return ParamFraction(poly_mul(self.den, num), None, _reduced=True)
        return ParamFraction(dict(self.den) if self.den else {(): ONE}, dict(self.num))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_monomial():
            (m, c), = self.num.items()
            return ParamFraction({mono_pow(m, n): c ** n}, None, _reduced=True)
        out = ParamFraction.const(1)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "ParamFraction":
        num = {m: c.conjugate() for m, c in self.num.items()}
        den = {m: c.conjugate() for m, c in self.den.items()} if self.den else None
        if den is None:
            return ParamFraction(num, None, _reduced=True)
        return ParamFraction(num, den)

    def substitute(self, name: str, value) -> "ParamFraction":
        """Replace a parameter by a nonzero Gaussian rational."""
        value = GaussianRational.coerce(value)

        def sub(p):
            out = {}
            for m, c in p.items():
                e = dict(m).get(name, 0)
                rest = tuple(x for x in m if x[0] != name)
                cc = c * value ** e
                out = poly_add(out, {rest: cc})
            return out

        num = sub(self.num)
        if self.den is None:
            return ParamFraction(num, None, _reduced=True)
        den = sub(self.den)
        if not den:
            raise ZeroDivisionError(f"denominator vanishes at {name} = {value}")
        return ParamFraction(num, den)

    def evaluate(self, params: dict) -> complex:
        def ev(p):
            total = 0j
            for m, c in p.items():
                term = complex(c)
                for name, e in m:
                    try:
                        term *= params[name] ** e
                    except KeyError:
                        from ..errors import MissingAssignment
                        raise MissingAssignment(f"no value for parameter {name!r}") from None
                total += term
            return total

        value = ev(self.num)
        if self.den is not None:
            value /= ev(self.den)
        return value

    def sort_key(self):
        def pk(p):
            return tuple(sorted((m, c.sort_key()) for m, c in p.items()))
        return (pk(self.num), pk(self.den) if self.den else ())

    def __repr__(self):
        return f"ParamFraction({self})"

    def __str__(self):
        from ..cli.render import render_fraction
        return render_fraction(self)
