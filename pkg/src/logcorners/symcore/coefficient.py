"""Coefficient functions of chart coordinates.

A :class:`Coefficient` is a finite sum of terms

    s * exp(q) * x^a r^b * exp(i n.theta)

with ``s`` a :class:`Scalar`, ``q`` an exp-free coefficient without constant
term, nonnegative exponents on the free/basic coordinates and integer Fourier
exponents on the angular ones.  Distinct ``(q, monomial, fourier)`` keys give
linearly independent functions and no nonzero element of this ring is flat at
a boundary, so the dictionary of terms is a canonical form.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..errors import MissingAssignment, NotRepresentable
from .fraction import mono_mul
from .gaussian import GaussianRational
from .scalar import Scalar


def _fourier_mul(f1: tuple, f2: tuple) -> tuple:
    return mono_mul(f1, f2)


class Coefficient:
    """Immutable element of the coefficient ring; see the module docstring."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {} if terms is None else {k: v for k, v in terms.items() if not v.is_zero()}
        self._hash = None

    # ---------------------------------------------------------- construction
    @classmethod
    def zero(cls) -> "Coefficient":
        return cls()

    @classmethod
    def const(cls, value) -> "Coefficient":
        s = Scalar.const(value)
        return cls({(_ZERO_EXP, (), ()): s})

    @classmethod
    def one(cls) -> "Coefficient":
        return cls.const(1)

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Coefficient":
        if power < 0:
            raise ValueError("negative powers of coordinates are not in the ring")
        mono = ((name, power),) if power else ()
        return cls({(_ZERO_EXP, mono, ()): Scalar.one()})

    @classmethod
    def fourier(cls, theta: str, n: int = 1) -> "Coefficient":
        f = ((theta, n),) if n else ()
        return cls({(_ZERO_EXP, (), f): Scalar.one()})

    @classmethod
    def exp(cls, q: "Coefficient") -> "Coefficient":
        """``exp(q)`` for an exp-free ``q``; a nonzero constant term is not representable."""
        if not q.is_exp_free():
            raise NotRepresentable("nested exponentials are not in the coefficient ring")
        const = q.constant_term()
        if not const.is_zero():
            raise NotRepresentable(f"exp of the constant {const} is not an exact scalar")
        if q.is_zero():
            return cls.one()
        return cls({(q, (), ()): Scalar.one()})

    @classmethod
    def coerce(cls, value) -> "Coefficient":
        if isinstance(value, Coefficient):
            return value
        return cls.const(value)

    # ------------------------------------------------------------ predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_exp_free(self) -> bool:
        return all(k[0].is_zero() for k in self.terms)

    def is_constant(self) -> bool:
        return all(k == (_ZERO_EXP, (), ()) for k in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((_ZERO_EXP, (), ()), Scalar())

    def as_scalar(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.constant_term()

    def coordinates(self) -> set:
        out = set()
        for q, m, f in self.terms:
            out |= {n for n, _ in m} | {n for n, _ in f}
            if not q.is_zero():
                out |= q.coordinates()
        return out

    def depends_on(self, coord: str) -> bool:
        return coord in self.coordinates()

    def scalars(self):
        for v in self.terms.values():
            yield v
        for q, _, _ in self.terms:
            if not q.is_zero():
                yield from q.scalars()

    # ------------------------------------------------------------ arithmetic
    def __eq__(self, other):
        if not isinstance(other, Coefficient):
            try:
                other = Coefficient.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return Coefficient({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Coefficient):
            try:
                other = Coefficient.const(other)
            except TypeError:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            out[k] = v if s is None else s + v
        return Coefficient(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Coefficient.coerce(other))

    def __rsub__(self, other):
        return Coefficient.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if other.is_zero():
                return Coefficient()
            return Coefficient({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, Coefficient):
            try:
                return self * Scalar.const(other)
            except TypeError:
                return NotImplemented
        out: dict = {}
        for (q1, m1, f1), v1 in self.terms.items():
            for (q2, m2, f2), v2 in other.terms.items():
                q = q1 if q2.is_zero() else (q2 if q1.is_zero() else q1 + q2)
                k = (q, mono_mul(m1, m2), _fourier_mul(f1, f2))
                v = v1 * v2
                s = out.get(k)
                out[k] = v if s is None else s + v
        return Coefficient(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a constant that lies in Q(i)(sigma)."""
        s = Scalar.const(other)
        return Coefficient({k: v / s for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not in the ring")
        out = Coefficient.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -------------------------------------------------------------- calculus
    def diff(self, coord: str) -> "Coefficient":
        """Exact partial derivative in one chart coordinate."""
        out = Coefficient()
        for (q, m, f), v in self.terms.items():
            base = Coefficient({(q, m, f): v})
            md = dict(m)
            e = md.get(coord, 0)
            if e:
                new_m = mono_mul(m, ((coord, -1),))
                out = out + Coefficient({(q, new_m, f): v * e})
            n = dict(f).get(coord, 0)
            if n:
                out = out + base * Scalar.const(GaussianRational(0, n))
            if not q.is_zero():
                dq = q.diff(coord)
                if not dq.is_zero():
                    out = out + base * dq
        return out

    def conjugate(self) -> "Coefficient":
        """Complex conjugate, with every coordinate real."""
        out = Coefficient()
        for (q, m, f), v in self.terms.items():
            term = Coefficient({(_ZERO_EXP, m, tuple((n, -e) for n, e in f)): v.conjugate()})
            if not q.is_zero():
                term = term * Coefficient.exp(q.conjugate())
            out = out + term
        return out

    def is_real(self) -> bool:
        return self.conjugate() == self

    def substitute(self, mapping: dict, angular: dict | None = None) -> "Coefficient":
        """Substitute coordinates.

        ``mapping`` sends free/basic coordinate names to coefficients;
        ``angular`` sends an angular name to ``(sign, new_name | None, offset)``
        meaning ``theta -> sign * new_name + offset * pi`` with ``2 * offset``
        an integer.  Unmapped coordinates are left alone.
        """
        angular = angular or {}
        if not self.terms:
            return self
        out = Coefficient()
        cache: dict = {}
        for (q, m, f), v in self.terms.items():
            term = Coefficient.const(v)
            rest_m = []
            for name, e in m:
                if name in mapping:
                    key = (name, e)
                    if key not in cache:
                        cache[key] = Coefficient.coerce(mapping[name]) ** e
                    term = term * cache[key]
                else:
                    rest_m.append((name, e))
            rest_f = []
            for name, n in f:
                if name in angular:
                    sign, new, offset = angular[name]
                    quarter = Fraction(offset) * 2 * n
                    if quarter.denominator != 1:
                        raise NotRepresentable("angular offsets must be multiples of pi/2")
                    term = term * Scalar.const(GaussianRational(0, 1) ** (int(quarter) % 4))
                    if new is not None:
                        rest_f.append((new, sign * n))
                else:
                    rest_f.append((name, n))
            merged_f = ()
            for item in rest_f:
                merged_f = _fourier_mul(merged_f, (item,))
            term = term * Coefficient({(_ZERO_EXP, tuple(sorted(rest_m)), merged_f): Scalar.one()})
            if not q.is_zero():
                term = term * Coefficient.exp(q.substitute(mapping, angular))
            out = out + term
        return out

    def restrict(self, coord: str) -> "Coefficient":
        """Set a free or basic coordinate to zero."""
        return self.substitute({coord: Coefficient()})

    def polynomial_in(self, coord: str) -> dict:
        """Split as ``sum_k c_k * coord^k`` with ``c_k`` independent of ``coord``.

        Requires the exp-arguments not to involve ``coord``.
        """
        out: dict = {}
        for (q, m, f), v in self.terms.items():
            if not q.is_zero() and q.depends_on(coord):
                raise NotRepresentable(f"exp factor depends on {coord}")
            e = dict(m).get(coord, 0)
            rest = tuple(x for x in m if x[0] != coord)
            piece = Coefficient({(q, rest, f): v})
            out[e] = out.get(e, Coefficient()) + piece
        return {k: c for k, c in out.items() if not c.is_zero()}

    def fourier_in(self, theta: str) -> dict:
        """Split as ``sum_n c_n * exp(i n theta)``; exp factors must not involve theta."""
        out: dict = {}
        for (q, m, f), v in self.terms.items():
            if not q.is_zero() and q.depends_on(theta):
                raise NotRepresentable(f"exp factor depends on {theta}")
            n = dict(f).get(theta, 0)
            rest = tuple(x for x in f if x[0] != theta)
            piece = Coefficient({(q, m, rest): v})
            out[n] = out.get(n, Coefficient()) + piece
        return {k: c for k, c in out.items() if not c.is_zero()}

    # -------------------------------------------------------------- numerics
    def evaluate(self, values: dict, params: dict | None = None, _cache=None):
        """Evaluate at numeric coordinate values (floats or numpy arrays).

        Angular coordinates take the angle itself; parameters take positive
        floats.  Double precision throughout.
        """
        params = params or {}
        cache = {} if _cache is None else _cache
        total = 0j
        for (q, m, f), v in self.terms.items():
            sv = cache.get(v)
            if sv is None:
                sv = v.evaluate(params)
                cache[v] = sv
            term = sv
            for name, e in m:
                try:
                    term = term * np.asarray(values[name]) ** e
                except KeyError:
                    raise MissingAssignment(f"no value for coordinate {name!r}") from None
            if f:
                phase = 0.0
                for name, n in f:
                    try:
                        phase = phase + n * np.asarray(values[name])
                    except KeyError:
                        raise MissingAssignment(f"no value for coordinate {name!r}") from None
                term = term * np.exp(1j * phase)
            if not q.is_zero():
                term = term * np.exp(q.evaluate(values, params, cache))
            total = total + term
        return total

    def sort_key(self):
        return tuple(sorted(((q.sort_key(), m, f), v.sort_key()) for (q, m, f), v in self.terms.items()))

    def __repr__(self):
        return f"Coefficient({self})"

    def __str__(self):
        from ..cli.render import render_coefficient
        return render_coefficient(self)


_ZERO_EXP = Coefficient()
