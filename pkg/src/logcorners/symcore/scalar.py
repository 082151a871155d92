"""Exact constants: elements of Q(i)(sigma)[pi, L_1, ..., L_m].

``L_x`` stands for ``log x``.  The symbol ``x`` is either a declared positive
parameter (an identifier) or a rational prime written in decimal, so the
logarithm of any positive rational constant is representable through its
prime factorisation.  pi, i and the L symbols are treated as algebraically
independent; no numeric coincidence is ever used to simplify.
"""
from __future__ import annotations

import math
from fractions import Fraction

from sympy import factorint

from ..errors import MissingAssignment
from .fraction import ParamFraction, mono_mul
from .gaussian import GaussianRational

_ONE_FRAC = ParamFraction.const(1)


def is_prime_symbol(name: str) -> bool:
    return name.isdigit()


def _log_key_mul(k1: tuple, k2: tuple) -> tuple:
    # same merge rule as parameter monomials; exponents never cancel here
    return mono_mul(k1, k2)


def prime_logs(q) -> dict:
    """``log q`` for a positive rational as ``{prime: multiplicity}``."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"log of non-positive rational {q}")
    out: dict = {}
    for p, e in factorint(q.numerator).items():
        out[str(p)] = out.get(str(p), 0) + e
    for p, e in factorint(q.denominator).items():
        out[str(p)] = out.get(str(p), 0) - e
    return {p: e for p, e in out.items() if e}


class Scalar:
    """Immutable exact constant; ``terms`` maps ``(pi_degree, log_monomial)`` to a fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {} if terms is None else {k: v for k, v in terms.items() if not v.is_zero()}
        self._hash = None

    # ---------------------------------------------------------- construction
    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls({(0, ()): _ONE_FRAC})

    @classmethod
    def const(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, ParamFraction):
            return cls({(0, ()): value})
        return cls({(0, ()): ParamFraction.const(value)})

    @classmethod
    def i(cls) -> "Scalar":
        return cls.const(GaussianRational(0, 1))

    @classmethod
    def pi(cls) -> "Scalar":
        return cls({(1, ()): _ONE_FRAC})

    @classmethod
    def two_pi_i(cls) -> "Scalar":
        return cls({(1, ()): ParamFraction.const(GaussianRational(0, 2))})

    @classmethod
    def param(cls, name: str, power: int = 1) -> "Scalar":
        return cls({(0, ()): ParamFraction.param(name, power)})

    @classmethod
    def log(cls, name: str) -> "Scalar":
        """The symbol ``L_name`` (``log`` of a positive parameter or prime)."""
        return cls({(0, ((name, 1),)): _ONE_FRAC})

    @classmethod
    def log_rational(cls, q) -> "Scalar":
        out = cls()
        for p, e in prime_logs(q).items():
            out = out + cls.log(p) * e
        return out

    # ------------------------------------------------------------ predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_fraction(self) -> bool:
        """True when the value lies in Q(i)(sigma), i.e. has no pi or L."""
        return all(k == (0, ()) for k in self.terms)

    def as_fraction(self) -> ParamFraction:
        if not self.is_fraction():
            raise ValueError(f"{self} involves pi or logarithms")
        return self.terms.get((0, ()), ParamFraction())

    def is_rational_constant(self) -> bool:
        return self.is_fraction() and self.as_fraction().is_constant()

    def log_symbols(self) -> set:
        return {n for (_, logs) in self.terms for n, _ in logs}

    def parameters(self) -> set:
        out = set()
        for v in self.terms.values():
            out |= v.variables()
        return out

    # ------------------------------------------------------------ arithmetic
    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return Scalar({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.const(other)
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
        return Scalar(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.const(other)
            except TypeError:
                return NotImplemented
        out: dict = {}
        for (p1, l1), v1 in self.terms.items():
            for (p2, l2), v2 in other.terms.items():
                k = (p1 + p2, _log_key_mul(l1, l2))
                v = v1 * v2
                s = out.get(k)
                out[k] = v if s is None else s + v
        return Scalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.const(other)
        if not other.is_fraction():
            raise ZeroDivisionError(f"cannot divide by the transcendental scalar {other}")
        inv = other.as_fraction().inverse()
        return Scalar({k: v * inv for k, v in self.terms.items()})

    def __rtruediv__(self, other):
        return Scalar.const(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return Scalar.one() / (self ** (-n))
        out = Scalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Scalar":
        """Complex conjugate (parameters, pi and the L symbols are real)."""
        return Scalar({k: v.conjugate() for k, v in self.terms.items()})

    def specialize(self, name: str, value) -> "Scalar":
        """Set the positive parameter ``name`` to a positive rational ``value``.

        ``L_name`` becomes ``log(value)`` expanded over primes; in particular
        ``value = 1`` sends ``L_name`` to 0.
        """
        value = Fraction(value)
        log_value = Scalar.log_rational(value)
        out = Scalar()
        for (p, logs), v in self.terms.items():
            v = v.substitute(name, GaussianRational(value.numerator, 0, value.denominator))
            e = dict(logs).get(name, 0)
            rest = tuple(x for x in logs if x[0] != name)
            term = Scalar({(p, rest): v})
            if e:
                term = term * log_value ** e
            out = out + term
        return out

    def evaluate(self, params=None) -> complex:
        """Numeric value in double precision; ``params`` maps names to positive floats."""
        params = params or {}
        total = 0j
        for (p, logs), v in self.terms.items():
            term = v.evaluate(params) * math.pi ** p
            for name, e in logs:
                if is_prime_symbol(name):
                    val = float(int(name))
                else:
                    try:
                        val = params[name]
                    except KeyError:
                        raise MissingAssignment(f"no value for parameter {name!r}") from None
                if isinstance(val, complex) or val <= 0:
                    raise ValueError(f"parameter {name!r} must be positive, got {val}")
                term *= math.log(val) ** e
            total += term
        return complex(total)

    def sort_key(self):
        return tuple(sorted((k, v.sort_key()) for k, v in self.terms.items()))

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        from ..cli.render import render_scalar
        return render_scalar(self)
