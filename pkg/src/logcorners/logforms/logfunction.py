"""Logarithmic functions on a chart.

A :class:`LogFunction` is a finite sum ``sum_I c_I * log^I`` where ``I`` is
a multi-exponent over the basic and phantom coordinates and ``c_I`` is a
:class:`Coefficient`.  Because the coefficient ring has no flat functions
the expansion is unique, so equality is structural.
"""
from __future__ import annotations

import numpy as np

from ..errors import ChartMismatch, LeftoverPhantoms, MissingAssignment, UnknownCoordinate
from ..geometry.chart import Chart
from ..geometry.monoid import MonoidElement
from ..symcore import Coefficient, Scalar
from ..symcore.fraction import mono_mul


def _canonical_keys(terms: dict, key_of, rebuild=None) -> dict:
    """Sort log monomials by name and merge terms that collide."""
    rebuild = rebuild or (lambda k, key: key)
    out: dict = {}
    for k, v in terms.items():
        key = tuple(sorted((n, e) for n, e in key_of(k) if e))
        nk = rebuild(k, key)
        s = out.get(nk)
        out[nk] = v if s is None else s + v
    return {k: v for k, v in out.items() if not v.is_zero()}


class LogFunction:
    __slots__ = ("chart", "terms", "_hash")

    def __init__(self, chart: Chart, terms=None, _check=True):
        self.chart = chart
        terms = {} if terms is None else {k: v for k, v in terms.items() if not v.is_zero()}
        if _check:
            terms = _canonical_keys(terms, lambda k: k)
            logs_ok = set(chart.basic) | set(chart.phantom)
            coords_ok = set(chart.free) | set(chart.basic) | set(chart.angular)
            for key, c in terms.items():
                for name, e in key:
                    if name not in logs_ok or e <= 0:
                        raise UnknownCoordinate(f"log({name}) is not a log coordinate of {chart}")
                if not c.coordinates() <= coords_ok:
                    raise UnknownCoordinate(f"coefficient {c} uses coordinates outside {chart}")
        self.terms = terms
        self._hash = None

    # ---------------------------------------------------------- construction
    @classmethod
    def zero(cls, chart: Chart) -> "LogFunction":
        return cls(chart)

    @classmethod
    def const(cls, chart: Chart, value) -> "LogFunction":
        return cls(chart, {(): Coefficient.const(value)})

    @classmethod
    def one(cls, chart: Chart) -> "LogFunction":
        return cls.const(chart, 1)

    @classmethod
    def coefficient(cls, chart: Chart, c: Coefficient) -> "LogFunction":
        return cls(chart, {(): c})

    @classmethod
    def var(cls, chart: Chart, name: str, power: int = 1) -> "LogFunction":
        chart.kind(name)
        return cls(chart, {(): Coefficient.var(name, power)})

    @classmethod
    def log(cls, chart: Chart, name: str, power: int = 1) -> "LogFunction":
        if chart.kind(name) not in ("basic", "phantom"):
            raise UnknownCoordinate(f"log({name}) needs a basic or phantom coordinate")
        key = ((name, power),) if power else ()
        return cls(chart, {key: Coefficient.one()}, _check=False)

    def _coerce(self, other) -> "LogFunction":
        if isinstance(other, LogFunction):
            self.chart.require_same(other.chart)
            return other
        if isinstance(other, Coefficient):
            return LogFunction(self.chart, {(): other})
        return LogFunction(self.chart, {(): Coefficient.const(other)}, _check=False)

    # ------------------------------------------------------------ predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == () and c.is_constant() for k, c in self.terms.items())

    def as_scalar(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        c = self.terms.get(())
        return c.constant_term() if c is not None else Scalar()

    def log_names(self) -> set:
        return {n for key in self.terms for n, _ in key}

    def has_phantom_logs(self) -> bool:
        return bool(self.log_names() & set(self.chart.phantom))

    def log_degree(self, name: str) -> int:
        return max((dict(k).get(name, 0) for k in self.terms), default=0)

    # ------------------------------------------------------------ arithmetic
    def __eq__(self, other):
        if not isinstance(other, LogFunction):
            try:
                other = self._coerce(other)
            except (TypeError, ChartMismatch):
                return NotImplemented
        return self.chart == other.chart and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.chart, frozenset(self.terms.items())))
        return self._hash

    def __neg__(self):
        return LogFunction(self.chart, {k: -v for k, v in self.terms.items()}, _check=False)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            out[k] = v if s is None else s + v
        return LogFunction(self.chart, out, _check=False)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        from .logform import LogForm
        if isinstance(other, LogForm):
            return other.__rmul__(self)
        if isinstance(other, (Scalar, int)) or (not isinstance(other, (LogFunction, Coefficient)) and _is_number(other)):
            s = Scalar.const(other)
            return LogFunction(self.chart, {k: v * s for k, v in self.terms.items()}, _check=False)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = mono_mul(k1, k2)
                c = c1 * c2
                s = out.get(k)
                out[k] = c if s is None else s + c
        return LogFunction(self.chart, out, _check=False)

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = Scalar.const(other)
        return LogFunction(self.chart, {k: v / s for k, v in self.terms.items()}, _check=False)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of log functions are not supported")
        out = LogFunction.one(self.chart)
        for _ in range(n):
            out = out * self
        return out

    # -------------------------------------------------------------- calculus
    def d(self):
        """Exterior derivative: a degree-one :class:`LogForm`."""
        from .logform import LogForm
        chart = self.chart
        out: dict = {}

        def put(basis, key, c):
            if c.is_zero():
                return
            k = ((basis,), key)
            s = out.get(k)
            out[k] = c if s is None else s + c

        for key, c in self.terms.items():
            for name in chart.free:
                put(name, key, c.diff(name))
            for name in chart.basic:
                dc = c.diff(name)
                if not dc.is_zero():
                    put(name, key, dc * Coefficient.var(name))
            for name in chart.angular:
                put(name, key, c.diff(name))
            for name, e in key:
                put(name, mono_mul(key, ((name, -1),)), c * e)
        return LogForm(chart, out, _check=False)

    def map_coefficients(self, fn) -> "LogFunction":
        return LogFunction(self.chart, {k: fn(v) for k, v in self.terms.items()})

    def with_chart(self, chart: Chart, renames: dict | None = None) -> "LogFunction":
        """Re-home on another chart, renaming log coordinates."""
        renames = renames or {}
        out: dict = {}
        for key, c in self.terms.items():
            new = tuple(sorted((renames.get(n, n), e) for n, e in key))
            out[new] = out.get(new, Coefficient()) + c
        return LogFunction(chart, out)

    # -------------------------------------------------------------- numerics
    def evaluate(self, values: dict, params: dict | None = None):
        """Numeric value at an interior point (floats or numpy arrays)."""
        if self.has_phantom_logs():
            raise LeftoverPhantoms("phantom logarithms have no numeric value; apply a scale first")
        params = params or {}
        cache: dict = {}
        total = 0j
        for key, c in self.terms.items():
            term = c.evaluate(values, params, cache)
            for name, e in key:
                try:
                    v = np.asarray(values[name], dtype=float)
                except KeyError:
                    raise MissingAssignment(f"no value for coordinate {name!r}") from None
                if np.any(v <= 0):
                    raise ValueError(f"log({name}) evaluated at a boundary point")
                term = term * np.log(v) ** e
            total = total + term
        return total

    def __repr__(self):
        return f"LogFunction({self})"

    def __str__(self):
        from ..cli.render import render_logfunction
        return render_logfunction(self)


def _is_number(x) -> bool:
    from numbers import Number
    from ..symcore import GaussianRational, ParamFraction
    return isinstance(x, (Number, GaussianRational, ParamFraction))


def log_of(m: MonoidElement, chart: Chart) -> LogFunction:
    """Formal logarithm ``log(c sigma^E e^q r^J t^K)`` as a log function on ``chart``."""
    const = m.log_constant()
    terms: dict = {}
    c = m.exp_arg
    if not const.is_zero():
        c = c + Coefficient.const(const)
    if not c.is_zero():
        terms[()] = c
    for name, e in m.r_exp + m.t_exp:
        key = ((name, 1),)
        terms[key] = terms.get(key, Coefficient()) + Coefficient.const(e)
    return LogFunction(chart, terms)
