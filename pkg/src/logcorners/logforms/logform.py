"""Logarithmic differential forms.

The basis one-forms are ``dx`` (free), ``dlog r`` (basic), ``dlog t``
(phantom) and ``dtheta`` (angular), each named by its coordinate.  A wedge
monomial is a tuple of coordinate names sorted by chart position; terms are
stored flat as ``(basis, log key) -> Coefficient``.  ``dr`` is written
``r * dlog r``.
"""
from __future__ import annotations

from ..errors import ChartMismatch, UnknownCoordinate
from ..geometry.chart import Chart
from ..symcore import Coefficient, Scalar
from ..symcore.fraction import mono_mul
from .logfunction import LogFunction, _canonical_keys, _is_number


def merge_basis(chart: Chart, a: tuple, b: tuple):
    """``(sign, basis)`` for the wedge of two sorted basis tuples, or ``None``."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a) & set(b):
        return None
    idx = chart.index
    ia = [idx(n) for n in a]
    ib = [idx(n) for n in b]
    inversions = sum(1 for x in ia for y in ib if x > y)
    merged = tuple(sorted(a + b, key=idx))
    return (-1 if inversions % 2 else 1), merged


def sort_basis(chart: Chart, names) -> tuple:
    """``(sign, sorted tuple)`` for an arbitrary ordering; ``(0, ())`` on repeats."""
    names = list(names)
    if len(set(names)) != len(names):
        return 0, ()
    idx = [chart.index(n) for n in names]
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(names, key=chart.index))


class LogForm:
    __slots__ = ("chart", "terms", "_hash")

    def __init__(self, chart: Chart, terms=None, _check=True):
        self.chart = chart
        terms = {} if terms is None else {k: v for k, v in terms.items() if not v.is_zero()}
        if _check:
            terms = _canonical_keys(terms, lambda k: k[1], lambda k, key: (k[0], key))
            coords = set(chart.coordinates())
            for (basis, key), c in terms.items():
                if not set(basis) <= coords:
                    raise UnknownCoordinate(f"basis {basis} not in {chart}")
                if tuple(sorted(basis, key=chart.index)) != basis or len(set(basis)) != len(basis):
                    raise ValueError(f"basis {basis} is not in canonical order")
            LogFunction(chart, {key: c for (basis, key), c in terms.items()})
        self.terms = terms
        self._hash = None

    # ---------------------------------------------------------- construction
    @classmethod
    def zero(cls, chart: Chart) -> "LogForm":
        return cls(chart)

    @classmethod
    def from_function(cls, f: LogFunction) -> "LogForm":
        return cls(f.chart, {((), k): c for k, c in f.terms.items()}, _check=False)

    @classmethod
    def basis(cls, chart: Chart, *names) -> "LogForm":
        """Wedge of basis one-forms in the given order (with sign)."""
        sign, basis = sort_basis(chart, names)
        if sign == 0:
            return cls(chart)
        return cls(chart, {(basis, ()): Coefficient.const(sign)})

    @classmethod
    def dr(cls, chart: Chart, name: str) -> "LogForm":
        """``d r = r dlog r`` for a basic coordinate."""
        if chart.kind(name) != "basic":
            raise UnknownCoordinate(f"{name} is not basic")
        return cls(chart, {((name,), ()): Coefficient.var(name)})

    def _coerce(self, other) -> "LogForm":
        if isinstance(other, LogForm):
            self.chart.require_same(other.chart)
            return other
        if isinstance(other, LogFunction):
            self.chart.require_same(other.chart)
            return LogForm.from_function(other)
        if isinstance(other, Coefficient):
            return LogForm(self.chart, {((), ()): other})
        return LogForm(self.chart, {((), ()): Coefficient.const(other)}, _check=False)

    # ------------------------------------------------------------ predicates
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {len(b) for b, _ in self.terms}

    @property
    def degree(self) -> int:
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"form is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def homogeneous_part(self, k: int) -> "LogForm":
        return LogForm(self.chart, {bk: c for bk, c in self.terms.items() if len(bk[0]) == k}, _check=False)

    def bases(self) -> set:
        return {b for b, _ in self.terms}

    def component(self, basis) -> LogFunction:
        basis = tuple(basis)
        return LogFunction(self.chart, {k: c for (b, k), c in self.terms.items() if b == basis}, _check=False)

    def components(self) -> dict:
        out: dict = {}
        for (b, k), c in self.terms.items():
            out.setdefault(b, {})[k] = c
        return {b: LogFunction(self.chart, t, _check=False) for b, t in out.items()}

    def as_function(self) -> LogFunction:
        if any(b for b, _ in self.terms):
            raise ValueError("form has positive degree")
        return self.component(())

    def log_names(self) -> set:
        return {n for (_, k) in self.terms for n, _ in k}

    def has_phantom_logs(self) -> bool:
        return bool(self.log_names() & set(self.chart.phantom))

    def has_phantom_content(self) -> bool:
        ph = set(self.chart.phantom)
        return bool(self.log_names() & ph) or any(set(b) & ph for b, _ in self.terms)

    # ------------------------------------------------------------ arithmetic
    def __eq__(self, other):
        if not isinstance(other, LogForm):
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
        return LogForm(self.chart, {k: -v for k, v in self.terms.items()}, _check=False)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            out[k] = v if s is None else s + v
        return LogForm(self.chart, out, _check=False)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def _scale(self, s: Scalar) -> "LogForm":
        return LogForm(self.chart, {k: v * s for k, v in self.terms.items()}, _check=False)

    def __mul__(self, other):
        """Multiplication by functions and constants (a degree-zero wedge)."""
        if isinstance(other, Scalar) or (not isinstance(other, (LogForm, LogFunction, Coefficient)) and _is_number(other)):
            return self._scale(Scalar.const(other))
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if any(b for b, _ in other.terms):
            raise TypeError("use wedge() to multiply forms of positive degree")
        return self.wedge(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        s = Scalar.const(other)
        return LogForm(self.chart, {k: v / s for k, v in self.terms.items()}, _check=False)

    def wedge(self, other) -> "LogForm":
        other = self._coerce(other)
        chart = self.chart
        out: dict = {}
        merged_cache: dict = {}
        for (b1, k1), c1 in self.terms.items():
            for (b2, k2), c2 in other.terms.items():
                mk = (b1, b2)
                if mk not in merged_cache:
                    merged_cache[mk] = merge_basis(chart, b1, b2)
                m = merged_cache[mk]
                if m is None:
                    continue
                sign, b = m
                c = c1 * c2
                if sign < 0:
                    c = -c
                key = (b, mono_mul(k1, k2))
                s = out.get(key)
                out[key] = c if s is None else s + c
        return LogForm(chart, out, _check=False)

    __xor__ = wedge

    # -------------------------------------------------------------- calculus
    def d(self) -> "LogForm":
        chart = self.chart
        out: dict = {}
        for (basis, key), c in self.terms.items():
            df = LogFunction(chart, {key: c}, _check=False).d()
            for ((e,), k2), c2 in df.terms.items():
                m = merge_basis(chart, (e,), basis)
                if m is None:
                    continue
                sign, b = m
                kk = (b, k2)
                v = c2 if sign > 0 else -c2
                s = out.get(kk)
                out[kk] = v if s is None else s + v
        return LogForm(chart, out, _check=False)

    def map_coefficients(self, fn) -> "LogForm":
        return LogForm(self.chart, {k: fn(v) for k, v in self.terms.items()})

    def evaluate(self, values: dict, params: dict | None = None) -> dict:
        """Numeric component functions ``basis -> value``."""
        return {b: f.evaluate(values, params) for b, f in self.components().items()}

    def __repr__(self):
        return f"LogForm({self})"

    def __str__(self):
        from ..cli.render import render_logform
        return render_logform(self)


def as_form(obj) -> LogForm:
    return obj if isinstance(obj, LogForm) else LogForm.from_function(obj)


def wedge(a, b) -> LogForm:
    return as_form(a).wedge(b)


def d(obj) -> LogForm:
    return obj.d()
