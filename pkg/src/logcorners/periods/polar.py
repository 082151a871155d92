"""Finite-order polar expansions of rational functions of ``(z, zbar)``.

Around a puncture ``p`` we use ``z = p + r e^{i th}``; around infinity
``1/z = r e^{i th}``.  A :class:`PolarSeries` is a finite Laurent sum of
``r^m e^{i n th} log^k r`` that is exact modulo ``O(r^(order+1))``; products
track the order through the valuations of the factors, so a result is
known to be exact in degree ``r^0`` whenever its order is nonnegative.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import MathDomainError, NotRepresentable
from ..geometry.chart import Chart
from ..geometry.monoid import MonoidElement
from ..logforms.logform import LogForm
from ..logforms.logfunction import LogFunction
from ..symcore import Coefficient, Scalar

INF = "inf"
EXACT = 10 ** 9  # order of a series with no truncation

# (r, theta) chart used for every local expansion
POLAR = Chart((), ("r",), (), ("th",))


def as_point(value):
    """A puncture: ``"inf"``, a parameter name, a number or a Scalar."""
    if isinstance(value, str):
        if value in (INF, "oo", "infinity"):
            return INF
        return Scalar.param(value)
    return Scalar.const(value)


def log_abs(s: Scalar) -> Scalar:
    """``log |s|`` for a real monomial constant ``s``."""
    for v in (s, -s):
        try:
            return MonoidElement.constant(v).log_constant()
        except NotRepresentable:
            continue
    raise NotRepresentable(f"log|{s}| is not expressible in parameter and prime logarithms")


@dataclass
class PolarSeries:
    terms: dict = field(default_factory=dict)  # (m, n, k) -> Scalar
    order: int = EXACT

    def __post_init__(self):
        self.terms = {key: v for key, v in self.terms.items() if not v.is_zero() and key[0] <= self.order}

    @classmethod
    def const(cls, s) -> "PolarSeries":
        return cls({(0, 0, 0): Scalar.const(s)})

    def valuation(self) -> int:
        return min((m for m, _, _ in self.terms), default=EXACT)

    def __add__(self, other: "PolarSeries") -> "PolarSeries":
        out = dict(self.terms)
        for key, v in other.terms.items():
            out[key] = out[key] + v if key in out else v
        return PolarSeries(out, min(self.order, other.order))

    def __neg__(self):
        return PolarSeries({k: -v for k, v in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "PolarSeries":
        if not isinstance(other, PolarSeries):
            return PolarSeries({k: v * Scalar.const(other) for k, v in self.terms.items()}, self.order)
        order = min(self.order + other.valuation(), other.order + self.valuation(), EXACT)
        out: dict = {}
        for (m1, n1, k1), v1 in self.terms.items():
            for (m2, n2, k2), v2 in other.terms.items():
                if m1 + m2 > order:
                    continue
                key = (m1 + m2, n1 + n2, k1 + k2)
                out[key] = out[key] + v1 * v2 if key in out else v1 * v2
        return PolarSeries(out, order)

    __rmul__ = __mul__

    def conjugate(self) -> "PolarSeries":
        return PolarSeries({(m, -n, k): v.conjugate() for (m, n, k), v in self.terms.items()}, self.order)

    def to_function(self) -> LogFunction:
        if self.order < 0:
            raise MathDomainError("expansion order too low to fix the r^0 terms")
        out: dict = {}
        for (m, n, k), v in self.terms.items():
            if m < 0:
                raise MathDomainError(f"r^{m} pole: not a logarithmic expression")
            c = Coefficient.var("r", m) * Coefficient.fourier("th", n) * v
            key = (("r", k),) if k else ()
            out[key] = out[key] + c if key in out else c
        return LogFunction(POLAR, out)


@dataclass
class PolarForm:
    """``A dlog r + B dth`` with polar series ``A`` and ``B``."""

    dlog_r: PolarSeries
    d_th: PolarSeries

    def __add__(self, other):
        return PolarForm(self.dlog_r + other.dlog_r, self.d_th + other.d_th)

    def __neg__(self):
        return PolarForm(-self.dlog_r, -self.d_th)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, f):
        return PolarForm(self.dlog_r * f, self.d_th * f)

    __rmul__ = __mul__

    def conjugate(self):
        return PolarForm(self.dlog_r.conjugate(), self.d_th.conjugate())

    def to_form(self) -> LogForm:
        return (LogForm.basis(POLAR, "r") * self.dlog_r.to_function()
                + LogForm.basis(POLAR, "th") * self.d_th.to_function())


class Expander:
    """Local polar expansions at ``point`` truncated at ``r^order``."""

    def __init__(self, point, order: int):
        if order < 1:
            raise ValueError("expansion order must be at least 1")
        self.point = as_point(point)
        self.order = order
        self.at_infinity = self.point == INF

    def _mono(self, m: int, n: int, s=1, k: int = 0) -> PolarSeries:
        return PolarSeries({(m, n, k): Scalar.const(s)})

    def z(self) -> PolarSeries:
        if self.at_infinity:
            return self._mono(-1, -1)
        return PolarSeries.const(self.point) + self._mono(1, 1)

    def zbar(self) -> PolarSeries:
        return self.z().conjugate()

    def inv(self, q) -> PolarSeries:
        """``1/(z - q)``."""
        q = as_point(q)
        if q == INF:
            raise MathDomainError("1/(z - inf) is not defined")
        if self.at_infinity:
            # w / (1 - q w) = sum q^n w^(n+1)
            terms = {(n + 1, n + 1, 0): q ** n for n in range(self.order)}
            return PolarSeries(terms, EXACT if q.is_zero() else self.order)
        c = self.point - q
        if c.is_zero():
            return self._mono(-1, -1)
        terms = {(n, n, 0): Scalar.const(-1) ** n / c ** (n + 1) for n in range(self.order + 1)}
        return PolarSeries(terms, self.order)

    def log_abs_sq(self, q) -> PolarSeries:
        """``log |z - q|^2``."""
        q = as_point(q)
        if q == INF:
            raise MathDomainError("log|z - inf| is not defined")
        if self.at_infinity:
            # -2 log r + log|1 - q w|^2
            out = self._mono(0, 0, -2, 1)
            if q.is_zero():
                return out
            tail = PolarSeries({(n, n, 0): -(q ** n) / n for n in range(1, self.order + 1)}, self.order)
            return out + tail + tail.conjugate()
        c = self.point - q
        if c.is_zero():
            return self._mono(0, 0, 2, 1)
        head = PolarSeries.const(log_abs(c) * 2)
        tail = PolarSeries({(n, n, 0): Scalar.const(Fraction((-1) ** (n + 1), n)) / c ** n
                            for n in range(1, self.order + 1)}, self.order)
        return head + tail + tail.conjugate()

    def dz(self) -> PolarForm:
        """``dz = z'(r, th) (dlog r + i dth)`` in the local coordinate."""
        if self.at_infinity:
            f = self._mono(-1, -1, -1)
        else:
            f = self._mono(1, 1)
        return PolarForm(f, f * Scalar.i())

    def dzbar(self) -> PolarForm:
        return self.dz().conjugate()

    def dlog(self, q) -> PolarForm:
        """``dz / (z - q)``."""
        return self.dz() * self.inv(q)
