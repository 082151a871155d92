"""Gaussian rationals, i.e. elements ``(a + b i) / d`` of Q(i)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational


class GaussianRational:
    """Exact element of Q(i), stored as integers ``(a, b, d)`` with ``d > 0``.

    The triple is always reduced, so structural equality is value equality.
    """

    __slots__ = ("a", "b", "d", "_hash")

    def __init__(self, a=0, b=0, d=1):
        if d == 0:
            raise ZeroDivisionError("denominator is zero")
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        self.a = a
        self.b = b
        self.d = d
        self._hash = None

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, bool):
            return cls(int(value))
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Rational):
            return cls(value.numerator, 0, value.denominator)
        if isinstance(value, complex):
            re, im = Fraction(value.real), Fraction(value.imag)
            den = re.denominator * im.denominator
            return cls(int(re * den), int(im * den), den)
        if isinstance(value, float):
            f = Fraction(value)
            return cls(f.numerator, 0, f.denominator)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @property
    def real(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0 and self.d == 1

    def is_real(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self._hash is None:
            if self.b == 0:
                # agree with hash(Fraction) / hash(int) for real values
                self._hash = hash(Fraction(self.a, self.d))
            else:
                self._hash = hash((self.a, self.b, self.d))
        return self._hash

    def __neg__(self):
        return GaussianRational(-self.a, -self.b, self.d)

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if self.d == other.d:
            return GaussianRational(self.a + other.a, self.b + other.b, self.d)
        return GaussianRational(self.a * other.d + other.a * self.d,
                                self.b * other.d + other.b * self.d,
                                self.d * other.d)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational(self.a * other.a - self.b * other.b,
                                self.a * other.b + self.b * other.a,
                                self.d * other.d)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """|z|^2 as a rational."""
        return Fraction(self.a * self.a + self.b * self.b, self.d * self.d)

    def inverse(self) -> "GaussianRational":
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        # (a + bi)/d inverse = d (a - bi) / (a^2 + b^2)
        return GaussianRational(self.d * self.a, -self.d * self.b, n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __complex__(self):
        return complex(self.a / self.d, self.b / self.d)

    def sort_key(self):
        return (Fraction(self.a, self.d), Fraction(self.b, self.d))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        re, im = self.real, self.imag
        if im == 0:
            return str(re)
        if re == 0:
            if im == 1:
                return "i"
            if im == -1:
                return "-i"
            return f"{im}*i"
        sign = "+" if im > 0 else "-"
        mag = abs(im)
        return f"{re}{sign}{'' if mag == 1 else str(mag) + '*'}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
