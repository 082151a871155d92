"""Sections of the positive log monoid of a chart."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotRepresentable
from ..symcore import Coefficient, ParamFraction, Scalar
from ..symcore.fraction import mono_mul, mono_pow


def _check_exp_arg(q: Coefficient):
    if not q.is_exp_free():
        raise NotRepresentable("exp-argument of a monoid element must be exp-free")
    if not q.constant_term().is_zero():
        raise NotRepresentable("exp-argument must have zero constant term")
    if not q.is_real():
        raise NotRepresentable("exp-argument of a positive function must be real")


@dataclass(frozen=True)
class MonoidElement:
    """``c * sigma^E * exp(q) * r^J * t^K`` with ``c`` a positive rational.

    ``q`` may involve free, basic and angular coordinates; angular
    dependence is how positive functions on circles are expressed.
    """

    coeff: Fraction = Fraction(1)
    sigma: tuple = ()
    exp_arg: Coefficient = Coefficient()
    r_exp: tuple = ()
    t_exp: tuple = ()

    def __post_init__(self):
        c = Fraction(self.coeff)
        if c <= 0:
            raise NotRepresentable(f"monoid constants must be positive, got {c}")
        object.__setattr__(self, "coeff", c)
        for attr in ("sigma", "r_exp", "t_exp"):
            raw = getattr(self, attr)
            raw = raw.items() if isinstance(raw, dict) else raw
            object.__setattr__(self, attr, tuple(sorted((n, int(e)) for n, e in raw if e)))
        for n, e in self.r_exp + self.t_exp:
            if e < 0:
                raise ValueError(f"negative exponent on {n}")
        _check_exp_arg(self.exp_arg)

    # ---------------------------------------------------------- construction
    @classmethod
    def constant(cls, value) -> "MonoidElement":
        """A positive constant: a rational, a parameter name, or a monomial Scalar."""
        if isinstance(value, MonoidElement):
            return value
        if isinstance(value, str):
            return cls(sigma=((value, 1),))
        if isinstance(value, Scalar):
            frac = value.as_fraction() if value.is_fraction() else None
            if frac is None or not frac.is_monomial():
                raise NotRepresentable(f"{value} is not a positive monomial constant")
            (mono, c), = frac.num.items()
            if not c.is_real() or c.real <= 0:
                raise NotRepresentable(f"{value} is not positive")
            return cls(coeff=c.real, sigma=mono)
        return cls(coeff=Fraction(value))

    @classmethod
    def coordinate(cls, name: str, phantom: bool = False, power: int = 1) -> "MonoidElement":
        if phantom:
            return cls(t_exp=((name, power),))
        return cls(r_exp=((name, power),))

    @classmethod
    def unit(cls, q: Coefficient, coeff=1, sigma=()) -> "MonoidElement":
        return cls(coeff=coeff, sigma=sigma, exp_arg=q)

    # ------------------------------------------------------------ predicates
    def is_phantom(self) -> bool:
        return bool(self.t_exp)

    def is_basic(self) -> bool:
        return not self.t_exp

    def is_unit(self) -> bool:
        return not self.t_exp and not self.r_exp

    def is_constant(self) -> bool:
        return self.is_unit() and self.exp_arg.is_zero()

    def coordinates(self) -> set:
        return {n for n, _ in self.r_exp} | {n for n, _ in self.t_exp} | self.exp_arg.coordinates()

    # ------------------------------------------------------------ arithmetic
    def __mul__(self, other: "MonoidElement") -> "MonoidElement":
        return MonoidElement(
            self.coeff * other.coeff,
            mono_mul(self.sigma, other.sigma),
            self.exp_arg + other.exp_arg,
            mono_mul(self.r_exp, other.r_exp),
            mono_mul(self.t_exp, other.t_exp),
        )

    def __pow__(self, n: int) -> "MonoidElement":
        if n < 0:
            raise ValueError("monoid elements have no negative powers")
        return MonoidElement(self.coeff ** n, mono_pow(self.sigma, n), self.exp_arg * n,
                             mono_pow(self.r_exp, n), mono_pow(self.t_exp, n))

    def constant_scalar(self) -> Scalar:
        return Scalar.const(ParamFraction.monomial(self.sigma, self.coeff))

    def log_constant(self) -> Scalar:
        """``log(c * sigma^E)`` as a Scalar."""
        out = Scalar.log_rational(self.coeff) if self.coeff != 1 else Scalar()
        for name, e in self.sigma:
            out = out + Scalar.log(name) * e
        return out

    def alpha(self) -> Coefficient:
        """The underlying function; phantom elements map to 0."""
        if self.t_exp:
            return Coefficient()
        out = Coefficient.const(self.constant_scalar())
        if not self.exp_arg.is_zero():
            out = out * Coefficient.exp(self.exp_arg)
        for name, e in self.r_exp:
            out = out * Coefficient.var(name, e)
        return out

    def restrict_basic(self, renames: dict) -> "MonoidElement":
        """Leading-monomial restriction to a face: ``r -> t`` for renamed ``r``.

        The unit factor is evaluated at ``r = 0`` for every renamed ``r``.
        """
        zero = {name: Coefficient() for name in renames}
        q = self.exp_arg.substitute(zero)
        r_exp = tuple((n, e) for n, e in self.r_exp if n not in renames)
        t_exp = mono_mul(self.t_exp, tuple(sorted((renames[n], e) for n, e in self.r_exp if n in renames)))
        return MonoidElement(self.coeff, self.sigma, q, r_exp, t_exp)

    def sort_key(self):
        return (self.coeff, self.sigma, self.exp_arg.sort_key(), self.r_exp, self.t_exp)

    def __str__(self):
        from ..cli.render import render_monoid
        return render_monoid(self)


ONE = MonoidElement()
