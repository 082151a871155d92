"""Typing and evaluation of expression ASTs on a chart.

Names resolve in this order: chart coordinates, the shorthand ``dNAME``
for the differential of a basic, angular or free coordinate ``NAME`` (for
basic ``r`` this is ``r*dlog(r)``), the constants ``i``
and ``pi``, and finally positive parameters.  ``log`` and ``dlog`` accept
only monoid expressions (products and powers of basic or phantom
coordinates, positive constants and ``exp`` of real functions); ``exp``
splits its argument into Fourier modes ``i*n*theta`` and a real-analytic
exponent without constant term.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import ExpressionTypeError, NotRepresentable
from ..geometry.chart import Chart
from ..geometry.monoid import MonoidElement
from ..logforms.logform import LogForm
from ..logforms.logfunction import LogFunction, log_of
from ..symcore import Coefficient, Scalar
from .grammar import BinOp, Call, Name, Neg, Node, Num, Pow, parse

RESERVED = ("i", "pi")


class Builder:
    def __init__(self, chart: Chart):
        self.chart = chart

    # ------------------------------------------------------------ helpers
    def _err(self, message, path):
        raise ExpressionTypeError(message, path)

    def _basis_name(self, name: str):
        if name in self.chart.coordinates():
            return None
        if name.startswith("d") and name[1:] in self.chart.angular + self.chart.free + self.chart.basic:
            return name[1:]
        return None

    # ------------------------------------------------------------- values
    def value(self, node: Node, path=("root",)):
        """A :class:`LogFunction` or :class:`LogForm`."""
        if isinstance(node, Num):
            return LogFunction.const(self.chart, node.value)
        if isinstance(node, Name):
            return self._name(node, path)
        if isinstance(node, Neg):
            return -self.value(node.arg, path + ("neg",))
        if isinstance(node, Pow):
            base = self.value(node.base, path + ("pow",))
            if isinstance(base, LogForm):
                if base.degrees() - {0}:
                    self._err("powers of forms of positive degree are not defined; use ^wedge", path)
                base = base.as_function()
            return base ** node.exponent
        if isinstance(node, BinOp):
            return self._binop(node, path)
        if isinstance(node, Call):
            return self._call(node, path)
        self._err(f"unknown node {node!r}", path)

    def _name(self, node: Name, path):
        name = node.id
        kind = self.chart.kind(name) if name in self.chart.coordinates() else None
        if kind in ("basic", "free"):
            return LogFunction.var(self.chart, name)
        if kind == "phantom":
            self._err(f"phantom coordinate {name} is not a function; use log({name}) or dlog({name})", path)
        if kind == "angular":
            self._err(f"angle {name} is not single valued; use exp(i*{name}) or d({name})", path)
        basis = self._basis_name(name)
        if basis is not None:
            if basis in self.chart.basic:
                return LogForm.dr(self.chart, basis)
            return LogForm.basis(self.chart, basis)
        if name == "i":
            return LogFunction.const(self.chart, Scalar.i())
        if name == "pi":
            return LogFunction.const(self.chart, Scalar.pi())
        return LogFunction.const(self.chart, Scalar.param(name))

    def _binop(self, node: BinOp, path):
        left = self.value(node.left, path + (f"{node.op}.left",))
        right = self.value(node.right, path + (f"{node.op}.right",))
        if node.op == "+":
            return _add(left, right)
        if node.op == "-":
            return _add(left, -right)
        if node.op == "wedge":
            return _as_form(left).wedge(_as_form(right))
        if node.op == "*":
            if isinstance(left, LogForm) and isinstance(right, LogForm):
                if (left.degrees() - {0}) and (right.degrees() - {0}):
                    self._err("product of two forms of positive degree; use ^wedge", path)
                return _as_form(left).wedge(_as_form(right))
            if isinstance(left, LogForm):
                return left * right
            return right * left if isinstance(right, LogForm) else left * right
        if node.op == "/":
            s = self._scalar_of(right, path + ("/.right",))
            if s.is_zero():
                self._err("division by zero", path)
            return left * (Scalar.one() / s)
        self._err(f"unknown operator {node.op}", path)

    def _scalar_of(self, v, path) -> Scalar:
        f = v.as_function() if isinstance(v, LogForm) and not (v.degrees() - {0}) else v
        if isinstance(f, LogFunction) and f.is_constant():
            return f.as_scalar()
        self._err("only division by a constant is supported", path)

    def _call(self, node: Call, path):
        p = path + (node.fn,)
        if node.fn == "log":
            return log_of(self.monoid(node.arg, p), self.chart)
        if node.fn == "dlog":
            return log_of(self.monoid(node.arg, p), self.chart).d()
        if node.fn == "d":
            arg = node.arg
            if isinstance(arg, Name) and arg.id in self.chart.angular:
                return LogForm.basis(self.chart, arg.id)
            return self.value(arg, p).d()
        if node.fn == "exp":
            return LogFunction.coefficient(self.chart, self.exp_coefficient(node.arg, p))
        self._err(f"unknown function {node.fn}", path)

    # ----------------------------------------------------------- exponents
    def _linear(self, node: Node, path):
        """``(Coefficient, {theta: Scalar})`` for an exponent; angles enter linearly."""
        if isinstance(node, Name) and node.id in self.chart.angular:
            return Coefficient(), {node.id: Scalar.one()}
        if isinstance(node, Neg):
            c, th = self._linear(node.arg, path + ("neg",))
            return -c, {k: -v for k, v in th.items()}
        if isinstance(node, BinOp) and node.op in ("+", "-"):
            c1, t1 = self._linear(node.left, path + (f"{node.op}.left",))
            c2, t2 = self._linear(node.right, path + (f"{node.op}.right",))
            sgn = 1 if node.op == "+" else -1
            th = dict(t1)
            for k, v in t2.items():
                th[k] = th.get(k, Scalar()) + v * sgn
            return c1 + c2 * sgn, th
        if isinstance(node, BinOp) and node.op in ("*", "/"):
            c1, t1 = self._linear(node.left, path + (f"{node.op}.left",))
            c2, t2 = self._linear(node.right, path + (f"{node.op}.right",))
            if node.op == "/":
                if t2 or not c2.is_constant():
                    self._err("exponent divides by a non-constant", path)
                s = c2.constant_term()
                if s.is_zero():
                    self._err("division by zero", path)
                inv = Scalar.one() / s
                return c1 * inv, {k: v * inv for k, v in t1.items()}
            if t1 and t2:
                self._err("angles must enter the exponent linearly", path)
            if t1 or t2:
                th, c = (t1, c2) if t1 else (t2, c1)
                other_c = c1 if t1 else c2
                if not c.is_constant():
                    self._err("angles may only be multiplied by constants", path)
                s = c.constant_term()
                return other_c * s, {k: v * s for k, v in th.items()}
            return c1 * c2, {}
        v = self.value(node, path)
        if isinstance(v, LogForm):
            self._err("exp of a form", path)
        if set(v.terms) - {()}:
            self._err("exp of a logarithm is not supported; write the power instead", path)
        return v.terms.get((), Coefficient()), {}

    def exp_coefficient(self, node: Node, path) -> Coefficient:
        c, th = self._linear(node, path)
        out = Coefficient.one()
        for name, s in th.items():
            if s.is_zero():
                continue
            n = s / Scalar.i()
            g = n.as_fraction().num.get(()) if n.is_rational_constant() else None
            if g is None or g.imag != 0 or Fraction(g.real).denominator != 1:
                self._err(f"exp needs i*n*{name} with integer n", path)
            out = out * Coefficient.fourier(name, int(g.real))
        const = c.constant_term() if c.is_exp_free() else None
        if const is not None and not const.is_zero():
            self._err(f"exp of the constant {const} is not an exact scalar", path)
        try:
            return out * Coefficient.exp(c)
        except NotRepresentable as exc:
            self._err(str(exc), path)

    # ------------------------------------------------------------- monoids
    def monoid(self, node: Node, path=("root",)) -> MonoidElement:
        if isinstance(node, Num):
            if node.value <= 0:
                self._err("log of a nonpositive number", path)
            return MonoidElement.constant(node.value)
        if isinstance(node, Name):
            name = node.id
            if name in self.chart.coordinates():
                kind = self.chart.kind(name)
                if kind == "basic":
                    return MonoidElement.coordinate(name)
                if kind == "phantom":
                    return MonoidElement.coordinate(name, phantom=True)
                self._err(f"{kind} coordinate {name} is not a monoid element", path)
            if name in RESERVED or self._basis_name(name):
                self._err(f"{name} is not a positive monoid element", path)
            return MonoidElement.constant(name)
        if isinstance(node, BinOp) and node.op == "*":
            return self.monoid(node.left, path + ("*.left",)) * self.monoid(node.right, path + ("*.right",))
        if isinstance(node, BinOp) and node.op == "/":
            num = self.monoid(node.left, path + ("/.left",))
            den = self.monoid(node.right, path + ("/.right",))
            if not den.is_constant():
                self._err("monoid elements can only be divided by constants", path)
            return num * MonoidElement(1 / den.coeff, tuple((n, -e) for n, e in den.sigma))
        if isinstance(node, Pow):
            return self.monoid(node.base, path + ("pow",)) ** node.exponent
        if isinstance(node, Call) and node.fn == "exp":
            c = self.exp_coefficient(node.arg, path + ("exp",))
            if c.is_constant():
                return MonoidElement()
            if len(c.terms) != 1:
                self._err("exp argument is not real", path)
            ((q, mono, four), s), = c.terms.items()
            if mono or four or s != Scalar.one():
                self._err("exp argument is not real", path)
            try:
                return MonoidElement.unit(q)
            except (NotRepresentable, ValueError) as exc:
                self._err(str(exc), path)
        self._err("not a monoid element (a product of coordinates, positive constants and exp)", path)


def _as_form(v) -> LogForm:
    return v if isinstance(v, LogForm) else LogForm.from_function(v)


def _add(a, b):
    if isinstance(a, LogForm) or isinstance(b, LogForm):
        return _as_form(a) + _as_form(b)
    return a + b


def build(text_or_node, chart: Chart):
    node = parse(text_or_node) if isinstance(text_or_node, str) else text_or_node
    return Builder(chart).value(node)


def build_form(text, chart: Chart) -> LogForm:
    return _as_form(build(text, chart))


def build_function(text, chart: Chart) -> LogFunction:
    v = build(text, chart)
    if isinstance(v, LogForm):
        if v.degrees() - {0}:
            raise ExpressionTypeError("expected a function, got a form of positive degree", ("root",))
        return v.as_function()
    return v


def build_monoid(text, chart: Chart) -> MonoidElement:
    node = parse(text) if isinstance(text, str) else text
    return Builder(chart).monoid(node)


def build_scalar(text, chart: Chart | None = None) -> Scalar:
    f = build_function(text, chart or Chart())
    if not f.is_constant():
        raise ExpressionTypeError("expected a constant", ("root",))
    return f.as_scalar()
