"""Expression grammar: tokenizer, AST and recursive-descent parser.

    sum     := wedge (("+" | "-") wedge)*
    wedge   := product (("^wedge" | "∧") product)*
    product := unary (("*" | "×" | "/") unary)*
    unary   := "-" unary | power
    power   := atom ("^" INT)?
    atom    := NUMBER | NAME | NAME "(" sum ")" | "(" sum ")"

Precedence is therefore ``^`` > ``*`` > wedge > ``+``/``-``.  Function
names are ``log``, ``exp``, ``dlog`` and ``d``; ``i`` and ``pi`` are
constants.  :func:`to_text` prints an AST so that it parses back to itself.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from ..errors import ParseError

FUNCTIONS = ("log", "exp", "dlog", "d")


@dataclass(frozen=True)
class Node:
    pos: int = field(default=0, compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Num(Node):
    value: Fraction


@dataclass(frozen=True)
class Name(Node):
    id: str


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str  # "+", "-", "*", "/", "wedge"
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


@dataclass(frozen=True)
class Call(Node):
    fn: str
    arg: Node


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<wedge>\^\s*wedge\b|∧)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()×])
""", re.VERBOSE)


def tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "op" and value == "×":
                value = "*"
            out.append((kind, value, pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self) -> Node:
        node = self.sum()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return node

    def sum(self) -> Node:
        node = self.wedge()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            _, op, pos = self.take()
            node = BinOp(op, node, self.wedge(), pos=pos)
        return node

    def wedge(self) -> Node:
        node = self.product()
        while self.peek()[0] == "wedge":
            _, _, pos = self.take()
            node = BinOp("wedge", node, self.product(), pos=pos)
        return node

    def product(self) -> Node:
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            node = BinOp(op, node, self.unary(), pos=pos)
        return node

    def unary(self) -> Node:
        kind, v, pos = self.peek()
        if kind == "op" and v == "-":
            self.take()
            return Neg(self.unary(), pos=pos)
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        kind, v, pos = self.peek()
        if kind == "op" and v == "^":
            self.take()
            kind, v, epos = self.take()
            if kind != "num" or "." in v:
                raise ParseError("exponent must be a nonnegative integer", epos)
            return Pow(base, int(v), pos=pos)
        return base

    def atom(self) -> Node:
        kind, v, pos = self.take()
        if kind == "num":
            return Num(Fraction(Decimal(v)), pos=pos)
        if kind == "name":
            if self.peek()[1] == "(":
                if v not in FUNCTIONS:
                    raise ParseError(f"unknown function {v!r}", pos)
                self.take()
                arg = self.sum()
                self.expect(")")
                return Call(v, arg, pos=pos)
            if v in FUNCTIONS:
                raise ParseError(f"function {v!r} needs an argument", pos)
            return Name(v, pos=pos)
        if v == "(":
            node = self.sum()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def parse(text: str) -> Node:
    return Parser(text).parse()


# ------------------------------------------------------------------ printing
_PREC = {"+": 1, "-": 1, "wedge": 2, "*": 3, "/": 3}


def _num_text(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    while d % 2 == 0 or d % 5 == 0:
        d //= 2 if d % 2 == 0 else 5
    if d != 1:
        raise ValueError(f"{q} has no terminating decimal form")
    return f"{Decimal(q.numerator) / Decimal(q.denominator):f}"


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 4
    if isinstance(node, Pow):
        return 5
    return 6


def to_text(node: Node) -> str:
    if isinstance(node, Num):
        if node.value < 0:
            raise ValueError("negative literals are written with unary minus")
        return _num_text(node.value)
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Call):
        return f"{node.fn}({to_text(node.arg)})"
    if isinstance(node, Pow):
        base = to_text(node.base)
        if _prec(node.base) <= 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Neg):
        arg = to_text(node.arg)
        if _prec(node.arg) < 4:
            arg = f"({arg})"
        return f"-{arg}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        left, right = to_text(node.left), to_text(node.right)
        if _prec(node.left) < p:
            left = f"({left})"
        # operators are left associative: equal precedence on the right needs parens
        if _prec(node.right) <= p:
            right = f"({right})"
        if node.op == "wedge":
            return f"{left} ^wedge {right}"
        if node.op in ("+", "-"):
            return f"{left} {node.op} {right}"
        return f"{left}{node.op}{right}"
    raise TypeError(f"not an AST node: {node!r}")
