"""A small expression language for algebra elements and scalars.

Grammar, lowest to highest binding:

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' exponent)?
    exponent := ['-'] INT ('^' exponent)?  |  '(' exponent ')'
    atom   := INT | 'e' | 'f' | 'k' | 'q' | 's' | 'z' | '(' expr ')'

Multiplication is always explicit. Division needs a divisor that lowers to
a scalar. ``z`` is the primitive 4l-th root of unity and only exists over a
root-of-unity field; it lets the canonical scalar strings be read back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import pbw
from .pbw import AlgebraElement
from .scalars import ScalarField

SYMBOLS = ("e", "f", "k", "q", "s", "z")


class ParseError(ValueError):
    """Lexical, syntactic or lowering error at a byte offset of the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: int
    pos: int = 0


@dataclass(frozen=True)
class Symbol:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int = 0


@dataclass(frozen=True)
class Paren:
    inner: "Expr"
    pos: int = 0


Expr = Union[Literal, Symbol, Neg, Add, Sub, Mul, Div, Pow, Paren]


def strip_positions(node):
    """Same tree with every pos set to 0, for structural comparison."""
    if isinstance(node, (Literal, Symbol)):
        return type(node)(node.name if isinstance(node, Symbol) else node.value)
    if isinstance(node, (Neg, Paren)):
        return type(node)(strip_positions(node.operand if isinstance(node, Neg) else node.inner))
    if isinstance(node, Pow):
        return Pow(strip_positions(node.base), node.exponent)
    return type(node)(strip_positions(node.left), strip_positions(node.right))


# -- lexer -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    raw = text.encode("utf-8")
    if not raw.isascii():
        raise ParseError("non-ASCII input", next(i for i, b in enumerate(raw) if b > 127))
    tokens = []
    i = 0
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i == len(text):
            break
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        kind = m.lastgroup
        if kind == "name" and m.group(kind) not in SYMBOLS:
            raise ParseError(f"unknown symbol {m.group(kind)!r}", m.start(kind))
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        i = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def take(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise ParseError(f"expected {text!r}, found {self._describe()}", self.tok.pos)
        return self.take()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def parse(self) -> Expr:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()
            right = self.term()
            node = (Add if op.text == "+" else Sub)(node, right, op.pos)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()
            right = self.unary()
            node = (Mul if op.text == "*" else Div)(node, right, op.pos)
        return node

    def unary(self) -> Expr:
        if self.at("-"):
            op = self.take()
            return Neg(self.unary(), op.pos)
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at("^"):
            op = self.take()
            return Pow(base, self.exponent(), op.pos)
        return base

    def exponent(self) -> int:
        if self.at("("):
            self.take()
            n = self.exponent()
            self.expect(")")
        else:
            sign = 1
            if self.at("-"):
                self.take()
                sign = -1
            if self.tok.kind != "int":
                raise ParseError("non-integer exponent", self.tok.pos)
            n = sign * int(self.take().text)
        if self.at("^"):
            op = self.take()
            m = self.exponent()
            if m < 0:
                raise ParseError("non-integer exponent", op.pos)
            n = n**m
        return n

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "int":
            self.take()
            return Literal(int(t.text), t.pos)
        if t.kind == "name":
            self.take()
            return Symbol(t.text, t.pos)
        if self.at("("):
            self.take()
            inner = self.expr()
            self.expect(")")
            return Paren(inner, t.pos)
        raise ParseError(f"unexpected {self._describe()}", t.pos)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- lowering ----------------------------------------------------------------


def _symbol(field: ScalarField, node: Symbol) -> AlgebraElement:
    name = node.name
    if name in ("e", "f", "k"):
        return pbw.generator(name, field)
    if name == "q":
        return AlgebraElement.scalar(field, field.q)
    if name == "s":
        return AlgebraElement.scalar(field, field.q_half)
    if not field.is_root:
        raise ParseError("'z' is only defined at a root of unity", node.pos)
    return AlgebraElement.scalar(field, field.generator)


def _as_scalar(x: AlgebraElement):
    if not x:
        return x.field.zero
    return x.scalar_value() if x.is_scalar() else None


def _power(x: AlgebraElement, n: int, pos: int) -> AlgebraElement:
    if n >= 0:
        return x**n
    c = _as_scalar(x)
    if c is not None:
        if not c:
            raise ParseError("division by zero", pos)
        return AlgebraElement.scalar(x.field, c.inverse() ** (-n))
    if len(x) == 1:
        ((a, b, _), _v), = x.sorted_terms()
        if a == 0 and b == 0:
            return pbw.power(x, n)
    raise ParseError("negative power of an element involving e or f", pos)


def lower(node: Expr, field: ScalarField) -> AlgebraElement:
    """The PBW normal form of the element denoted by node."""
    if isinstance(node, Literal):
        return AlgebraElement.scalar(field, node.value)
    if isinstance(node, Symbol):
        return _symbol(field, node)
    if isinstance(node, Paren):
        return lower(node.inner, field)
    if isinstance(node, Neg):
        return -lower(node.operand, field)
    if isinstance(node, Pow):
        return _power(lower(node.base, field), node.exponent, node.pos)
    left, right = lower(node.left, field), lower(node.right, field)
    if isinstance(node, Add):
        return left + right
    if isinstance(node, Sub):
        return left - right
    if isinstance(node, Mul):
        return left * right
    c = _as_scalar(right)
    if c is None:
        raise ParseError("divisor is not a scalar", node.pos)
    if not c:
        raise ParseError("division by zero", node.pos)
    return left.scale(c.inverse())


def parse_element(text: str, field: ScalarField) -> AlgebraElement:
    return lower(parse(text), field)


def parse_scalar(text: str, field: ScalarField):
    """Read a scalar, e.g. a canonical string printed by the scalar types."""
    x = parse_element(text, field)
    c = _as_scalar(x)
    if c is None:
        raise ParseError("expected a scalar expression", 0)
    return c
