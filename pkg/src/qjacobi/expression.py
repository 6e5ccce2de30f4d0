"""Text grammar for Forms.

    expr    := signed (("+" | "-") signed)*
    signed  := "-" signed | "+" signed | product
    product := power ("*" power)*
    power   := atom ("^" ["-"] INTEGER)?
    atom    := RATIONAL | INTEGER | "c" | P | Pz | E4 | E1 | E2 | "(" expr ")"

``^`` binds tighter than ``*``, which binds tighter than unary minus, which
binds tighter than binary ``+``/``-``. Negative exponents are accepted only on
single c-power constants. ``format_form`` prints the canonical text that
``parse`` reads back.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from .exceptions import ExpressionError, ExpressionSyntaxError, UnknownIdentifierError
from .models.form import Form, Generator
from .models.scalar import Scalar

logger = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"\s*(?:(?P<rational>\d+/\d+)|(?P<integer>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


@dataclass(frozen=True)
class Number:
    value: Fraction

    def to_form(self) -> Form:
        return Form.constant(self.value)


@dataclass(frozen=True)
class Constant:
    """The formal constant c."""

    def to_form(self) -> Form:
        return Form.constant(Scalar.c_power(1))


@dataclass(frozen=True)
class Symbol:
    generator: Generator

    def to_form(self) -> Form:
        return Form.generator(self.generator)


@dataclass(frozen=True)
class Negate:
    operand: "Node"

    def to_form(self) -> Form:
        return -self.operand.to_form()


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "Node"
    right: "Node"

    def to_form(self) -> Form:
        left, right = self.left.to_form(), self.right.to_form()
        if self.op == "+":
            return left + right
        if self.op == "-":
            return left - right
        return left * right


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int
    position: int

    def to_form(self) -> Form:
        try:
            return self.base.to_form() ** self.exponent
        except (ValueError, ZeroDivisionError) as exc:
            raise ExpressionSyntaxError(
                f"negative exponent {self.exponent} needs a single c-power base",
                self.position,
            ) from exc


Node = Union[Number, Constant, Symbol, Negate, BinaryOp, Power]


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = len(text[position:]) - len(text[position:].lstrip())
            raise ExpressionSyntaxError(
                f"unexpected character {text[position + offset]!r}",
                position + offset,
                text,
            )
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _error(self, message: str, token: Optional[Token]) -> ExpressionSyntaxError:
        position = len(self.text) if token is None else token.position
        return ExpressionSyntaxError(message, position, self.text)

    def _accept(self, op: str) -> Optional[Token]:
        token = self._peek()
        if token is not None and token.kind == "op" and token.text == op:
            self.index += 1
            return token
        return None

    def _expect(self, op: str) -> Token:
        token = self._accept(op)
        if token is None:
            found = self._peek()
            what = "end of input" if found is None else repr(found.text)
            raise self._error(f"expected {op!r}, found {what}", found)
        return token

    def parse(self) -> Node:
        if not self.tokens:
            raise self._error("empty expression", None)
        node = self._expr()
        leftover = self._peek()
        if leftover is not None:
            raise self._error(f"unexpected {leftover.text!r}", leftover)
        return node

    def _expr(self) -> Node:
        node = self._signed()
        while True:
            token = self._accept("+") or self._accept("-")
            if token is None:
                return node
            node = BinaryOp(token.text, node, self._signed())

    def _signed(self) -> Node:
        if self._accept("-"):
            return Negate(self._signed())
        if self._accept("+"):
            return self._signed()
        return self._product()

    def _product(self) -> Node:
        node = self._power()
        while self._accept("*"):
            node = BinaryOp("*", node, self._power())
        return node

    def _power(self) -> Node:
        base = self._atom()
        caret = self._accept("^")
        if caret is None:
            return base
        negative = self._accept("-") is not None
        token = self._peek()
        if token is None or token.kind != "integer":
            raise self._error("exponent must be an integer", token)
        self.index += 1
        exponent = -int(token.text) if negative else int(token.text)
        following = self._peek()
        if following is not None and following.kind == "op" and following.text == "^":
            raise self._error("chained exponents need parentheses", following)
        return Power(base, exponent, caret.position)

    def _atom(self) -> Node:
        token = self._peek()
        if token is None:
            raise self._error("unexpected end of input", None)
        self.index += 1
        if token.kind == "integer":
            return Number(Fraction(int(token.text)))
        if token.kind == "rational":
            numerator, denominator = token.text.split("/")
            if int(denominator) == 0:
                raise self._error("zero denominator", token)
            return Number(Fraction(int(numerator), int(denominator)))
        if token.kind == "name":
            if token.text == "c":
                return Constant()
            try:
                return Symbol(Generator(token.text))
            except ValueError:
                raise UnknownIdentifierError(
                    f"unknown identifier {token.text!r}", token.position, self.text
                ) from None
        if token.text == "(":
            node = self._expr()
            self._expect(")")
            return node
        raise self._error(f"unexpected {token.text!r}", token)


def parse_tree(text: str) -> Node:
    return _Parser(text).parse()


def parse(text: str) -> Form:
    """Parse ``text`` into a canonical Form.

    Raises:
        ExpressionSyntaxError: If the text does not match the grammar.
        UnknownIdentifierError: If a name is not a generator or ``c``.
    """
    tree = parse_tree(text)
    try:
        form = tree.to_form()
    except ExpressionError as exc:
        if exc.text:
            raise
        raise type(exc)(str(exc), exc.position, text) from exc
    logger.debug(f"parsed {text!r} into {len(form)} terms")
    return form


def format_form(f: Form) -> str:
    return f.to_text()
