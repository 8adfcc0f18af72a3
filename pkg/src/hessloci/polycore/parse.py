"""Text grammar for polynomials.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := NUMBER ['/' NUMBER] | 'x' DIGIT | '(' expr ')'

Whitespace is ignored; there is no implicit multiplication. The Unicode
minus sign is accepted as ``-``.
"""
from __future__ import annotations

from fractions import Fraction

from .fields import QQ, Field
from .poly import Polynomial


class PolySyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, nvars: int, field: Field):
        self.text = text.replace("−", "-")
        self.nvars = nvars
        self.field = field
        self.pos = 0

    def error(self, msg: str):
        raise PolySyntaxError(msg, self.pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Polynomial:
        result = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return result

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        result = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek() == "*":
            self.pos += 1
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            base = base ** self.integer()
        return base

    def atom(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch == "x":
            start = self.pos
            self.pos += 1
            if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                self.error("expected variable index after 'x'")
            idx = int(self.text[self.pos])
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos = start
                self.error("variable index must be a single digit")
            if idx >= self.nvars:
                self.pos = start
                self.error(f"variable x{idx} out of range for {self.nvars} variables")
            return Polynomial.var(idx, self.nvars, self.field)
        if ch.isdigit():
            value = Fraction(self.integer())
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                value /= den
            return Polynomial.constant(value, self.nvars, self.field)
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")


def poly_parse(text: str, nvars: int, field: Field = QQ) -> Polynomial:
    """Parse ``text`` into a polynomial in ``x0..x{nvars-1}`` over ``field``."""
    if not 1 <= nvars <= 10:
        raise ValueError("nvars must be between 1 and 10")
    return _Parser(text, nvars, field).parse()
