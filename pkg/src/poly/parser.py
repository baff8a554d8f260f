"""
Polynomial text grammar: parsing and printing

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' posint]
    atom   := int ['/' int] | ident | '(' expr ')'

Whitespace is ignored; multiplication is always explicit.
"""

import re
from dataclasses import dataclass

from sympy.polys.rings import PolyElement, PolyRing

from ..errors import ParseError
from .fields import FieldSpec

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^(),]))")
IDENT_RE = re.compile(r"^[A-Za-z][A-Za-z0-9]*$")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op", "end"
    text: str
    column: int  # 1-based


def tokenize(text: str, line: int | None = None) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", line=line, column=bad + 1)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start + 1))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing, field: FieldSpec, line: int | None):
        self.tokens = tokenize(text, line)
        self.index = 0
        self.ring = ring
        self.field = field
        self.line = line
        self.names = {str(symbol): i for i, symbol in enumerate(ring.symbols)}

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def error(self, message: str, token: Token | None = None):
        token = token or self.current
        raise ParseError(message, line=self.line, column=token.column)

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def parse(self) -> PolyElement:
        if self.current.kind == "end":
            self.error("empty polynomial")
        result = self.expr()
        if self.current.kind != "end":
            self.error(f"unexpected {self.current.text!r}")
        return result

    def expr(self) -> PolyElement:
        if self.accept("-"):
            result = -self.term()
        else:
            self.accept("+")
            result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> PolyElement:
        result = self.factor()
        while self.accept("*"):
            result = result * self.factor()
        return result

    def factor(self) -> PolyElement:
        base = self.atom()
        if self.accept("^"):
            token = self.current
            if token.kind != "int":
                self.error("exponent must be a positive integer")
            self.advance()
            exponent = int(token.text)
            if exponent < 1:
                self.error("exponent must be a positive integer", token)
            return base**exponent
        return base

    def atom(self) -> PolyElement:
        token = self.current
        if token.kind == "int":
            self.advance()
            denominator = 1
            if self.accept("/"):
                den_token = self.current
                if den_token.kind != "int":
                    self.error("denominator must be an integer literal")
                self.advance()
                denominator = int(den_token.text)
            try:
                coeff = self.field.coefficient(int(token.text), denominator)
            except ParseError as exc:
                raise ParseError(exc.message, line=self.line, column=token.column)
            return self.ring.ground_new(coeff)
        if token.kind == "ident":
            self.advance()
            if token.text not in self.names:
                self.error(f"unknown variable {token.text!r}", token)
            return self.ring.gens[self.names[token.text]]
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                self.error("expected ')'")
            return inner
        if token.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {token.text!r}")


def parse_polynomial(text: str, ring: PolyRing, field: FieldSpec, *, line: int | None = None) -> PolyElement:
    """
    Parse polynomial text into an element of `ring`.

    Args:
        text: Polynomial in the grammar above
        ring: sympy polynomial ring whose symbols are the declared variables
        field: Coefficient field of the ring
        line: Source line, reported in errors

    Returns:
        Canonical PolyElement

    Raises:
        ParseError: syntax error, unknown variable, zero denominator,
            coefficient not reducible mod p
    """
    return _Parser(text, ring, field, line).parse()


def split_top_level(text: str, separator: str) -> list[str]:
    """Split on `separator` outside parentheses, dropping empty pieces"""
    pieces, depth, start = [], 0, 0
    for i, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char == separator and depth == 0:
            pieces.append(text[start:i])
            start = i + 1
    pieces.append(text[start:])
    return [piece.strip() for piece in pieces if piece.strip()]


def _format_coefficient(field: FieldSpec, coeff) -> tuple[str, str]:
    """(sign, magnitude) of a coefficient; magnitude '' stands for 1"""
    num, den = field.to_fraction(coeff)
    sign = "-" if num < 0 else "+"
    num = abs(num)
    if den == 1:
        return sign, "" if num == 1 else str(num)
    return sign, f"{num}/{den}"


def format_monomial(monomial, symbols) -> str:
    parts = []
    for symbol, exp in zip(symbols, monomial):
        if exp == 1:
            parts.append(str(symbol))
        elif exp > 1:
            parts.append(f"{symbol}^{exp}")
    return "*".join(parts)


def format_polynomial(f: PolyElement, field: FieldSpec) -> str:
    """
    Print a polynomial in the input grammar, terms in descending ring order.

    parse_polynomial(format_polynomial(f)) == f for every f.
    """
    if not f:
        return "0"
    symbols = f.ring.symbols
    out = []
    for monom, coeff in f.terms():
        sign, magnitude = _format_coefficient(field, coeff)
        body = format_monomial(monom, symbols)
        if body and magnitude:
            text = f"{magnitude}*{body}"
        else:
            text = body or magnitude or "1"
        if not out:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)
