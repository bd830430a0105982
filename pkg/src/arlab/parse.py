"""Parser for the ASCII polynomial grammar.

::

    poly   := term (('+'|'-') term)*
    term   := sign? factor ('*'? factor)*
    factor := coeff | var ('^' uint)?
    coeff  := uint ('/' uint)?

Whitespace is insignificant and adjacent factors multiply.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .polynomial import Polynomial, PolynomialRing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class UnknownVariableError(ParseError):
    def __init__(self, name: str, position: int, text: str):
        self.name = name
        super().__init__(f"unknown variable {name!r}", position, text)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty polynomial")
        result = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "end":
                return result
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                result = result + t if val == "+" else result - t
            else:
                raise self.error(f"unexpected {val!r}")

    def term(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        coeff = Fraction(sign)
        exps = [0] * self.ring.nvars
        coeff = self.factor(exps, coeff)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                coeff = self.factor(exps, coeff)
            elif kind in ("num", "name"):
                coeff = self.factor(exps, coeff)
            else:
                break
        try:
            c = self.ring.field(coeff)
        except ZeroDivisionError as exc:
            raise ParseError(f"coefficient {coeff} is not defined in {self.ring.field!r}: {exc}",
                             None, self.text) from None
        return Polynomial(self.ring, {tuple(exps): c} if c else {}, _canonical=True)

    def factor(self, exps, coeff):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            num = int(val)
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den_tok = self.take()
                if den_tok[0] != "num":
                    raise self.error("expected a denominator", den_tok)
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("denominator is zero", den_tok[2], self.text)
                return coeff * Fraction(num, den)
            return coeff * num
        if kind == "name":
            try:
                idx = self.ring.index(val)
            except KeyError:
                raise UnknownVariableError(val, pos, self.text) from None
            e = 1
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "^":
                self.take()
                e_tok = self.take()
                if e_tok[0] != "num":
                    raise self.error("expected an exponent", e_tok)
                e = int(e_tok[1])
            exps[idx] += e
            return coeff
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``."""
    return _Parser(text, ring).parse()
