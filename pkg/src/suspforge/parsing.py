"""Expression grammar and canonical printing.

Grammar: identifiers ``[A-Za-z][A-Za-z0-9_]*`` naming declared variables,
non-negative integer literals, operators ``+ - * ^`` and parentheses;
whitespace is insignificant.  ``^`` takes an integer literal exponent.
There is no division operator.

Canonical printing lists terms in descending monomial order with ``*``
between factors and ``^`` for powers; parse(print(f)) == f whenever the
coefficients print as integers.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomials import Polynomial, PolynomialRing
from .rings import Integers, Rationals


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        if match.lastgroup == "name":
            tokens.append(("name", match.group("name"), match.start("name")))
        elif match.lastgroup == "int":
            tokens.append(("int", match.group("int"), match.start("int")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
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

    def advance(self):
        token = self.tokens[self.i]
        self.i += 1
        return token

    def expect_op(self, symbol: str):
        kind, value, pos = self.peek()
        if kind != "op" or value != symbol:
            raise ParseError(f"expected {symbol!r}", pos)
        self.advance()

    def parse(self) -> Polynomial:
        result = self.expression()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing {value!r}", pos)
        return result

    def expression(self) -> Polynomial:
        result = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                result = result + rhs if value == "+" else result - rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.unary()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                result = result * self.unary()
            else:
                return result

    def unary(self) -> Polynomial:
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            ekind, evalue, epos = self.peek()
            if ekind != "int":
                raise ParseError("exponent must be an integer literal", epos)
            self.advance()
            return base ** int(evalue)
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.advance()
        if kind == "name":
            if value not in self.ring.variables:
                raise ParseError(f"unknown variable {value!r}", pos)
            return self.ring.var(value)
        if kind == "int":
            return self.ring.const(int(value))
        if kind == "op" and value == "(":
            inner = self.expression()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {value!r}" if value else "unexpected end", pos)


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse an expression into canonical form in the given ring."""
    return _Parser(text, ring).parse()


# -- printing ------------------------------------------------------------------


def _coeff_str(value) -> tuple[str, str]:
    """(sign, magnitude-string) of a coefficient."""
    if isinstance(value, Fraction):
        sign = "-" if value < 0 else "+"
        mag = abs(value)
        return sign, (str(mag.numerator) if mag.denominator == 1 else str(mag))
    sign = "-" if value < 0 else "+"
    return sign, str(abs(value))


def format_polynomial(f: Polynomial, order=None) -> str:
    """Canonical string: terms descending in the ring's monomial order."""
    if f.is_zero():
        return "0"
    variables = f.ring.variables
    pieces = []
    for exps, coeff in f.sorted_terms(order):
        sign, mag = _coeff_str(coeff)
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(variables, exps)
            if e
        ]
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = "*".join([mag] + factors)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = [first_body if first_sign == "+" else f"-{first_body}"]
    for sign, body in pieces[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)


def primitive_integer_form(f: Polynomial) -> Polynomial:
    """Scale a Z- or Q-coefficient polynomial so the coefficients are coprime
    integers with positive leading coefficient (the printed generator form)."""
    if f.is_zero():
        return f
    domain = f.ring.coefficients
    if isinstance(domain, Rationals):
        fracs = list(f.terms.values())
        den = 1
        for value in fracs:
            den = den * value.denominator // _gcd(den, value.denominator)
        num_gcd = 0
        for value in fracs:
            num_gcd = _gcd(num_gcd, value.numerator * (den // value.denominator))
        scaled = f.scale(Fraction(den, num_gcd if num_gcd else 1))
    elif isinstance(domain, Integers):
        num_gcd = 0
        for value in f.terms.values():
            num_gcd = _gcd(num_gcd, value)
        if num_gcd > 1:
            scaled = Polynomial(
                f.ring, {e: c // num_gcd for e, c in f.terms.items()}
            )
        else:
            scaled = f
    else:
        return f
    _, lc = scaled.leading()
    if lc < 0:
        scaled = -scaled
    return scaled


def format_generator(f: Polynomial) -> str:
    """Canonical generator string; over Z and Q the primitive integer form is
    printed so the output stays inside the expression grammar."""
    return format_polynomial(primitive_integer_form(f))


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a
