"""Text syntax for field elements, polynomials and rational functions.

Grammar (whitespace-insensitive): integers, the reserved variables X, Y
and u, the operators ``+ - * / ^`` and parentheses, with implicit
multiplication allowed between a number/closing paren and a variable or
opening paren ("4X^2", "2(u+1)").

One extra convention from the report format: a slash surrounded by spaces
(" / ") splits a *standalone* element or rational function into numerator
and denominator once, at the top level, so the canonical F2(u) string
"u^2+u / u+1" round-trips.  Inside polynomial strings, fractional
coefficients are emitted fully parenthesized instead and follow ordinary
precedence.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Poly, RatFunc
from .errors import InputError
from .fields import F2U, QQ, F2uElement, f2_str

_TOP_SPLIT = " / "


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        elif ch.isalpha():
            tokens.append(ch)
            i += 1
        elif ch in "+-*/^()":
            tokens.append(ch)
            i += 1
        else:
            raise InputError(f"unexpected character {ch!r} in {text!r}")
    return tokens


class _Parser:
    """Recursive-descent evaluator over a caller-supplied value domain."""

    def __init__(self, tokens, atom_int, atom_var, char2: bool):
        self.tokens = tokens
        self.pos = 0
        self.atom_int = atom_int
        self.atom_var = atom_var
        self.char2 = char2

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.pos != len(self.tokens):
            raise InputError(f"trailing input at token {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            if op == "+" or self.char2:
                value = value + rhs
            else:
                value = value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.next()
                value = value * self.factor()
            elif tok == "/":
                self.next()
                value = value / self.factor()
            elif isinstance(tok, int) or (isinstance(tok, str)
                                          and (tok.isalpha() or tok == "(")):
                value = value * self.factor()   # implicit multiplication
            else:
                return value

    def factor(self):
        negate = False
        while self.peek() == "-":
            self.next()
            negate = not negate
        value = self.atom()
        if self.peek() == "^":
            self.next()
            exp = self.next()
            if not isinstance(exp, int):
                raise InputError("exponent must be a nonnegative integer")
            value = value ** exp
        if negate and not self.char2:
            value = -value
        return value

    def atom(self):
        tok = self.next()
        if isinstance(tok, int):
            return self.atom_int(tok)
        if tok == "(":
            value = self.expr()
            if self.next() != ")":
                raise InputError("unbalanced parentheses")
            return value
        if isinstance(tok, str) and tok.isalpha():
            return self.atom_var(tok)
        raise InputError(f"unexpected token {tok!r}")


def _eval_scalar(text: str, field):
    """Evaluate an expression to a scalar of the given field."""

    def atom_var(name):
        if field is F2U and name == "u":
            return F2uElement(0b10)
        raise InputError(f"variable {name!r} not allowed in a {field.name} element")

    parser = _Parser(_tokenize(text), field.from_int, atom_var,
                     field.characteristic == 2)
    return parser.parse()


def _eval_ratfunc(text: str, field, var: str) -> RatFunc:
    """Evaluate an expression to a rational function in ``var``."""
    gen = RatFunc(Poly.gen(field, var))

    def atom_int(n):
        return RatFunc.from_element(field, field.from_int(n), var)

    def atom_var(name):
        if name == var:
            return gen
        if field is F2U and name == "u":
            return RatFunc.from_element(field, F2uElement(0b10), var)
        raise InputError(f"unexpected variable {name!r} (main variable is {var!r})")

    parser = _Parser(_tokenize(text), atom_int, atom_var,
                     field.characteristic == 2)
    return parser.parse()


def parse_field_element(text: str, field):
    """Parse a base-field element: a rational or an F2(u) fraction."""
    text = text.strip()
    if not text:
        raise InputError("empty field element")
    if field is F2U and _TOP_SPLIT in text:
        num, den = text.split(_TOP_SPLIT, 1)
        return _eval_scalar(num, field) / _eval_scalar(den, field)
    if field is QQ:
        try:
            return Fraction(text)
        except ValueError:
            pass
    return _eval_scalar(text, field)


def parse_poly(text: str, field, var: str = "X") -> Poly:
    """Parse a polynomial in ``var`` with base-field coefficients."""
    value = _eval_ratfunc(text, field, var)
    if not value.is_polynomial():
        raise InputError(f"expected a polynomial in {var}, got a proper fraction")
    return value.num


def parse_ratfunc(text: str, field, var: str = "Y") -> RatFunc:
    """Parse a rational function in ``var``."""
    text = text.strip()
    if _TOP_SPLIT in text:
        num, den = text.split(_TOP_SPLIT, 1)
        return _eval_ratfunc(num, field, var) / _eval_ratfunc(den, field, var)
    return _eval_ratfunc(text, field, var)


# ---------------------------------------------------------------------------
# Canonical formatting (inverse of the parsers above).
# ---------------------------------------------------------------------------

def format_element(field, x) -> str:
    """Canonical string: "a/b" over Q, "num / den" over F2(u)."""
    return str(x)


def _coeff_str(field, c, *, factor: bool) -> str:
    """Coefficient as an expression factor, parenthesized when needed."""
    if isinstance(c, F2uElement):
        if c.den == 1:
            s = f2_str(c.num)
            return f"({s})" if factor and "+" in s else s
        return f"(({f2_str(c.num)})/({f2_str(c.den)}))"
    return str(c)


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    one = p.field.one
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        if i == 0:
            term = _coeff_str(p.field, c, factor=False)
        else:
            xpow = p.var if i == 1 else f"{p.var}^{i}"
            if c == one:
                term = xpow
            elif p.field is QQ and c == -one:
                term = f"-{xpow}"
            else:
                term = f"{_coeff_str(p.field, c, factor=True)}*{xpow}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


def format_ratfunc(r: RatFunc) -> str:
    if r.is_polynomial():
        return format_poly(r.num)
    return f"{format_poly(r.num)}{_TOP_SPLIT}{format_poly(r.den)}"
