"""Univariate polynomials and rational functions over Q, GF(p) and F2(u).

A ``Poly`` is a dense tuple of coefficients, lowest power first, with no
trailing zeros; the zero polynomial has an empty tuple and degree -inf
(a real marker, so degree arithmetic in valuation code stays honest).
All polynomials in play have degree <= 8, so no sparse representation.

A ``RatFunc`` is a reduced fraction of polynomials with monic denominator,
which makes the representation canonical: structural equality coincides
with cross-multiplication equality, and valuations read off multiplicities
of a stored irreducible directly.

The module-level operations (`poly_gcd`, `poly_derivative`,
`poly_square_root`, `ratfunc_valuation`) are the public contract; the
classes carry the operator plumbing.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InputError, PreconditionError
from .fields import F2U, GF2, NEG_INF, POS_INF, QQ, F2uElement, FFElement

_DEFAULT_VARS = {"Q": "X", "F2u": "X", "GF(2)": "u"}


def _default_var(field) -> str:
    return _DEFAULT_VARS.get(field.name, "X")


class Poly:
    """Dense univariate polynomial over one of the supported fields."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs, var: str | None = None):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)
        self.var = var or _default_var(field)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field, var=None):
        return cls(field, (), var)

    @classmethod
    def one(cls, field, var=None):
        return cls(field, (field.one,), var)

    @classmethod
    def constant(cls, field, c, var=None):
        return cls(field, (c,), var)

    @classmethod
    def gen(cls, field, var=None):
        """The generator polynomial (X, Y or u)."""
        return cls(field, (field.zero, field.one), var)

    @classmethod
    def from_ints(cls, field, ints, var=None):
        return cls(field, [field.from_int(n) for n in ints], var)

    # -- structure ----------------------------------------------------

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def coefficient(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        lc = self.coeffs[-1]
        return Poly(self.field, [c / lc for c in self.coeffs], self.var)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field is not other.field:
            raise InputError(
                f"mixed base fields {self.field.name} and {other.field.name}"
            )

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out, self.var)

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field, self.var)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out, self.var)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Poly":
        return Poly(self.field, [a * c for a in self.coeffs], self.var)

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("negative polynomial power")
        out = Poly.one(self.field, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Poly.zero(self.field, self.var)
        r = self
        d = other.degree
        lc = other.leading_coefficient()
        while not r.is_zero() and r.degree >= d:
            shift = r.degree - d
            c = r.leading_coefficient() / lc
            term = Poly(self.field,
                        [self.field.zero] * shift + [c], self.var)
            q = q + term
            r = r - term * other
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation at a field element."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Substitution self(inner)."""
        self._check(inner)
        acc = Poly.zero(self.field, inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(self.field, c, inner.var)
        return acc

    # -- equality / rendering ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self):
        return f"Poly({self.field!r}, {list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    if a.field is not b.field:
        raise InputError(f"mixed base fields {a.field.name} and {b.field.name}")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_derivative(a: Poly) -> Poly:
    """Formal derivative in the polynomial's characteristic."""
    return Poly(
        a.field,
        [a.coeffs[i] * a.field.from_int(i) for i in range(1, len(a.coeffs))],
        a.var,
    )


def poly_is_squarefree(a: Poly) -> bool:
    if a.is_zero():
        return False
    g = poly_gcd(a, poly_derivative(a))
    return g.degree <= 0


class SquareRootCheck:
    """Transcript of the top-down square-root decision for a polynomial.

    ``root`` is the square root when one exists, else None.  ``candidate``
    is the unique polynomial matching the top coefficients (normalized to
    positive leading coefficient over Q), and ``residual`` is
    ``h - candidate**2``; a nonzero residual certifies "not a square"
    because any square root would have to agree with the candidate.
    For odd degree no candidate exists and ``reason`` says so.
    """

    __slots__ = ("root", "candidate", "residual", "reason")

    def __init__(self, root, candidate, residual, reason):
        self.root = root
        self.candidate = candidate
        self.residual = residual
        self.reason = reason

    @property
    def is_square(self) -> bool:
        return self.root is not None


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def poly_square_root_check(h: Poly) -> SquareRootCheck:
    """Decide whether h is a perfect square over Q, with a transcript.

    Works top-down: the leading half of the coefficients of a square
    determines the root, so the candidate is matched from the top and then
    verified by exact expansion.  A matching bug therefore cannot produce
    a false "is a square".
    """
    if h.field.characteristic == 2:
        raise InputError("square-root decision requires characteristic != 2")
    if h.is_zero():
        zero = Poly.zero(h.field, h.var)
        return SquareRootCheck(zero, zero, zero, "zero polynomial")
    if h.degree % 2 == 1:
        return SquareRootCheck(None, None, None, "odd degree")
    lc = h.leading_coefficient()
    root_lc = _rational_sqrt(lc)
    if root_lc is None:
        return SquareRootCheck(None, None, None,
                               "leading coefficient is not a rational square")
    m = h.degree // 2
    two = h.field.from_int(2)
    # s_m .. s_0, matching coefficients of h from degree 2m downwards:
    # h[2m - k] = sum_{i+j = 2m-k} s_i s_j; the term 2*s_m*s_{m-k} appears
    # exactly once, so each new coefficient is solvable.
    s = [h.field.zero] * (m + 1)
    s[m] = root_lc
    for k in range(1, m + 1):
        acc = h.field.zero
        for i in range(m - k + 1, m + 1):
            j = 2 * m - k - i
            if 0 <= j <= m and j > m - k:
                acc = acc + s[i] * s[j]
        s[m - k] = (h.coefficient(2 * m - k) - acc) / (two * s[m])
    candidate = Poly(h.field, s, h.var)
    residual = h - candidate * candidate
    if residual.is_zero():
        return SquareRootCheck(candidate, candidate, residual, "exact square")
    return SquareRootCheck(None, candidate, residual,
                           "residual after top-down matching is nonzero")


def poly_square_root(h: Poly):
    """Square root of h over a field of characteristic != 2, or None."""
    return poly_square_root_check(h).root


def poly_irreducible(p: Poly) -> bool:
    """Irreducibility over the base field, for degree <= 2.

    Quadratics are decided by square tests: over Q via the discriminant,
    over F2(u) via the Artin-Schreier criterion (b != 0) or non-squareness
    of the constant term (b = 0).  Higher degrees are out of scope.
    """
    d = p.degree
    if d == 1:
        return True
    if d != 2:
        raise InputError(f"irreducibility supported for degree <= 2, got {d}")
    a, b, c = p.coefficient(2), p.coefficient(1), p.coefficient(0)
    if p.field.characteristic != 2:
        disc = b * b - p.field.from_int(4) * a * c
        return _rational_sqrt(disc) is None
    # characteristic 2: X^2 + bX + c (after making monic)
    b, c = b / a, c / a
    if not b:
        return c.sqrt() is None
    from .artin_schreier import artin_schreier_root_in_f2u

    return artin_schreier_root_in_f2u(c / (b * b)) is None


class RatFunc:
    """Reduced fraction of polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.field, num.var)
        if num.field is not den.field:
            raise InputError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one(num.field, num.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lc = den.leading_coefficient()
            if lc != den.field.one:
                num = num.scale(den.field.one / lc)
                den = den.scale(den.field.one / lc)
        self.num = num
        self.den = den

    @classmethod
    def from_element(cls, field, c, var=None):
        return cls(Poly.constant(field, c, var))

    @property
    def field(self):
        return self.num.field

    @property
    def var(self):
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if self.field is not other.field:
                raise InputError("mixed base fields")
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        from .parsing import format_ratfunc

        return format_ratfunc(self)


def ratfunc_valuation(r: RatFunc, p: Poly):
    """Order of vanishing of r at the irreducible polynomial p.

    Returns multiplicity in the numerator minus multiplicity in the
    denominator; +inf for r = 0.  Rejects reducible p.
    """
    if r.field is not p.field:
        raise InputError("rational function and polynomial over different fields")
    if not poly_irreducible(p):
        raise InputError(f"{p} is reducible over {p.field.name}")
    if r.is_zero():
        return POS_INF

    def multiplicity(a: Poly) -> int:
        m = 0
        while True:
            q, rem = divmod(a, p)
            if not rem.is_zero():
                return m
            a = q
            m += 1

    return multiplicity(r.num) - multiplicity(r.den)


# -- conversions between packed GF(2)[u] ints and Poly over GF(2) ----------

def poly_gf2_from_int(mask: int) -> Poly:
    return Poly(GF2, [FFElement(2, (mask >> i) & 1)
                      for i in range(mask.bit_length())], "u")


def poly_gf2_to_int(p: Poly) -> int:
    if p.field is not GF2:
        raise InputError("expected a polynomial over GF(2)")
    out = 0
    for i, c in enumerate(p.coeffs):
        if c:
            out |= 1 << i
    return out
