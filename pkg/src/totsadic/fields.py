"""Base field scalars: exact rationals, prime fields, and F2(u).

Three coefficient domains are supported, each with exact arithmetic and a
canonical representation:

* Q        -- ``fractions.Fraction`` (always lowest terms, denominator > 0).
* GF(p)    -- ``FFElement``, a residue in [0, p) for a small prime p.
* F2(u)    -- ``F2uElement``, a reduced fraction of binary polynomials.

Polynomials over GF(2) are packed into Python ints, bit i holding the
coefficient of u^i (addition is XOR, multiplication is carry-less).  The
``f2_*`` helpers operate on that packed form; ``F2uElement`` keeps its
numerator and denominator packed and reduced (gcd 1, denominator nonzero --
monic is automatic over GF(2)).

Field singletons ``QQ``, ``GF2`` and ``F2U`` carry zero/one constants,
the characteristic, and conversion from ints, so generic polynomial code
never needs to branch on the coefficient type.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

#: Exact rational scalar of all Q-side computation.
Rational = Fraction

NEG_INF = -math.inf
POS_INF = math.inf


def is_prime(n: int) -> bool:
    """Trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FFElement:
    """Residue in [0, p) of the prime field GF(p); arithmetic is mod p."""

    __slots__ = ("p", "value")

    def __init__(self, p: int, value: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, FFElement):
            if other.p != self.p:
                raise ValueError(f"mixed characteristics {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.p, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.p, self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.p, v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.p, self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.p, self.value * pow(v, -1, self.p))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FFElement(self.p, v * pow(self.value, -1, self.p))

    def __pow__(self, n: int):
        return FFElement(self.p, pow(self.value, n, self.p))

    def __neg__(self):
        return FFElement(self.p, -self.value)

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FFElement({self.p}, {self.value})"

    def __str__(self):
        return str(self.value)


# ---------------------------------------------------------------------------
# GF(2)[u] packed into ints: bit i of a is the coefficient of u^i.
# ---------------------------------------------------------------------------

def f2_degree(a: int):
    """Degree of a packed binary polynomial; -inf for the zero polynomial."""
    return a.bit_length() - 1 if a else NEG_INF


def f2_mul(a: int, b: int) -> int:
    """Carry-less product of packed binary polynomials."""
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    return out


def f2_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of packed binary polynomials (b != 0)."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def f2_mod(a: int, b: int) -> int:
    return f2_divmod(a, b)[1]


def f2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, f2_mod(a, b)
    return a


def f2_xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g over GF(2)[u]."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = f2_divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 ^ f2_mul(q, s1)
        t0, t1 = t1, t0 ^ f2_mul(q, t1)
    return a, s0, t0


def f2_inv_mod(a: int, m: int) -> int:
    """Inverse of a modulo m in GF(2)[u]; requires gcd(a, m) = 1."""
    g, s, _ = f2_xgcd(a, m)
    if g != 1:
        raise ValueError("element not invertible modulo the given polynomial")
    return s


def f2_pow(a: int, n: int) -> int:
    out = 1
    while n:
        if n & 1:
            out = f2_mul(out, a)
        a = f2_mul(a, a)
        n >>= 1
    return out


def f2_sqrt(a: int):
    """Square root in GF(2)[u] or None.

    Squaring doubles exponents in characteristic 2, so a is a square iff
    every odd-degree coefficient vanishes; the root keeps the even bits.
    """
    root = 0
    i = 0
    while a:
        if a & 1:
            root |= 1 << i
        if a & 2:
            return None
        a >>= 2
        i += 1
    return root


def f2_valuation(a: int, p: int):
    """Multiplicity of the irreducible p in a; +inf for a = 0."""
    if a == 0:
        return POS_INF
    v = 0
    while True:
        q, r = f2_divmod(a, p)
        if r:
            return v
        a = q
        v += 1


def f2_is_irreducible(a: int) -> bool:
    """Irreducibility over GF(2) by trial division up to half the degree."""
    d = a.bit_length() - 1
    if d < 1:
        return False
    for b in range(2, 1 << (d // 2 + 1)):
        if f2_mod(a, b) == 0:
            return False
    return True


def f2_irreducibles(max_degree: int) -> list[int]:
    """Monic irreducibles of GF(2)[u] up to max_degree, ascending."""
    return [a for a in range(2, 1 << (max_degree + 1)) if f2_is_irreducible(a)]


def f2_from_coeffs(coeffs) -> int:
    out = 0
    for i, c in enumerate(coeffs):
        if int(c) % 2:
            out |= 1 << i
    return out


def f2_to_coeffs(a: int) -> list[int]:
    return [(a >> i) & 1 for i in range(a.bit_length())]


def f2_str(a: int) -> str:
    """Render a packed binary polynomial like ``u^2+u+1``."""
    if a == 0:
        return "0"
    terms = []
    for i in range(a.bit_length() - 1, -1, -1):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else ("u" if i == 1 else f"u^{i}"))
    return "+".join(terms)


class F2uElement:
    """Element of F2(u): a reduced fraction of packed binary polynomials.

    Invariants: gcd(num, den) = 1 and den != 0.  Over GF(2) every nonzero
    polynomial is monic, so the representation is canonical and equality
    is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator in F2(u)")
        if num == 0:
            den = 1
        else:
            g = f2_gcd(num, den)
            if g != 1:
                num, _ = f2_divmod(num, g)
                den, _ = f2_divmod(den, g)
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other):
        if isinstance(other, F2uElement):
            return other
        if isinstance(other, int):
            return F2uElement(other % 2)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return F2uElement(
            f2_mul(self.num, o.den) ^ f2_mul(o.num, self.den),
            f2_mul(self.den, o.den),
        )

    __radd__ = __add__
    __sub__ = __add__      # characteristic 2
    __rsub__ = __add__

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return F2uElement(f2_mul(self.num, o.num), f2_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num == 0:
            raise ZeroDivisionError("division by zero in F2(u)")
        return F2uElement(f2_mul(self.num, o.den), f2_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return F2uElement(f2_pow(self.den, -n), f2_pow(self.num, -n))
        return F2uElement(f2_pow(self.num, n), f2_pow(self.den, n))

    def __neg__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return self.num != 0

    def __repr__(self):
        return f"F2uElement({self.num:#x}, {self.den:#x})"

    def __str__(self):
        if self.den == 1:
            return f2_str(self.num)
        return f"{f2_str(self.num)} / {f2_str(self.den)}"

    def sqrt(self):
        """Exact square root in F2(u), or None if no square root exists."""
        rn = f2_sqrt(self.num)
        rd = f2_sqrt(self.den)
        if rn is None or rd is None:
            return None
        return F2uElement(rn, rd)

    def is_polynomial(self) -> bool:
        return self.den == 1


# ---------------------------------------------------------------------------
# Field descriptors.
# ---------------------------------------------------------------------------

class RationalField:
    """The field Q with Fraction scalars."""

    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def element_str(self, x) -> str:
        return str(x)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) with FFElement scalars; instances are cached per prime."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.characteristic = p
        self.zero = FFElement(p, 0)
        self.one = FFElement(p, 1)

    def from_int(self, n: int) -> FFElement:
        return FFElement(self.p, n)

    def element_str(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"GF({self.p})"


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


class F2RationalField:
    """The rational function field F2(u) with F2uElement scalars."""

    name = "F2u"
    characteristic = 2
    zero = F2uElement(0)
    one = F2uElement(1)

    def from_int(self, n: int) -> F2uElement:
        return F2uElement(n % 2)

    def element_str(self, x) -> str:
        return str(x)

    def __repr__(self):
        return "F2U"


QQ = RationalField()
GF2 = GF(2)
F2U = F2RationalField()

#: Field tags accepted on the command line and in JSON reports.
FIELDS_BY_NAME = {"Q": QQ, "F2u": F2U}
