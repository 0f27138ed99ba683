"""Finite-precision completions at ultrametric places.

``LocalApprox`` is the computational stand-in for an element of a
Henselization: uniformizer^valuation times a truncated unit expansion.
Digits are little-endian (lowest power first); for p-adic places each
digit is an integer in [0, p), for F2(u) places each digit is a residue
polynomial packed into an int (bit i = coefficient of u^i), so GF(4)
digits at the place (u^2+u+1) take values 0..3.

Root lifting runs in exact base-field arithmetic and truncates only at
the end, which keeps residual valuations exact instead of requiring a
precision-loss analysis inside the Newton loop.  The default target
precision of 64 digits needs at most 7 doubling steps from residual 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, poly_derivative, poly_gcd
from .errors import InputError, PreconditionError
from .fields import F2uElement, f2_divmod, f2_inv_mod, f2_mod, f2_mul, f2_pow
from .places import Place, val_at_place

POS_INF = math.inf

DEFAULT_PRECISION = 64

#: Desk-scale guard for the exhaustive residue-enumeration oracle.
MAX_ORACLE_LEVEL = 12


@dataclass(frozen=True)
class LocalApprox:
    """Truncated element of a completion: uniformizer^valuation * unit."""

    place: Place
    valuation: object          # int, or +inf for zero
    digits: tuple              # unit digits, little-endian, digits[0] != 0
    precision: int

    @property
    def is_zero(self) -> bool:
        return self.valuation == POS_INF

    def to_json(self) -> dict:
        return {
            "place": str(self.place),
            "valuation": "+inf" if self.is_zero else self.valuation,
            "digits": list(self.digits),
            "precision": self.precision,
        }

    def __str__(self):
        if self.is_zero:
            return f"0 (at {self.place})"
        return (f"digits {list(self.digits)} * pi^{self.valuation}"
                f" (at {self.place}, {self.precision} digits)")


class ResidueField:
    """Arithmetic in the residue field of an ultrametric place.

    Elements are ints: residues in [0, p) for p-adic places, packed
    GF(2)[u] residues of degree < deg P for F2(u) places (GF(2) or GF(4)).
    """

    def __init__(self, place: Place):
        if not place.is_ultrametric:
            raise InputError("the real place has no residue field")
        self.place = place
        if place.kind == "padic":
            self.size = place.p
        else:
            self.size = 1 << place.residue_degree

    def elements(self):
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        if self.place.kind == "padic":
            return (a + b) % self.place.p
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self.place.kind == "padic":
            return (a * b) % self.place.p
        return f2_mod(f2_mul(a, b), self.place.poly_mask)

    def reduce(self, x) -> int:
        """Image of a v-integral base-field element in the residue field."""
        if val_at_place(x, self.place) < 0:
            raise PreconditionError(f"{x} is not integral at {self.place}")
        if self.place.kind == "padic":
            if x == 0:
                return 0
            return x.numerator * pow(x.denominator, -1, self.place.p) % self.place.p
        if not x:
            return 0
        P = self.place.poly_mask
        return f2_mod(f2_mul(f2_mod(x.num, P), f2_inv_mod(x.den, P)), P)

    def lift(self, r: int):
        """Canonical lift of a residue back into the base field."""
        if self.place.kind == "padic":
            return Fraction(r)
        return F2uElement(r)

    def poly_reduce(self, f: Poly) -> list:
        return [self.reduce(c) for c in f.coeffs]

    def poly_eval(self, coeffs: list, r: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, r), c)
        return acc


def _unit_digits_padic(x: Fraction, p: int, n: int) -> tuple:
    """First n base-p digits of a p-adic unit given as a fraction."""
    m = p ** n
    r = x.numerator * pow(x.denominator, -1, m) % m
    digits = []
    for _ in range(n):
        r, d = divmod(r, p)
        digits.append(d)
    return tuple(digits)


def _unit_digits_polyadic(x: F2uElement, mask: int, n: int) -> tuple:
    """First n P-adic digits of a unit of F2(u) at the place of ``mask``."""
    modulus = f2_pow(mask, n)
    r = f2_mod(f2_mul(f2_mod(x.num, modulus), f2_inv_mod(x.den, modulus)),
               modulus)
    digits = []
    for _ in range(n):
        r, d = f2_divmod(r, mask)
        digits.append(d)
    return tuple(digits)


def embed(x, v: Place, n: int) -> LocalApprox:
    """Truncate a base-field element to n unit digits at an ultrametric place."""
    if n < 1:
        raise InputError("precision must be >= 1")
    w = val_at_place(x, v)
    if w == POS_INF:
        return LocalApprox(v, POS_INF, (), n)
    unit = x / v.uniformizer() ** w
    if v.kind == "padic":
        digits = _unit_digits_padic(unit, v.p, n)
    else:
        digits = _unit_digits_polyadic(unit, v.poly_mask, n)
    return LocalApprox(v, w, digits, n)


@dataclass(frozen=True)
class LiftResult:
    """A Hensel-lifted simple root together with its audit trail."""

    root: LocalApprox
    exact_root: object         # the final Newton iterate, exact
    residual_valuation: object
    iterations: int
    residual_history: tuple    # valuation of f at each iterate, x0 first

    def to_json(self) -> dict:
        return {
            "root": self.root.to_json(),
            "residual_valuation": ("+inf"
                                   if self.residual_valuation == POS_INF
                                   else self.residual_valuation),
            "iterations": self.iterations,
            "residual_history": ["+inf" if h == POS_INF else h
                                 for h in self.residual_history],
        }


def hensel_lift_simple_root(f: Poly, start: int, v: Place,
                            n: int = DEFAULT_PRECISION) -> LiftResult:
    """Newton-lift a simple residue root of f to valuation >= n.

    ``start`` is a residue-field element (see ResidueField) that must be a
    simple root of the reduction of f.  The iteration
    x <- x - f(x)/f'(x) runs in exact base-field arithmetic and stops as
    soon as val(f(x)) >= n; the residual valuation doubles each step.
    """
    if f.field is not v.base_field:
        raise InputError("polynomial and place over different base fields")
    rf = ResidueField(v)
    for c in f.coeffs:
        if val_at_place(c, v) < 0:
            raise PreconditionError(
                f"coefficient {c} is not integral at {v}")
    reduced = rf.poly_reduce(f)
    fprime = poly_derivative(f)
    reduced_prime = rf.poly_reduce(fprime)
    start = int(start) % rf.size if v.kind == "padic" else int(start)
    if not 0 <= start < rf.size:
        raise PreconditionError(f"{start} is not a residue element at {v}")
    if rf.poly_eval(reduced, start) != 0:
        raise PreconditionError(
            f"{start} is not a root of the reduction of f at {v}")
    if rf.poly_eval(reduced_prime, start) == 0:
        raise PreconditionError(
            f"{start} is not a simple root of the reduction of f at {v}")

    x = rf.lift(start)
    residual = val_at_place(f(x), v)
    history = [residual]
    iterations = 0
    max_iterations = 8 + max(n, 1).bit_length() * 2
    while residual < n:
        if iterations >= max_iterations:
            raise PreconditionError("Newton iteration failed to converge")
        x = x - f(x) / fprime(x)
        residual = val_at_place(f(x), v)
        history.append(residual)
        iterations += 1
    return LiftResult(embed(x, v, n), x, residual, iterations, tuple(history))


# ---------------------------------------------------------------------------
# Squares in Q_p.
# ---------------------------------------------------------------------------

def _sqrt_mod_prime(a: int, p: int) -> int:
    """Tonelli-Shanks square root of a quadratic residue mod an odd prime."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


def _lift_sqrt_odd(a_num: int, a_den: int, p: int, n: int) -> int:
    """Square root of a unit mod p^n for odd p, by Newton doubling."""
    m = p ** n
    a = a_num * pow(a_den, -1, m) % m
    r = _sqrt_mod_prime(a, p)
    k = 1
    while k < n:
        k = min(2 * k, n)
        mod = p ** k
        r = (r + a * pow(r, -1, mod)) * pow(2, -1, mod) % mod
    return r % m


def _lift_sqrt_two(a_num: int, a_den: int, n: int) -> int:
    """Square root of a unit congruent to 1 mod 8, mod 2^n (n >= 3)."""
    m = 1 << (n + 1)
    a = a_num * pow(a_den, -1, m) % m
    r = 1
    for k in range(3, n):
        if (r * r - a) % (1 << (k + 1)):
            r += 1 << (k - 1)
    return r % (1 << n)


@dataclass(frozen=True)
class LocalSquareCheck:
    """Whether x is a square in Q_p, with the decisive criterion.

    When true, ``sqrt_witness`` holds a square root to working precision
    (verified by squaring modulo p^precision); when false, ``criterion``
    names the violated condition.
    """

    is_square: bool
    place: Place
    valuation: int
    criterion: str
    unit_residue: int | None = None
    sqrt_witness: LocalApprox | None = None

    def to_json(self) -> dict:
        out = {
            "is_square": self.is_square,
            "place": str(self.place),
            "valuation": self.valuation,
            "criterion": self.criterion,
        }
        if self.unit_residue is not None:
            out["unit_residue"] = self.unit_residue
        if self.sqrt_witness is not None:
            out["sqrt_witness"] = self.sqrt_witness.to_json()
        return out


def is_square_local(x: Fraction, v: Place,
                    precision: int = 16) -> LocalSquareCheck:
    """Decide whether a nonzero rational is a square in Q_p.

    Even valuation plus a quadratic-residue unit (p odd) or a unit
    congruent to 1 mod 8 (p = 2) is necessary and sufficient.
    """
    if v.kind != "padic":
        raise InputError("is_square_local expects a p-adic place of Q")
    if isinstance(x, int):
        x = Fraction(x)
    if x == 0:
        raise InputError("x must be nonzero")
    p = v.p
    w = val_at_place(x, v)
    if w % 2 == 1:
        return LocalSquareCheck(False, v, w, "odd valuation")
    unit = x / Fraction(p) ** w
    num, den = unit.numerator, unit.denominator
    precision = max(precision, 4)
    if p == 2:
        residue = num * pow(den, -1, 8) % 8
        if residue != 1:
            return LocalSquareCheck(False, v, w,
                                    f"unit is {residue} mod 8, not 1",
                                    unit_residue=residue)
        r = _lift_sqrt_two(num, den, precision)
        criterion = "even valuation and unit 1 mod 8"
    else:
        residue = num * pow(den, -1, p) % p
        if pow(residue, (p - 1) // 2, p) != 1:
            return LocalSquareCheck(False, v, w,
                                    f"unit residue {residue} is not a"
                                    f" quadratic residue mod {p}",
                                    unit_residue=residue)
        r = _lift_sqrt_odd(num, den, p, precision)
        criterion = f"even valuation and quadratic-residue unit mod {p}"
    m = p ** precision
    assert r * r % m == num * pow(den, -1, m) % m
    digits = []
    rr = r
    for _ in range(precision):
        rr, d = divmod(rr, p)
        digits.append(d)
    witness = LocalApprox(v, w // 2, tuple(digits), precision)
    return LocalSquareCheck(True, v, w, criterion,
                            unit_residue=residue,
                            sqrt_witness=witness)


# ---------------------------------------------------------------------------
# Exhaustive root-counting oracle over Z_p.
# ---------------------------------------------------------------------------

def _resultant(a: Poly, b: Poly) -> Fraction:
    """Resultant over Q by the Euclidean recursion."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    if b.degree == 0:
        return b.leading_coefficient() ** a.degree
    if a.degree < b.degree:
        sign = -1 if (a.degree * b.degree) % 2 else 1
        return sign * _resultant(b, a)
    r = a % b
    if r.is_zero():
        return Fraction(0)
    sign = -1 if (a.degree * b.degree) % 2 else 1
    return (sign * b.leading_coefficient() ** (a.degree - r.degree)
            * _resultant(b, r))


def _int_val(n: int, p: int):
    if n == 0:
        return POS_INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def count_roots_local_oracle(f: Poly, p: int, n: int) -> int:
    """Count the roots of a squarefree rational polynomial in Z_p.

    Brute-force oracle, not a decision procedure: residues mod p^n
    satisfying f = 0 are enumerated level by level, those certifying a
    unique refinement (val(f(r)) >= n > 2 val(f'(r))) are kept, and
    residues certifying the same root are grouped.  Raises when n is too
    small to separate the roots (the bound comes from the resultant of f
    and f').
    """
    if n < 1 or n > MAX_ORACLE_LEVEL:
        raise InputError(f"oracle level must be 1..{MAX_ORACLE_LEVEL}")
    if f.field.characteristic != 0:
        raise InputError("the oracle works over Q")
    g = poly_gcd(f, poly_derivative(f))
    if g.degree > 0:
        raise PreconditionError("polynomial must be squarefree")
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f.coeffs]
    dints = [i * ints[i] for i in range(1, len(ints))]

    def fval(r: int, mod: int) -> int:
        acc = 0
        for c in reversed(ints):
            acc = (acc * r + c) % mod
        return acc

    top = p ** n
    roots = [r for r in range(p) if fval(r, p) == 0]
    for k in range(2, n + 1):
        mod = p ** k
        step = p ** (k - 1)
        roots = [r + j * step
                 for r in roots for j in range(p)
                 if fval(r + j * step, mod) == 0]

    def dval(r: int) -> object:
        acc = 0
        for c in reversed(dints):
            acc = acc * r + c
        return _int_val(acc, p)

    def full_fval(r: int) -> object:
        acc = 0
        for c in reversed(ints):
            acc = acc * r + c
        return _int_val(acc, p)

    certified = [r for r in roots
                 if full_fval(r) >= n and 2 * dval(r) < n]
    if not certified:
        return 0
    e = max(dval(r) for r in certified)
    res = _resultant(f, poly_derivative(f))
    delta = _int_val(res.numerator, p) - _int_val(res.denominator, p)
    if n - e <= delta:
        raise PreconditionError(
            f"level {n} too small to separate roots (needs > {delta + e})")
    group_mod = p ** (n - e)
    return len({r % group_mod for r in certified})
