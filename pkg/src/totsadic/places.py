"""Places of Q and F2(u): canonical descriptors, valuations, uniformizers.

A place is one of

* the real place of Q (written ``R``),
* a p-adic place of Q for a verified prime p (written ``2``, ``3``, ...),
* a P(u)-adic place of F2(u) for a monic irreducible P over GF(2) of
  degree <= 2 (written ``(u)``, ``(u+1)``, ``(u^2+u+1)``).

Descriptors are canonical, so two places define equivalent absolute
values iff the values are equal; a set of places is "pairwise
inequivalent" exactly when its elements are distinct.  The degree place
of F2(u) (uniformizer 1/u) is deliberately unsupported, which keeps the
simultaneous-uniformizer search a plain product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, poly_gf2_from_int, poly_gf2_to_int
from .errors import InputError
from .fields import (F2U, QQ, F2uElement, f2_is_irreducible, f2_str,
                     f2_valuation, is_prime)

POS_INF = math.inf

#: Largest supported degree of an F2(u) place polynomial; keeps residue
#: fields at GF(2) or GF(4).
MAX_PLACE_DEGREE = 2


@dataclass(frozen=True)
class Place:
    """Canonical descriptor of an absolute value on Q or F2(u)."""

    kind: str            # "real" | "padic" | "polyadic"
    p: int = 0           # the prime, for kind == "padic"
    poly_mask: int = 0   # packed monic irreducible, for kind == "polyadic"

    @staticmethod
    def real() -> "Place":
        return Place("real")

    @staticmethod
    def p_adic(p: int) -> "Place":
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        return Place("padic", p=p)

    @staticmethod
    def f2u_poly(poly) -> "Place":
        mask = poly_gf2_to_int(poly) if isinstance(poly, Poly) else int(poly)
        degree = mask.bit_length() - 1
        if degree < 1 or degree > MAX_PLACE_DEGREE:
            raise InputError(
                f"place polynomial degree must be 1..{MAX_PLACE_DEGREE}")
        if not f2_is_irreducible(mask):
            raise InputError(f"{f2_str(mask)} is reducible over GF(2)")
        return Place("polyadic", poly_mask=mask)

    def __post_init__(self):
        if self.kind not in ("real", "padic", "polyadic"):
            raise InputError(f"unknown place kind {self.kind!r}")

    @property
    def is_ultrametric(self) -> bool:
        return self.kind != "real"

    @property
    def base_field(self):
        return F2U if self.kind == "polyadic" else QQ

    @property
    def poly(self) -> Poly:
        if self.kind != "polyadic":
            raise InputError("only F2(u) places carry a polynomial")
        return poly_gf2_from_int(self.poly_mask)

    @property
    def residue_degree(self) -> int:
        """Degree of the residue field over its prime field."""
        if self.kind == "padic":
            return 1
        if self.kind == "polyadic":
            return self.poly_mask.bit_length() - 1
        raise InputError("the real place has no residue field")

    def uniformizer(self):
        """The canonical uniformizer as a base-field element."""
        if self.kind == "padic":
            return Fraction(self.p)
        if self.kind == "polyadic":
            return F2uElement(self.poly_mask)
        raise InputError("the real place has no uniformizer")

    def __str__(self):
        if self.kind == "real":
            return "R"
        if self.kind == "padic":
            return str(self.p)
        return f"({f2_str(self.poly_mask)})"


@dataclass(frozen=True)
class PlaceSet:
    """Nonempty set of pairwise distinct places over one base field."""

    base: object
    places: tuple

    def __post_init__(self):
        if not self.places:
            raise InputError("place set must be nonempty")
        if len(set(self.places)) != len(self.places):
            raise InputError("places must be pairwise distinct")
        for v in self.places:
            if v.base_field is not self.base:
                raise InputError(
                    f"place {v} does not live on {self.base.name}")

    @classmethod
    def of(cls, base, places) -> "PlaceSet":
        return cls(base, tuple(places))

    @property
    def ultrametric(self) -> tuple:
        return tuple(v for v in self.places if v.is_ultrametric)

    @property
    def has_real(self) -> bool:
        return any(v.kind == "real" for v in self.places)

    def __iter__(self):
        return iter(self.places)

    def __len__(self):
        return len(self.places)

    def __str__(self):
        return ",".join(str(v) for v in self.places)


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def val_at_place(x, v: Place):
    """Normalized valuation of a base-field element at an ultrametric place.

    +inf for x = 0 (the convention Lemma-style arguments need at y = 0).
    """
    if v.kind == "real":
        raise InputError("the real place has no valuation; use sign_at_real_place")
    if v.kind == "padic":
        if isinstance(x, int):
            x = Fraction(x)
        if not isinstance(x, Fraction):
            raise InputError(f"expected a rational, got {type(x).__name__}")
        if x == 0:
            return POS_INF
        return _int_valuation(x.numerator, v.p) - _int_valuation(x.denominator, v.p)
    if not isinstance(x, F2uElement):
        raise InputError(f"expected an F2(u) element, got {type(x).__name__}")
    if not x:
        return POS_INF
    return f2_valuation(x.num, v.poly_mask) - f2_valuation(x.den, v.poly_mask)


def sign_at_real_place(x: Fraction) -> int:
    """Sign of a rational in the unique ordering of Q."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def find_uniformizer(S: PlaceSet):
    """Simultaneous uniformizer for the ultrametric places of S.

    Over Q this is the product of the primes of S, which is also the
    smallest positive integer with valuation 1 at each of them; over
    F2(u) it is the product of the place polynomials.  With no
    ultrametric place the answer is 1.  The result is never 0 or -1,
    as the quadratic-family construction requires.
    """
    ultras = S.ultrametric
    if S.base is QQ:
        t = Fraction(1)
        for v in ultras:
            t *= v.p
        return t
    t = F2uElement(1)
    for v in ultras:
        t = t * F2uElement(v.poly_mask)
    return t


@dataclass(frozen=True)
class NonSquareCertificate:
    """Outcome of the non-squareness check, with its reason.

    ``reason`` is one of ``odd_valuation`` (with the witnessing place and
    valuation), ``negative``, or ``not_rational_square`` (the square-free
    part exceeds 1, certified by an integer-square-root mismatch).
    """

    nonsquare: bool
    reason: str | None = None
    place: Place | None = None
    valuation: int | None = None

    def to_json(self) -> dict:
        out = {"nonsquare": self.nonsquare}
        if self.reason:
            out["reason"] = self.reason
        if self.place is not None:
            out["place"] = str(self.place)
        if self.valuation is not None:
            out["valuation"] = self.valuation
        return out


def parse_place(text: str) -> Place:
    """Parse a place descriptor: "R", a prime like "3", or "(u^2+u+1)"."""
    text = text.strip()
    if text == "R":
        return Place.real()
    if text.startswith("(") and text.endswith(")"):
        from .parsing import parse_field_element

        element = parse_field_element(text[1:-1], F2U)
        if not isinstance(element, F2uElement) or not element.is_polynomial():
            raise InputError(f"place polynomial {text!r} must be a polynomial in u")
        return Place.f2u_poly(element.num)
    try:
        p = int(text)
    except ValueError:
        raise InputError(f"cannot parse place {text!r}") from None
    return Place.p_adic(p)


def parse_place_set(text: str, base) -> PlaceSet:
    """Parse a comma-separated place list into a validated PlaceSet."""
    places = tuple(parse_place(part) for part in text.split(",") if part.strip())
    return PlaceSet(base, places)


def rational_is_square(x: Fraction) -> bool:
    """Exact: x >= 0 with numerator and denominator perfect squares."""
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def is_nonsquare_in_base(t, S: PlaceSet) -> NonSquareCertificate:
    """Certify that t is not a square in the base field, if it can.

    An odd valuation at any ultrametric place of S certifies
    non-squareness over either base field.  Over Q the remaining exact
    criteria (negativity, square-free part exceeding 1) also apply, so
    the answer there is complete; over F2(u) places outside S are not
    consulted and the fallback answer is False.
    """
    if not t:
        raise InputError("t must be nonzero")
    for v in S.ultrametric:
        w = val_at_place(t, v)
        if w != POS_INF and w % 2 == 1:
            return NonSquareCertificate(True, "odd_valuation", v, w)
    if S.base is QQ:
        if t < 0:
            return NonSquareCertificate(True, "negative")
        if not rational_is_square(t):
            return NonSquareCertificate(True, "not_rational_square")
    return NonSquareCertificate(False)
