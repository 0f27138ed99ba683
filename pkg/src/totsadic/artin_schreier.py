"""Solving b^2 + b = a in characteristic 2.

The map wp(b) = b^2 + b is additive in characteristic 2 with kernel
{0, 1}, and X^2 + X + a is irreducible exactly when a has no preimage.
Both solvers below are complete decision procedures, not bounded
searches, because the denominator of a preimage is forced:

for b = n/d in lowest terms, gcd(n(n+d), d^2) = 1, so wp(b) has reduced
denominator exactly d^2.  A preimage can therefore only exist when the
target's denominator is a perfect square, and with d fixed the equation
n^2 + n*d = numerator is GF(2)-linear in the coefficients of n (squaring
is the Frobenius).  Over F2(u) that is a bitmask linear system; over
F2(u)(Y) the coefficient recursion is triangular and bottoms out in the
field case.
"""

from __future__ import annotations

from .algebra import Poly, RatFunc
from .errors import InputError
from .fields import F2U, F2uElement, f2_mul, f2_sqrt


def _solve_gf2(columns: list[int], target: int):
    """Solve XOR(columns[i] for chosen i) = target; returns a pick mask."""
    basis = {}
    for idx, col in enumerate(columns):
        vec, combo = col, 1 << idx
        while vec:
            top = vec.bit_length() - 1
            if top in basis:
                bvec, bcombo = basis[top]
                vec ^= bvec
                combo ^= bcombo
            else:
                basis[top] = (vec, combo)
                break
    vec, combo = target, 0
    while vec:
        top = vec.bit_length() - 1
        if top not in basis:
            return None
        bvec, bcombo = basis[top]
        vec ^= bvec
        combo ^= bcombo
    return combo


def artin_schreier_root_in_f2u(a: F2uElement):
    """A root of X^2 + X + a in F2(u), or None; the other root is b + 1."""
    if not isinstance(a, F2uElement):
        raise InputError("expected an F2(u) element")
    d = f2_sqrt(a.den)
    if d is None:
        return None
    num = a.num
    num_deg = num.bit_length() - 1
    d_deg = d.bit_length() - 1
    bound = max(d_deg, num_deg // 2 + 1, num_deg - d_deg, 0)
    columns = [(1 << (2 * i)) ^ (f2_mul(1 << i, d)) for i in range(bound + 1)]
    picks = _solve_gf2(columns, num)
    if picks is None:
        return None
    n = 0
    for i in range(bound + 1):
        if (picks >> i) & 1:
            n |= 1 << i
    b = F2uElement(n, d)
    assert b * b + b == a
    return b


def _f2u_sqrt(c: F2uElement):
    return c.sqrt()


def poly_sqrt_char2(p: Poly):
    """Square root of a polynomial over F2(u), or None.

    Squares in characteristic 2 have only even-degree terms, with each
    coefficient itself a square.
    """
    if p.field is not F2U:
        raise InputError("expected a polynomial over F2(u)")
    if p.is_zero():
        return Poly.zero(p.field, p.var)
    if p.degree % 2:
        return None
    roots = []
    for i, c in enumerate(p.coeffs):
        if i % 2:
            if c:
                return None
        else:
            r = _f2u_sqrt(c)
            if r is None:
                return None
            roots.append(r)
    return Poly(p.field, roots, p.var)


def _preimage_poly_part(t: Poly):
    """Solve wp(q) = t for a polynomial q over F2(u), or None.

    Ascending coefficient recursion: q_0 is a field-level Artin-Schreier
    root of t_0, odd coefficients copy over, and each even coefficient is
    q_k = t_k + q_{k/2}^2.  A final exact verification catches any
    inconsistency in the tail.
    """
    zero = F2U.zero
    t0 = t.coefficient(0)
    q0 = artin_schreier_root_in_f2u(t0)
    if q0 is None:
        return None
    degree = t.degree if not t.is_zero() else 0
    coeffs = [q0]
    for k in range(1, int(degree) + 1):
        if k % 2:
            coeffs.append(t.coefficient(k))
        else:
            half = coeffs[k // 2]
            coeffs.append(t.coefficient(k) + half * half)
    q = Poly(t.field, coeffs, t.var)
    if q * q + q == t:
        return q
    return None


def _preimage_proper_part(num: Poly, den: Poly):
    """Solve wp(n/d) = num/den for a proper fraction, or None.

    ``den`` must be d^2 for the (unique) denominator d; the coefficients
    of n then come out of a descending triangular sweep of
    n^2 + n*d = num.
    """
    d = poly_sqrt_char2(den)
    if d is None:
        return None
    big_d = int(d.degree)
    n_coeffs = {j: F2U.zero for j in range(big_d)}
    for k in range(2 * big_d - 1, big_d - 1, -1):
        j = k - big_d
        acc = num.coefficient(k)
        for i in range(j + 1, big_d):
            acc = acc + n_coeffs[i] * d.coefficient(k - i)
        if k % 2 == 0:
            half = k // 2
            if half >= big_d:
                hv = F2U.zero
            else:
                hv = n_coeffs[half]
            acc = acc + hv * hv
        n_coeffs[j] = acc
    n = Poly(F2U, [n_coeffs[j] for j in range(big_d)], den.var)
    candidate = RatFunc(n, d)
    if candidate * candidate + candidate == RatFunc(num, den):
        return candidate
    return None


def artin_schreier_preimage(target: RatFunc):
    """A rational function b over F2(u) with b^2 + b = target, or None.

    Complete over F2(u)(Y): the polynomial part and the proper part of
    the target must each be hit separately (wp preserves the
    decomposition), and each subproblem is a forced triangular solve.
    None therefore certifies that X^2 + X + target is irreducible over
    F2(u)(Y).
    """
    if target.field is not F2U:
        raise InputError("expected a rational function over F2(u)")
    q_part, rem = divmod(target.num, target.den)
    q = _preimage_poly_part(q_part)
    if q is None:
        return None
    if rem.is_zero():
        b = RatFunc(q)
    else:
        proper = RatFunc(rem, target.den)
        r = _preimage_proper_part(proper.num, proper.den)
        if r is None:
            return None
        b = RatFunc(q) + r
    assert b * b + b == target
    return b
