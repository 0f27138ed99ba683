"""Independent oracles for the test suite.

Everything here re-derives expected values by a different route than the
library (long division, exhaustive enumeration, bisection, coefficient
recursions), so a library bug cannot hide behind a matching bug.
"""

from __future__ import annotations

import math
from fractions import Fraction

from totsadic import F2uElement, Poly, QQ
from totsadic.fields import f2_gcd, f2_mul


def poly_divides(d: Poly, a: Poly) -> bool:
    """Long-division check that d | a."""
    _, r = divmod(a, d)
    return r.is_zero()


def smallest_uniformizer_q(primes, bound=10_000_000):
    """Exhaustive search for the least positive integer with v_p = 1 at all p."""
    for n in range(1, bound):
        if all(n % p == 0 and (n // p) % p != 0 for p in primes):
            return Fraction(n)
    raise AssertionError("no uniformizer below bound")


def squares_mod(m: int) -> set:
    return {r * r % m for r in range(m)}


def int_valuation(n: int, p: int) -> int:
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(x: Fraction, p: int):
    if x == 0:
        return math.inf
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def newton_iterates(c: Fraction, start: Fraction, steps: int):
    """Plain rational Newton on X^2 + X - c from ``start``."""
    x = start
    out = [x]
    for _ in range(steps):
        x = x - (x * x + x - c) / (2 * x + 1)
        out.append(x)
    return out


# ---------------------------------------------------------------------------
# Interval-bisection real-root counting for squarefree degree <= 3.
# ---------------------------------------------------------------------------

def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _eval(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sign_near(coeffs, lo: Fraction, hi: Fraction, bound: Fraction) -> int:
    """Sign of the polynomial at the critical point isolated in (lo, hi).

    Bisects on the derivative's sign change; stops once the midpoint
    value exceeds width * max|f'| on the search box, which certifies (by
    the mean value theorem) that the polynomial does not vanish on the
    interval, so the midpoint sign is the sign at the critical point.
    Terminates because a squarefree polynomial cannot vanish where its
    derivative does.
    """
    d = [i * coeffs[i] for i in range(1, len(coeffs))]
    slope_cap = sum(abs(c) * bound ** i for i, c in enumerate(d)) + 1
    while True:
        mid = (lo + hi) / 2
        fmid = _eval(coeffs, mid)
        if fmid != 0 and abs(fmid) > (hi - lo) * slope_cap:
            return _sign(fmid)
        if _sign(_eval(d, lo)) * _sign(_eval(d, mid)) <= 0:
            hi = mid
        else:
            lo = mid


def count_real_roots_bisection(coeffs) -> int:
    """Distinct real roots of a squarefree polynomial of degree 1..3.

    Splits the line at the (exactly isolated) critical points and counts
    sign changes across the resulting monotone pieces.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    lead = coeffs[-1]
    bound = 1 + max(abs(c / lead) for c in coeffs)
    if deg == 1:
        return 1
    if deg == 2:
        vertex = -coeffs[1] / (2 * coeffs[2])
        inner = _sign(_eval(coeffs, vertex))
        assert inner != 0, "squarefree quadratic cannot vanish at the vertex"
        return 2 if inner != _sign(lead) else 0
    assert deg == 3
    a3, a2, a1 = coeffs[3], coeffs[2], coeffs[1]
    disc_prime = (2 * a2) ** 2 - 4 * (3 * a3) * a1
    if disc_prime <= 0:
        return 1  # monotone up to an inflection: exactly one real root
    vertex = -a2 / (3 * a3)
    # enlarge the box so it also contains both critical points
    bound = bound + 1 + max(abs(2 * a2 / (3 * a3)), abs(a1 / (3 * a3)))
    signs = [_sign(_eval(coeffs, -bound)),
             _sign_near(coeffs, -bound, vertex, bound),
             _sign_near(coeffs, vertex, bound, bound),
             _sign(_eval(coeffs, bound))]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


# ---------------------------------------------------------------------------
# Characteristic-2 series and Artin-Schreier brute force.
# ---------------------------------------------------------------------------

def series_root_coeffs(target_coeffs, n: int) -> list:
    """Solve a_k + a_{k//2}[k even] = target_k over GF(2), k = 1..n.

    The coefficient recursion for a power-series root of X^2 + X = target
    when the target has positive valuation (squaring doubles exponents in
    characteristic 2).
    """
    a = [0] * (n + 1)
    for k in range(1, n + 1):
        t_k = target_coeffs[k] if k < len(target_coeffs) else 0
        a[k] = t_k ^ (a[k // 2] if k % 2 == 0 else 0)
    return a[1:]


def geometric_series_coeffs(n: int) -> list:
    """Coefficients of u/(1+u) = u + u^2 + u^3 + ... over GF(2)."""
    return [0] + [1] * n


def brute_force_artin_schreier_f2u(target: F2uElement, max_degree: int):
    """Exhaustive search for b = n/d with b^2 + b = target, degrees bounded.

    Pure enumeration over all packed-poly pairs; used to validate the
    library's complete solver on small instances.
    """
    top = 1 << (max_degree + 1)
    for den in range(1, top):
        for num in range(top):
            if f2_gcd(num, den) not in (0, 1):
                continue
            b = F2uElement(num, den)
            if b * b + b == target:
                return b
    return None


def f2_square_mask(mask: int) -> int:
    return f2_mul(mask, mask)


def rational_poly(coeffs) -> Poly:
    return Poly(QQ, [Fraction(c) for c in coeffs])
