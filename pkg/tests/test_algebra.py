"""Polynomial and rational-function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totsadic import (F2U, GF2, InputError, Poly, QQ, RatFunc,
                      poly_derivative, poly_gcd, poly_square_root,
                      poly_square_root_check, ratfunc_valuation)
from totsadic.algebra import poly_irreducible
from totsadic.fields import F2uElement

from oracles import poly_divides


def qpoly(*coeffs):
    return Poly(QQ, [Fraction(c) for c in coeffs])


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
small_qpolys = st.lists(rationals, min_size=0, max_size=5).map(
    lambda cs: Poly(QQ, cs))
nonzero_qpolys = small_qpolys.filter(lambda p: not p.is_zero())


class TestPoly:
    def test_trailing_zeros_stripped(self):
        assert qpoly(1, 2, 0, 0).coeffs == (Fraction(1), Fraction(2))

    def test_zero_degree_marker(self):
        assert qpoly().degree == float("-inf")
        assert qpoly(5).degree == 0

    def test_degree_arithmetic_with_zero(self):
        assert qpoly().degree + 3 == float("-inf")

    def test_mul_divmod_roundtrip(self):
        a = qpoly(1, 0, 2, 1)
        b = qpoly(-1, 1)
        q, r = divmod(a, b)
        assert q * b + r == a

    def test_eval_horner(self):
        f = qpoly(Fraction(-9, 16), 1, 1)
        assert f(Fraction(9, 16)) == Fraction(81, 256)

    def test_compose(self):
        f = qpoly(0, 0, 1)          # X^2
        g = qpoly(1, 1)             # X + 1
        assert f.compose(g) == qpoly(1, 2, 1)

    def test_mixed_fields_rejected(self):
        with pytest.raises(InputError):
            qpoly(1, 1) + Poly(GF2, [GF2.one])


class TestPolyGcd:
    def test_shared_linear_factor(self):
        assert poly_gcd(qpoly(-1, 0, 1), qpoly(-1, 1)) == qpoly(-1, 1)

    def test_x_squared_plus_x(self):
        assert poly_gcd(qpoly(0, 1, 1), qpoly(1, 1)) == qpoly(1, 1)

    def test_cyclotomic_pair_divides(self):
        # oracle: long division confirms Y^2+Y+1 divides Y^4+Y^2+1
        a = qpoly(1, 0, 1, 0, 1)
        b = qpoly(1, 1, 1)
        assert poly_divides(b, a)
        assert poly_gcd(a, b) == b

    def test_gcd_zero_zero(self):
        assert poly_gcd(qpoly(), qpoly()).is_zero()

    @given(a=small_qpolys, b=small_qpolys, c=nonzero_qpolys)
    @settings(max_examples=60, deadline=None)
    def test_common_factor_extraction(self, a, b, c):
        lhs = poly_gcd(a * c, b * c)
        rhs = poly_gcd(a, b) * c
        assert lhs == rhs.monic() or (lhs.is_zero() and rhs.is_zero())


class TestDerivative:
    def test_rational_quadratic(self):
        assert poly_derivative(qpoly(Fraction(-9, 16), 1, 1)) == qpoly(1, 2)

    def test_char2_kills_even_powers(self):
        f = Poly(GF2, [GF2.zero, GF2.one, GF2.one])   # u^2 + u
        assert poly_derivative(f) == Poly(GF2, [GF2.one])

    def test_constant(self):
        assert poly_derivative(qpoly(7)).is_zero()


class TestPolySquareRoot:
    def test_perfect_square(self):
        assert poly_square_root(qpoly(1, 0, 2, 0, 1)) == qpoly(1, 0, 1)

    def test_boundary_identity(self):
        # (Y^2-1)^2 + 4Y^2 expands to Y^4 + 2Y^2 + 1 = (Y^2+1)^2
        h = qpoly(-1, 0, 1) ** 2 + 4 * qpoly(0, 0, 1)
        assert h == qpoly(1, 0, 2, 0, 1)
        assert poly_square_root(h) == qpoly(1, 0, 1)

    def test_nonsquare_with_transcript(self):
        # (Y^2+3)^2 + 36Y^2: matching forces the candidate Y^2+21,
        # whose square misses by a constant
        h = qpoly(3, 0, 1) ** 2 + 36 * qpoly(0, 0, 1)
        check = poly_square_root_check(h)
        assert not check.is_square
        assert check.candidate == qpoly(21, 0, 1)
        assert check.candidate ** 2 + check.residual == h
        assert not check.residual.is_zero()

    def test_odd_degree(self):
        check = poly_square_root_check(qpoly(1, 2, 0, 1))
        assert not check.is_square
        assert check.reason == "odd degree"

    def test_char2_rejected(self):
        with pytest.raises(InputError):
            poly_square_root(Poly(GF2, [GF2.one]))

    @given(s=nonzero_qpolys)
    @settings(max_examples=60, deadline=None)
    def test_square_roundtrip(self, s):
        root = poly_square_root(s * s)
        assert root is not None
        assert root == s or root == -s

    @given(h=nonzero_qpolys.filter(lambda p: p.degree >= 1
                                   and p.degree % 2 == 1))
    @settings(max_examples=40, deadline=None)
    def test_odd_degree_never_square(self, h):
        assert poly_square_root(h) is None


def f2u(num, den=1):
    return F2uElement(num, den)


class TestRatFunc:
    def test_normalization_idempotent(self):
        r = RatFunc(qpoly(0, 2, 2), qpoly(0, 4))
        again = RatFunc(r.num, r.den)
        assert r == again
        assert r.den.is_monic()

    def test_cross_multiplication_equality(self):
        assert RatFunc(qpoly(0, 1), qpoly(0, 0, 1)) == RatFunc(qpoly(1),
                                                               qpoly(0, 1))

    def test_valuation_example_f2u(self):
        # uY/(Y^2+u) has a simple pole at Y^2+u
        u = f2u(0b10)
        num = Poly(F2U, [F2U.zero, u], "Y")
        den = Poly(F2U, [u, F2U.zero, F2U.one], "Y")
        r = RatFunc(num, den)
        assert ratfunc_valuation(r, den) == -1

    def test_valuation_at_linear(self):
        r = RatFunc(qpoly(0, 0, 0, 1), qpoly(1, 1))
        assert ratfunc_valuation(r, qpoly(0, 1)) == 3

    def test_valuation_of_zero(self):
        r = RatFunc(qpoly())
        assert ratfunc_valuation(r, qpoly(0, 1)) == float("inf")

    def test_reducible_modulus_rejected(self):
        with pytest.raises(InputError):
            ratfunc_valuation(RatFunc(qpoly(1)), qpoly(-1, 0, 1))

    @given(a=nonzero_qpolys, b=nonzero_qpolys, c=nonzero_qpolys,
           d=nonzero_qpolys)
    @settings(max_examples=40, deadline=None)
    def test_valuation_is_multiplicative(self, a, b, c, d):
        p = qpoly(0, 1)
        r1, r2 = RatFunc(a, b), RatFunc(c, d)
        v1 = ratfunc_valuation(r1, p)
        v2 = ratfunc_valuation(r2, p)
        assert ratfunc_valuation(r1 * r2, p) == v1 + v2

    @given(a=nonzero_qpolys, b=nonzero_qpolys, c=nonzero_qpolys,
           d=nonzero_qpolys)
    @settings(max_examples=40, deadline=None)
    def test_valuation_ultrametric_inequality(self, a, b, c, d):
        p = qpoly(0, 1)
        r1, r2 = RatFunc(a, b), RatFunc(c, d)
        total = ratfunc_valuation(r1 + r2, p)
        assert total >= min(ratfunc_valuation(r1, p),
                            ratfunc_valuation(r2, p))


class TestIrreducibility:
    def test_linear(self):
        assert poly_irreducible(qpoly(-5, 1))

    def test_quadratic_by_discriminant(self):
        assert poly_irreducible(qpoly(1, 0, 1))
        assert not poly_irreducible(qpoly(-1, 0, 1))

    def test_char2_quadratic(self):
        u = f2u(0b10)
        assert poly_irreducible(Poly(F2U, [u, F2U.zero, F2U.one], "Y"))
        usq = f2u(0b100)
        assert not poly_irreducible(Poly(F2U, [usq, F2U.zero, F2U.one], "Y"))
