"""
Tests for exact scalars, polynomials, determinants and root finding
"""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plastic_kit.errors import DegenerateDenominator, ZeroConstantTerm
from plastic_kit.models.matrix import Mat3, det3
from plastic_kit.models.poly import Poly, RatFun
from plastic_kit.services.numeric_service import NumericService

small = st.integers(min_value=-20, max_value=20)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=9)


class TestPoly:

    def test_trailing_zeros_are_stripped(self):
        assert Poly((1, 2, 0, 0)).coefficients == (1, 2)
        assert Poly((0, 0)).is_zero()
        assert Poly().degree == -math.inf

    def test_arithmetic_with_scalars(self):
        y = Poly.monomial(1, 1)
        p = 1 - y * y
        assert p == Poly((1, 0, -1))
        assert 2 * p + 3 == Poly((5, 0, -2))
        assert (p - 1) == Poly((0, 0, -1))

    def test_divmod(self):
        # (y^3 - 1) = (y - 1)(y^2 + y + 1)
        quotient, remainder = Poly((-1, 0, 0, 1)).divmod(Poly((-1, 1)))
        assert quotient == Poly((1, 1, 1))
        assert remainder.is_zero()

    def test_divmod_by_zero(self):
        with pytest.raises(DegenerateDenominator):
            Poly((1, 1)).divmod(Poly())

    def test_evaluation(self):
        assert Poly((1, 0, -1, -1))(Fraction(1, 2)) == Fraction(5, 8)

    @given(st.lists(small, max_size=5), st.lists(small, max_size=5), small)
    def test_product_evaluates_to_product_of_values(self, a, b, point):
        p, q = Poly(a), Poly(b)
        assert (p * q)(point) == p(point) * q(point)


class TestRatFun:

    def test_zero_denominator_rejected(self):
        with pytest.raises(DegenerateDenominator):
            RatFun(Poly((1,)), Poly())

    def test_equality_is_cross_multiplicative(self):
        assert RatFun(Poly((1,)), Poly((1, -1))) == RatFun(Poly((2,)), Poly((2, -2)))


class TestDeterminant:

    def test_padovan_matrix_at_five(self):
        assert det3(Mat3(((2, 1, 1), (2, 2, 1), (1, 1, 1)))) == 1

    def test_singular(self):
        assert det3(Mat3(((1, 2, 3), (2, 4, 6), (0, 1, 5)))) == 0

    def test_rationals(self):
        m = Mat3(((Fraction(1, 2), 0, 0), (0, Fraction(2, 3), 0), (0, 0, 3)))
        assert NumericService.det3(m) == 1

    def test_polynomial_entries(self):
        y = Poly.monomial(1, 1)
        m = Mat3(((1, -y, 0), (-y, 1, -y), (-y, 0, 1)))
        assert det3(m) == Poly((1, 0, -1, -1))

    def test_shape_is_checked(self):
        with pytest.raises(ValueError):
            Mat3(((1, 2), (3, 4)))

    @settings(max_examples=50)
    @given(st.lists(small, min_size=9, max_size=9), st.lists(small, min_size=9, max_size=9))
    def test_multiplicative(self, a, b):
        m = Mat3((a[0:3], a[3:6], a[6:9]))
        n = Mat3((b[0:3], b[3:6], b[6:9]))
        assert det3(m @ n) == det3(m) * det3(n)

    @settings(max_examples=100)
    @given(st.lists(rationals, min_size=9, max_size=9), st.integers(min_value=0, max_value=2), rationals)
    def test_linear_in_each_row(self, entries, row, factor):
        m = Mat3((entries[0:3], entries[3:6], entries[6:9]))
        assert det3(m.scale_row(row, factor)) == factor * det3(m)


class TestSeriesExpand:

    def test_geometric(self):
        series = NumericService.series_expand(RatFun(Poly((1,)), Poly((1, -1))), 4)
        assert series == [1, 1, 1, 1, 1]
        assert series.order == 4

    def test_padovan_generating_function(self):
        series = NumericService.series_expand(RatFun(Poly((1, 1)), Poly((1, 0, -1, -1))), 9)
        assert series == [1, 1, 1, 2, 2, 3, 4, 5, 7, 9]

    def test_squared_denominator(self):
        # y/(1 - y)^2
        series = NumericService.series_expand(RatFun(Poly((0, 1)), Poly((1, -2, 1))), 3)
        assert series == [0, 1, 2, 3]

    @pytest.mark.parametrize('f', [
        RatFun(Poly((1, 1)), Poly((1, 0, -1, -1))),
        RatFun(Poly((0, 1)), Poly((1, -2, 1))),
        RatFun(Poly((Fraction(1, 3), -2, 5)), Poly((2, 1, 0, Fraction(-1, 2)))),
    ])
    def test_truncation_matches_shorter_expansion(self, f):
        full = NumericService.series_expand(f, 15)
        for order in range(12):
            assert full.truncate(order) == NumericService.series_expand(f, order)

    def test_zero_constant_term(self):
        with pytest.raises(ZeroConstantTerm):
            NumericService.series_expand(RatFun(Poly((1,)), Poly((0, 1))), 3)

    def test_negative_order(self):
        with pytest.raises(ValueError):
            NumericService.series_expand(RatFun(Poly((1,)), Poly((1,))), -1)


class TestCubicRoots:

    def test_plastic_number(self):
        roots = NumericService.cubic_roots()
        assert roots.alpha == pytest.approx(1.324717957244746, abs=1e-14)
        assert roots.gamma == roots.beta.conjugate()

    def test_roots_solve_the_cubic(self):
        for r in NumericService.cubic_roots().as_tuple():
            assert abs(r ** 3 - r - 1) < 1e-12

    def test_vieta(self):
        a, b, c = NumericService.cubic_roots().as_tuple()
        assert abs(a + b + c) < 1e-12
        assert abs(a * b * c - 1) < 1e-12

    def test_vandermonde_modulus(self):
        assert abs(NumericService.vandermonde()) == pytest.approx(math.sqrt(23), abs=1e-9)
