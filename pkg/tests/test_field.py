"""Exact quadratic-field arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from partlin.field import (
    FieldElem,
    FieldZeroDivision,
    ONE,
    RadicandMismatch,
    ZERO,
    inv_sqrt_elem,
    parse_field_elem,
    sqrt_elem,
)


def fe(a, b=0, rad=1):
    return FieldElem(Fraction(a), Fraction(b), rad)


class TestBasics:
    def test_conjugate_product(self):
        x = fe(1, 1, 5)
        y = fe(1, -1, 5)
        assert x * y == fe(-4)

    def test_inverse_golden(self):
        x = fe(1, 1, 5)
        assert x.inverse() == fe(Fraction(-1, 4), Fraction(1, 4), 5)
        assert x * x.inverse() == ONE

    def test_perfect_square_folds(self):
        assert fe(0, 1, 9) == fe(3)
        assert fe(1, Fraction(1, 2), 4) == fe(2)
        assert fe(0, 1, 9).rad == 1

    def test_zero_b_normalizes_rad(self):
        assert fe(5, 0, 7).rad == 1
        assert fe(5, 0, 7) == fe(5, 0, 3)

    def test_radicand_mismatch(self):
        with pytest.raises(RadicandMismatch):
            fe(0, 1, 2) + fe(0, 1, 3)

    def test_rational_mixes_with_anything(self):
        assert fe(2) + fe(0, 1, 7) == fe(2, 1, 7)

    def test_zero_inverse_raises(self):
        with pytest.raises(FieldZeroDivision):
            ZERO.inverse()

    def test_pow(self):
        s = sqrt_elem(5)
        assert s ** 2 == fe(5)
        assert s ** 3 == fe(0, 5, 5)
        assert (ONE + s) ** 0 == ONE
        assert s ** -2 == fe(Fraction(1, 5))

    def test_inv_sqrt(self):
        assert inv_sqrt_elem(7) * sqrt_elem(7) == ONE

    def test_float_embedding(self):
        assert abs(float(fe(1, 1, 2)) - 2.414213562) < 1e-8

    def test_division(self):
        x = fe(3, 2, 5)
        y = fe(1, -1, 5)
        assert (x / y) * y == x


class TestParsePrint:
    @pytest.mark.parametrize(
        "value",
        [
            fe(Fraction(1, 3)),
            fe(Fraction(-1, 3), Fraction(1, 3), 5),
            fe(0, Fraction(-2, 7), 5),
            fe(0, 1, 5),
            fe(4),
            ZERO,
        ],
    )
    def test_round_trip(self, value):
        assert parse_field_elem(str(value), 5) == value

    def test_parse_forms(self):
        assert parse_field_elem("1/2 + 3/2 r", 5) == fe(
            Fraction(1, 2), Fraction(3, 2), 5
        )
        assert parse_field_elem("-r", 5) == fe(0, -1, 5)
        assert parse_field_elem("2", 5) == fe(2)


coeffs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def elems(rad):
    return st.builds(lambda a, b: FieldElem(a, b, rad), coeffs, coeffs)


class TestAxioms:
    @given(elems(5), elems(5), elems(5))
    def test_ring_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x

    @given(elems(3))
    def test_inverse_axiom(self, x):
        if x:
            assert x * x.inverse() == ONE

    @given(elems(7))
    def test_print_parse(self, x):
        assert parse_field_elem(str(x), 7) == x

    @given(elems(2), elems(2))
    def test_float_homomorphism(self, x, y):
        assert abs(float(x * y) - float(x) * float(y)) < 1e-6
