"""Exact polynomial arithmetic in the monomial basis."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from convfib.poly import Poly


class TestConstruction:
    def test_zero_polynomial_has_degree_minus_one(self):
        assert Poly.zero().degree == -1
        assert Poly.zero().coefficients == ()
        assert Poly.zero().is_zero()

    def test_trailing_zeros_are_trimmed(self):
        assert Poly([1, 2, 0, 0]).degree == 1
        assert Poly([0, 0, 0]).degree == -1

    def test_constant_and_x(self):
        assert Poly.constant(5).degree == 0
        assert Poly.x().degree == 1
        assert Poly.constant(0) == Poly.zero()

    def test_coefficient_beyond_degree_is_zero(self):
        assert Poly([1, 2]).coefficient(7) == 0


class TestArithmetic:
    def test_x_times_x_plus_one(self):
        """x * (x+1) = x^2 + x."""
        assert Poly.x() * Poly([1, 1]) == Poly([0, 1, 1])

    def test_add_sub_neg(self):
        p = Poly([1, 2, 3])
        q = Poly([4, -2, -3])
        assert p + q == Poly([5])
        assert p - p == Poly.zero()
        assert -p == Poly([-1, -2, -3])

    def test_scalar_operations(self):
        p = Poly([1, 2])
        assert 3 * p == Poly([3, 6])
        assert p * Fraction(1, 2) == Poly([Fraction(1, 2), 1])
        assert p / 2 == Poly([Fraction(1, 2), 1])

    def test_division_by_zero_scalar(self):
        with pytest.raises(ZeroDivisionError):
            Poly([1]) / 0

    def test_multiplication_by_zero(self):
        assert Poly([1, 2, 3]) * Poly.zero() == Poly.zero()
        assert Poly([1, 2, 3]) * 0 == Poly.zero()

    def test_ring_axioms_on_random_polynomials(self):
        """Commutativity, associativity and distributivity, exactly."""
        rng = random.Random(7)

        def rand_poly():
            return Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(0, 6))])

        for _ in range(50):
            a, b, c = rand_poly(), rand_poly(), rand_poly()
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


class TestEvaluation:
    def test_known_value(self):
        """eval(x^2 + 3x, 1) = 4, the n = 2 instance of p_n(1) = n! F_n."""
        assert Poly([0, 3, 1]).evaluate(1) == 4

    def test_zero_polynomial_evaluates_to_zero(self):
        assert Poly.zero().evaluate(Fraction(22, 7)) == 0

    def test_horner_matches_power_sum_oracle(self):
        """The Horner scheme agrees with the literal sum of c_k v^k."""
        rng = random.Random(11)
        for _ in range(40):
            coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 8))]
            p = Poly(coeffs)
            v = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
            expected = sum((c * v**k for k, c in enumerate(coeffs)), Fraction(0))
            assert p.evaluate(v) == expected

    def test_call_alias(self):
        assert Poly([0, 1])(Fraction(3, 2)) == Fraction(3, 2)


class TestDisplay:
    def test_str_forms(self):
        assert str(Poly.zero()) == "0"
        assert str(Poly([0, 3, 1])) == "x^2 + 3*x"
        assert str(Poly([-1, 0, 1])) == "x^2 - 1"
