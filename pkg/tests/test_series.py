from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from superpatterns import Polynomial, RationalFunction, binomial, moments_from_gf


def random_polynomial(rng, max_degree=4, nonzero_constant=False):
    coeffs = [Fraction(rng.randrange(-5, 6), rng.randrange(1, 5)) for _ in range(max_degree + 1)]
    if nonzero_constant and coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return Polynomial(coeffs)


class TestPolynomial:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
        assert Polynomial([0, 0]).is_zero()

    def test_degree(self):
        assert Polynomial([1, 2, 3]).degree == 2
        assert Polynomial([]).degree == -math.inf
        assert Polynomial([5]).degree == 0

    def test_evaluation_horner(self):
        p = Polynomial([1, -2, 3])  # 1 - 2t + 3t^2
        assert p(2) == 1 - 4 + 12
        assert p(Fraction(1, 2)) == Fraction(3, 4)

    def test_arithmetic(self):
        a = Polynomial([1, 1])
        b = Polynomial([2, 0, 1])
        assert (a + b) == Polynomial([3, 1, 1])
        assert (a - a).is_zero()
        assert (a * b) == Polynomial([2, 2, 1, 1])
        assert a * 3 == Polynomial([3, 3])
        assert (a**3) == Polynomial([1, 3, 3, 1])

    def test_monomial(self):
        assert Polynomial.monomial(3) == Polynomial([0, 0, 0, 1])
        assert Polynomial.monomial(2, 5)(2) == 20

    def test_derivative(self):
        assert Polynomial.monomial(3).derivative() == Polynomial([0, 0, 3])
        assert Polynomial([7]).derivative().is_zero()

    def test_product_degree_adds(self):
        rng = random.Random(5)
        for _ in range(50):
            a = random_polynomial(rng)
            b = random_polynomial(rng)
            if a.is_zero() or b.is_zero():
                assert (a * b).is_zero()
            else:
                assert (a * b).degree == a.degree + b.degree

    def test_immutability(self):
        p = Polynomial([1])
        with pytest.raises(AttributeError):
            p.coefficients = (Fraction(2),)


class TestRationalFunction:
    def test_geometric_series(self):
        f = RationalFunction(Polynomial([1]), Polynomial([1, -1]))
        assert f.series_coefficients(3) == [1, 1, 1, 1]

    def test_shifted_squared_geometric(self):
        # t^3 / (2 - t)^2 has coefficients (n-2) / 2^(n-1) from n = 3 on
        f = RationalFunction(Polynomial.monomial(3), Polynomial([2, -1]) ** 2)
        coeffs = f.series_coefficients(5)
        assert coeffs[3] == Fraction(1, 4)
        assert coeffs[4] == Fraction(1, 4)
        assert coeffs[5] == Fraction(3, 16)

    def test_pole_raises(self):
        f = RationalFunction(Polynomial([1]), Polynomial([1, -1]))
        with pytest.raises(ZeroDivisionError):
            f.evaluate(1)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction(Polynomial([1]), Polynomial([]))

    def test_series_needs_expandable_point(self):
        f = RationalFunction(Polynomial([1]), Polynomial([0, 1]))
        with pytest.raises(ValueError):
            f.series_coefficients(3)

    def test_series_round_trip(self):
        # den * series == num modulo t^(N+1)
        rng = random.Random(17)
        N = 12
        for _ in range(40):
            num = random_polynomial(rng)
            den = random_polynomial(rng, nonzero_constant=True)
            f = RationalFunction(num, den)
            series = Polynomial(f.series_coefficients(N))
            product = series * den
            for power in range(N + 1):
                assert product.coefficient(power) == num.coefficient(power)

    def test_series_linearity(self):
        rng = random.Random(23)
        N = 10
        for _ in range(25):
            f = RationalFunction(random_polynomial(rng), random_polynomial(rng, nonzero_constant=True))
            g = RationalFunction(random_polynomial(rng), random_polynomial(rng, nonzero_constant=True))
            lhs = (f + g).series_coefficients(N)
            fs = f.series_coefficients(N)
            gs = g.series_coefficients(N)
            assert lhs == [a + b for a, b in zip(fs, gs)]

    def test_derivative_matches_series_shift(self):
        rng = random.Random(31)
        N = 10
        for _ in range(25):
            f = RationalFunction(random_polynomial(rng), random_polynomial(rng, nonzero_constant=True))
            df = f.derivative()
            cs = f.series_coefficients(N + 1)
            expected = [n * cs[n] for n in range(1, N + 1)]
            assert df.series_coefficients(N - 1) == expected[: N]

    def test_derivative_simple(self):
        f = RationalFunction(Polynomial.monomial(3), Polynomial([1]))
        df = f.derivative()
        assert df.evaluate(2) == 12
        # as a function, df == 3t^2
        assert df == RationalFunction(Polynomial([0, 0, 3]), Polynomial([1]))

    def test_function_equality_up_to_cancellation(self):
        f = RationalFunction(Polynomial([0, 1]), Polynomial([1, 1]))
        g = RationalFunction(Polynomial([0, 2]), Polynomial([2, 2]))
        assert f == g


class TestMoments:
    def test_requires_normalization(self):
        f = RationalFunction(Polynomial([2]), Polynomial([1]))
        with pytest.raises(ValueError):
            moments_from_gf(f)

    def test_point_mass(self):
        # generating function t^5: deterministic value 5
        f = RationalFunction(Polynomial.monomial(5), Polynomial([1]))
        mean, variance = moments_from_gf(f)
        assert mean == 5
        assert variance == 0

    def test_geometric_distribution(self):
        # P(n) = (1/2)^n for n >= 1: gf = t / (2 - t); mean 2, variance 2
        f = RationalFunction(Polynomial([0, 1]), Polynomial([2, -1]))
        mean, variance = moments_from_gf(f)
        assert mean == 2
        assert variance == 2


class TestBinomial:
    def test_values(self):
        assert binomial(5, 3) == 10
        assert binomial(6, 5) == 6
        assert binomial(7, 0) == 1

    def test_out_of_range_is_zero(self):
        assert binomial(4, 5) == 0
        assert binomial(4, -1) == 0

    def test_pascal_identity(self):
        for n in range(1, 12):
            for k in range(0, n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestFractionLaws:
    def test_field_laws_on_samples(self):
        rng = random.Random(41)
        values = [Fraction(rng.randrange(-30, 30), rng.randrange(1, 30)) for _ in range(30)]
        for a, b, c in zip(values, values[1:], values[2:]):
            assert a + b == b + a
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a + b - b == a

    def test_canonical_form(self):
        assert Fraction(42, 2187) == Fraction(14, 729)
        assert str(Fraction(42, 2187)) == "14/729"
        assert Fraction(0, 5) == Fraction(0, 1)
