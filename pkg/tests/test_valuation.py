"""Unit tests for exact p-adic valuations and combinatorial helpers."""
from fractions import Fraction

import pytest

from srt import (
    INFINITY,
    ExtendedRational,
    ceil_fraction,
    floor_fraction,
    fractional_part,
    multinomial,
    unit_part,
    vp,
)


class TestVp:
    def test_values(self):
        assert vp(250, 5) == Fraction(3)
        assert vp(Fraction(1, 25), 5) == Fraction(-2)
        assert vp(Fraction(-75, 8), 5) == Fraction(2)
        assert vp(Fraction(-75, 8), 2) == Fraction(-3)
        assert vp(6, 7) == Fraction(0)

    def test_zero_is_infinite(self):
        assert vp(0, 5).is_infinite
        assert vp(Fraction(0), 3) == INFINITY

    def test_bad_prime(self):
        with pytest.raises(ValueError):
            vp(10, 1)

    def test_normalization(self):
        # v(p) = 1 for every p
        for p in (2, 3, 5, 7, 11):
            assert vp(p, p) == Fraction(1)


class TestExtendedRational:
    def test_total_order_with_infinity(self):
        assert INFINITY > Fraction(10**9)
        assert not INFINITY < INFINITY
        assert INFINITY >= INFINITY
        assert INFINITY == ExtendedRational(None)
        assert ExtendedRational(Fraction(1, 3)) < ExtendedRational(Fraction(1, 2))

    def test_arithmetic(self):
        a = ExtendedRational(Fraction(3, 2))
        assert (a + Fraction(1, 2)).as_fraction() == 2
        assert (a * 2).as_fraction() == 3
        assert (INFINITY + a).is_infinite
        assert (INFINITY * 7).is_infinite

    def test_as_fraction_of_infinity_raises(self):
        with pytest.raises(ValueError):
            INFINITY.as_fraction()

    def test_hashable(self):
        assert len({ExtendedRational(1), ExtendedRational(Fraction(2, 2))}) == 1


class TestUnitPart:
    def test_values(self):
        assert unit_part(250, 5) == 2
        assert unit_part(Fraction(3, 50), 5) == Fraction(3, 2)

    def test_zero_raises(self):
        with pytest.raises(ValueError):
            unit_part(0, 5)

    def test_reconstruction(self):
        for x in (Fraction(44, 7), Fraction(-18, 125), Fraction(625)):
            v = int(vp(x, 5).as_fraction())
            assert unit_part(x, 5) * Fraction(5) ** v == x


class TestMultinomial:
    def test_values(self):
        assert multinomial(10, (3, 3, 4)) == 4200
        assert multinomial(5, (5,)) == 1
        assert multinomial(0, ()) == 1
        assert multinomial(0, (0,)) == 1

    def test_binomial_special_case(self):
        import math

        assert multinomial(12, (5, 7)) == math.comb(12, 5)

    def test_invalid(self):
        with pytest.raises(ValueError):
            multinomial(10, (3, 3))
        with pytest.raises(ValueError):
            multinomial(4, (-1, 5))


class TestRounding:
    def test_floor_ceil(self):
        assert floor_fraction(Fraction(7, 3)) == 2
        assert floor_fraction(Fraction(-7, 3)) == -3
        assert ceil_fraction(Fraction(7, 3)) == 3
        assert ceil_fraction(Fraction(-7, 3)) == -2
        assert ceil_fraction(Fraction(4)) == 4

    def test_fractional_part(self):
        assert fractional_part(Fraction(7, 3)) == Fraction(1, 3)
        assert fractional_part(Fraction(-7, 3)) == Fraction(2, 3)
        assert fractional_part(5) == 0
