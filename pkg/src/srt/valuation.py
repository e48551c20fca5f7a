"""
Exact p-adic valuations over the rationals.

Valuations take values in (1/N)Z for various N, so everything here is built on
``fractions.Fraction``, extended by a single infinite element for v(0).
"""
from __future__ import annotations

import math
from fractions import Fraction


class ExtendedRational:
    """A rational number or +infinity, totally ordered.

    Supports the arithmetic a valuation needs: addition with rationals and
    with other extended rationals (inf + x = inf), comparison, and scaling by
    a nonnegative rational.
    """

    __slots__ = ("value",)

    def __init__(self, value=None):
        if value is None:
            self.value = None  # infinity
        else:
            self.value = Fraction(value)

    @property
    def is_infinite(self):
        return self.value is None

    def _coerce(self, other):
        if isinstance(other, ExtendedRational):
            return other
        return ExtendedRational(other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_infinite or other.is_infinite:
            return INFINITY
        return ExtendedRational(self.value + other.value)

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_infinite or other.is_infinite:
            return INFINITY
        return ExtendedRational(self.value * other.value)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other):
        other = self._coerce(other)
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.value < other.value

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        if self.is_infinite:
            return "inf"
        return str(self.value)

    def as_fraction(self):
        if self.is_infinite:
            raise ValueError("infinite valuation has no rational value")
        return self.value


INFINITY = ExtendedRational()


def vp(x, p) -> ExtendedRational:
    """p-adic valuation of a rational number, normalized so vp(p) = 1.

    Args:
        x: int or Fraction (or anything Fraction accepts).
        p: prime.

    Returns:
        ExtendedRational; INFINITY for x = 0.
    """
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    x = Fraction(x)
    if x == 0:
        return INFINITY
    v = 0
    num = x.numerator
    den = x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return ExtendedRational(v)


def unit_part(x, p) -> Fraction:
    """x / p^vp(x) as an exact rational; the p-adic unit part of x != 0."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no unit part")
    v = vp(x, p).as_fraction()
    return x / Fraction(p) ** int(v)


def multinomial(q, parts):
    """Exact multinomial coefficient q! / (r_1! ... r_n!).

    Args:
        q: nonnegative integer.
        parts: iterable of nonnegative integers summing to q.
    """
    parts = list(parts)
    if any(r < 0 for r in parts) or q < 0:
        raise ValueError(f"negative arguments: q={q}, parts={parts}")
    if sum(parts) != q:
        raise ValueError(f"parts {parts} do not sum to {q}")
    out = math.factorial(q)
    for r in parts:
        out //= math.factorial(r)
    return out


def floor_fraction(x) -> int:
    """Floor of a Fraction as an int."""
    x = Fraction(x)
    return x.numerator // x.denominator


def ceil_fraction(x) -> int:
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)


def fractional_part(x) -> Fraction:
    x = Fraction(x)
    return x - floor_fraction(x)
