"""
Independent exact-arithmetic oracle used by the test suite.

Implements Q[pi]/(pi^n - p) with Fraction coefficients, entirely separate
from the package under test: no imports from srt.  Elements are polynomials
of degree < n in the uniformizer pi, with pi^n = p.  The valuation is
normalized so v(p) = 1, hence v(pi) = 1/n.
"""
from __future__ import annotations

from fractions import Fraction


def vp_int(x, p):
    """p-adic valuation of a nonzero integer."""
    x = abs(int(x))
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def vp_fraction(x, p):
    """p-adic valuation of a nonzero Fraction (or int)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is infinite")
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


def rational_mod(x, m, p):
    """x mod m for a Fraction x with denominator prime to p (m a power of p)."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"denominator of {x} not prime to {p}")
    return x.numerator * pow(x.denominator, -1, m) % m


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        coeff = a[-1] / b[-1]
        deg = len(a) - len(b)
        q[deg] = coeff
        for i, bc in enumerate(b):
            a[deg + i] -= coeff * bc
        a.pop()
    return q, a


def _poly_ext_gcd(a, b):
    """(g, u, v) with u*a + v*b = g over Q[x]."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    t0, t1 = [Fraction(0)], [Fraction(1)]

    def trim(x):
        x = list(x)
        while x and x[-1] == 0:
            x.pop()
        return x

    def sub_mul(x, q, y):
        out = list(x) + [Fraction(0)] * max(0, len(q) + len(y) - 1 - len(x))
        for i, qc in enumerate(q):
            if qc == 0:
                continue
            for j, yc in enumerate(y):
                out[i + j] -= qc * yc
        return trim(out)

    r0, r1 = trim(r0), trim(r1)
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, trim(r)
        s0, s1 = s1, sub_mul(s0, q, s1)
        t0, t1 = t1, sub_mul(t0, q, t1)
    return r0, s0, t0


class PiExt:
    """Element of Q[pi]/(pi^n - p): exact arithmetic, no precision loss."""

    __slots__ = ("coeffs", "n", "p")

    def __init__(self, coeffs, n=5, p=5):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > n:
            # reduce pi^n -> p
            for i in range(len(coeffs) - 1, n - 1, -1):
                coeffs[i - n] += p * coeffs[i]
                coeffs[i] = Fraction(0)
        coeffs = coeffs[:n] + [Fraction(0)] * (n - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.n = n
        self.p = p

    @classmethod
    def from_rational(cls, x, n=5, p=5):
        return cls([Fraction(x)], n, p)

    @classmethod
    def pi(cls, n=5, p=5):
        return cls([0, 1], n, p)

    def __eq__(self, other):
        other = self._coerce(other)
        return self.coeffs == other.coeffs

    def _coerce(self, other):
        if isinstance(other, PiExt):
            return other
        return PiExt.from_rational(other, self.n, self.p)

    def __add__(self, other):
        other = self._coerce(other)
        return PiExt(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.n, self.p
        )

    __radd__ = __add__

    def __neg__(self):
        return PiExt([-a for a in self.coeffs], self.n, self.p)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        n, p = self.n, self.p
        out = [Fraction(0)] * (2 * n)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PiExt(out, n, p)

    __rmul__ = __mul__

    def inverse(self):
        modulus = [Fraction(-self.p)] + [Fraction(0)] * (self.n - 1) + [Fraction(1)]
        g, u, _ = _poly_ext_gcd(list(self.coeffs), modulus)
        if len(g) != 1 or g[0] == 0:
            raise ZeroDivisionError("element not invertible")
        inv = [c / g[0] for c in u]
        return PiExt(inv, self.n, self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = PiExt.from_rational(1, self.n, self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def valuation(self):
        """min over pi-graded components, as a Fraction; raises on zero."""
        if self.is_zero():
            raise ValueError("valuation of 0 is infinite")
        return min(
            vp_fraction(c, self.p) + Fraction(i, self.n)
            for i, c in enumerate(self.coeffs)
            if c != 0
        )

    def __repr__(self):
        return f"PiExt({list(self.coeffs)}, n={self.n}, p={self.p})"
