"""
Truncated series expansions of the degree-(r+s) rational cover function

    g(z) = ((z+1)/(z-1))^r * ((z+c)/(z-c))^s,    c = sqrt(1-a),

around 0 and around shifted/scaled coordinates z = d + e*t. Coefficients are
exact: rationals, Gaussian rationals, or local field elements, depending on
where the expansion center lives. Truncation is tracked honestly; evaluation
and recentering report precision floors derived from proven lower bounds on
the dropped coefficients.
"""
from __future__ import annotations

from fractions import Fraction

from .localfield import LocalFieldElement
from .valuation import (
    INFINITY,
    ExtendedRational,
    ceil_fraction,
    vp,
)


class DegenerateCover(ValueError):
    pass


class TruncationUnderflow(ValueError):
    def __init__(self, message, required_order=None):
        super().__init__(message)
        self.required_order = required_order


def general_binomial(m, k):
    """binom(m, k) for any rational m and integer k >= 0, exact."""
    out = Fraction(1)
    m = Fraction(m)
    for i in range(k):
        out *= (m - i) / (k - i)
    return out


class GaussRational:
    """Exact element of Q(i): re + im*i with rational components.

    p-adic valuation is supported for primes p = 3 mod 4, where p stays prime
    in Z[i] and v(re + im*i) = min(v(re), v(im)).
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def _coerce(self, other):
        if isinstance(other, GaussRational):
            return other
        return GaussRational(other)

    def __add__(self, other):
        other = self._coerce(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def valuation(self, p) -> ExtendedRational:
        if p % 4 != 3:
            raise ValueError(
                f"p = {p} splits in Z[i]; component-wise valuation is only "
                f"valid for p = 3 mod 4"
            )
        return min(vp(self.re, p), vp(self.im, p))


I_GAUSS = GaussRational(0, 1)


def element_valuation(x, p) -> ExtendedRational:
    """Valuation of a coefficient of any supported ring."""
    if isinstance(x, LocalFieldElement):
        if x.ctx.p != p:
            raise ValueError(f"prime mismatch: element over {x.ctx.p}, asked {p}")
        return x.valuation()
    if isinstance(x, GaussRational):
        return x.valuation(p)
    return vp(Fraction(x), p)


class CoverParams:
    """Parameters of the cover function g.

    Args:
        p: odd prime.
        nu: positive exponent of the p-power degree.
        r, s: integers with 0 < r, s < p^nu.
        sqrt1ma: the chosen square root of 1 - a, an exact rational.

    The invariant a = 1 - sqrt1ma^2 is derived. When a = 1 - s^2/r^2 the
    branch is forced: sqrt1ma = -s/r.
    """

    def __init__(self, p, nu, r, s, sqrt1ma):
        if nu < 1:
            raise ValueError(f"nu must be >= 1, got {nu}")
        if not (0 < r < p**nu and 0 < s < p**nu):
            raise ValueError(f"need 0 < r, s < p^nu = {p**nu}, got r={r}, s={s}")
        self.p = p
        self.nu = nu
        self.r = r
        self.s = s
        self.sqrt1ma = Fraction(sqrt1ma)
        self.a = 1 - self.sqrt1ma**2
        if self.a == 1 - Fraction(s, r) ** 2 and self.sqrt1ma != Fraction(-s, r):
            raise ValueError(
                f"branch is forced to sqrt(1-a) = {-Fraction(s, r)} for this a"
            )
        if self.sqrt1ma == 0:
            raise DegenerateCover("sqrt(1-a) = 0 degenerates the cover")
        if self.sqrt1ma == 1 and r + s == 0:
            raise DegenerateCover("constant cover")
        if self.sqrt1ma == -1 and r == s:
            raise DegenerateCover("constant cover")

    def roots(self):
        """(root, exponent) pairs of g as a rational function."""
        c = self.sqrt1ma
        return [
            (Fraction(-1), self.r),
            (Fraction(1), -self.r),
            (-c, self.s),
            (c, -self.s),
        ]

    def coefficient_bound(self):
        """(const, slope) with v(maclaurin coefficient i) >= const + slope*i
        - v_p(i) for all i >= 1; proven per case."""
        p = self.p
        va = vp(self.a, p)
        w = vp(1 - self.a, p)
        if va > 0:
            return va.as_fraction(), Fraction(0)
        if w > 0:
            ws = vp(self.sqrt1ma, p).as_fraction()
            return ws, -ws
        return Fraction(0), Fraction(0)

    def __repr__(self):
        return (
            f"CoverParams(p={self.p}, nu={self.nu}, r={self.r}, s={self.s}, "
            f"sqrt1ma={self.sqrt1ma})"
        )


def _vp_int_upper(k):
    """Upper bound for v_p(k) valid for every p >= 2: the bit length of k."""
    return k.bit_length()


class TruncatedSeries:
    """Coefficients 0..order of a power series, with an optional proven lower
    bound (const, slope) so that v(coefficient i) >= const + slope*i - v_p(i)
    holds for every i (used to control dropped tails)."""

    def __init__(self, coefficients, order=None, tail_bound=None, p=None):
        self.coefficients = list(coefficients)
        self.order = len(self.coefficients) - 1 if order is None else order
        if len(self.coefficients) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coefficients)}"
            )
        self.tail_bound = tail_bound
        self.p = p

    def coefficient(self, i):
        if not 0 <= i <= self.order:
            raise TruncationUnderflow(
                f"coefficient {i} beyond truncation order {self.order}",
                required_order=i,
            )
        return self.coefficients[i]

    def __mul__(self, other):
        T = min(self.order, other.order)
        out = [Fraction(0)] * (T + 1)
        for i, u in enumerate(self.coefficients[: T + 1]):
            for j, v in enumerate(other.coefficients[: T + 1 - i]):
                out[i + j] = out[i + j] + u * v
        return TruncatedSeries(out, T, p=self.p or other.p)

    def scalar_mul(self, c):
        return TruncatedSeries(
            [c * x for x in self.coefficients], self.order, self.tail_bound, self.p
        )

    def tail_floor(self, per_index_weight):
        """Rigorous lower bound for min over k > order of
        v(coefficient k) + k * per_index_weight, or None if no bound holds."""
        if self.tail_bound is None:
            return None
        const, slope = self.tail_bound
        net = slope + Fraction(per_index_weight)
        if net <= 0:
            return None
        # v(coeff k) + k*w >= const + net*k - bitlen(k); the piecewise-linear
        # minorant attains its minimum over k > T at T+1 or at a power of two
        T = self.order
        candidates = [T + 1]
        b = 1
        while (1 << b) <= T:
            b += 1
        while True:
            k = 1 << b
            candidates.append(k)
            if net * k - b >= net * candidates[0] + 4:
                break
            b += 1
        return min(const + net * k - _vp_int_upper(k) for k in candidates)

    def evaluate(self, x, p=None):
        """Sum of the series at x, with v(x) > 0; the dropped tail is absorbed
        into the reported precision when a tail bound is available."""
        p = p or self.p
        vx = element_valuation(x, p)
        if not vx > 0:
            raise ValueError(f"evaluation needs v(x) > 0, got {vx}")
        acc = self.coefficients[self.order]
        for i in range(self.order - 1, -1, -1):
            acc = acc * x + self.coefficients[i]
        floor = self.tail_floor(vx.as_fraction())
        if floor is None:
            raise TruncationUnderflow(
                "no tail bound available to certify the dropped terms",
                required_order=self.order + 1,
            )
        if isinstance(acc, LocalFieldElement):
            return acc.truncate(floor)
        return acc, floor


def maclaurin_g(params, T=None):
    """Maclaurin expansion of g through order T (default 3p + 2).

    Exact rational coefficients, obtained as the product of the binomial
    expansions of the four linear factors.
    """
    if T is None:
        T = 3 * params.p + 2
    if T < 1:
        raise ValueError(f"T must be >= 1, got {T}")
    out = TruncatedSeries([Fraction(1)] + [Fraction(0)] * T, T)
    for root, m in params.roots():
        # factor (z - root)^m = (-root)^m * (1 - z/root)^m
        coeffs = []
        inv_root = Fraction(1) / root
        for k in range(T + 1):
            coeffs.append(general_binomial(m, k) * (-inv_root) ** k)
        factor = TruncatedSeries(coeffs, T).scalar_mul(Fraction(-root) ** m)
        out = out * factor
    out.tail_bound = params.coefficient_bound()
    out.p = params.p
    return out


def taylor_at(params, center, T):
    """Exact Taylor expansion of g at `center` through order T.

    The center may be a Fraction, GaussRational, or LocalFieldElement; the
    coefficients live in the same ring. Within order T the coefficients are
    exact (each linear factor contributes an explicit binomial expansion), so
    no truncation error enters below order T + 1.
    """
    tail = params.coefficient_bound() if _center_small(center, params.p) else None
    return taylor_factors(params.roots(), center, T, params.p, tail_bound=tail)


def taylor_factors(factors, center, T, p, tail_bound=None):
    """Taylor expansion at `center` of a product of linear-factor powers
    prod (z - root)^m, given as (root, m) pairs; same coefficient rings and
    exactness guarantees as taylor_at."""
    one = _ring_one(center)
    out = TruncatedSeries([one] + [0 * one] * T, T, p=p)
    for root, m in factors:
        base = center - root
        base_pow = base**m
        base_inv = one / base
        coeffs = []
        acc = base_pow
        for k in range(T + 1):
            coeffs.append(general_binomial(m, k) * acc)
            acc = acc * base_inv
        out = out * TruncatedSeries(coeffs, T, p=p)
    out.tail_bound = tail_bound
    return out


def _ring_one(x):
    if isinstance(x, LocalFieldElement):
        return x.ctx.one()
    if isinstance(x, GaussRational):
        return GaussRational(1)
    return Fraction(1)


def _center_small(center, p):
    try:
        return element_valuation(center, p) > 0
    except (ValueError, ArithmeticError):
        return False


def rescale(series, d, e, T):
    """Series in t for g(d + e*t), given the Maclaurin series of g.

    For d = 0 this is the exact homogeneous rescaling coefficient_i * e^i.
    For d != 0 the shifted coefficients mix all orders, so the dropped tail of
    the input is absorbed into the precision of each output coefficient; this
    requires v(d) > 0 and a tail bound on the input.
    """
    if T > series.order:
        raise TruncationUnderflow(
            f"requested order {T} exceeds input order {series.order}",
            required_order=T,
        )
    d_zero = _is_zero(d)
    p = series.p
    if d_zero:
        out = []
        acc = _ring_one(e)
        for i in range(T + 1):
            out.append(series.coefficient(i) * acc)
            acc = acc * e
        return TruncatedSeries(out, T, p=p)
    vd = element_valuation(d, p)
    ve = element_valuation(e, p)
    if not vd > 0:
        raise ValueError(f"recentering needs v(d) > 0, got {vd}")
    base_floor = series.tail_floor(vd.as_fraction())
    if base_floor is None:
        raise TruncationUnderflow(
            "no tail bound available for the recentered coefficients",
            required_order=series.order + 1,
        )
    out = []
    epow = _ring_one(e)
    for i in range(T + 1):
        acc = 0 * epow
        dpow = _ring_one(d)
        for k in range(i, series.order + 1):
            acc = acc + general_binomial(k, i) * series.coefficient(k) * dpow
            dpow = dpow * d
        coeff = acc * epow
        # dropped tail of coefficient i: sum over k > order of
        # gamma_k C(k,i) d^(k-i) e^i, valuation >= base_floor + i*(ve - vd)
        if i == 0 or not ve.is_infinite:
            if not isinstance(coeff, LocalFieldElement):
                raise TruncationUnderflow(
                    "recentering at d != 0 needs local field coordinates to "
                    "carry the tail precision",
                    required_order=series.order + 1,
                )
            floor = base_floor
            if i > 0:
                floor = floor + (ve.as_fraction() - vd.as_fraction()) * i
            coeff = coeff.truncate(floor)
        out.append(coeff)
        epow = epow * e
    return TruncatedSeries(out, T, p=p)


def _is_zero(x):
    if isinstance(x, LocalFieldElement):
        return not x.terms and x.prec is None
    if isinstance(x, GaussRational):
        return x.re == 0 and x.im == 0
    return Fraction(x) == 0


def coefficient_valuations(series, p):
    """v(c_i) for i = 1..T as ExtendedRationals (INFINITY for exact zeros)."""
    return [
        element_valuation(series.coefficient(i), p)
        for i in range(1, series.order + 1)
    ]


def scaled_coefficient_valuations(series, p, v_e):
    """v(c_i) = v(coefficient i) + i*v(e) for a homogeneous rescaling with a
    scale of known valuation v_e; exact rational path, no elements needed."""
    v_e = Fraction(v_e)
    return [
        element_valuation(series.coefficient(i), p) + v_e * i
        for i in range(1, series.order + 1)
    ]
