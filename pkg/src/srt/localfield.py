"""
Exact arithmetic in totally ramified extensions Q_p(pi) with pi^N = p.

Elements are finite sums of terms u * pi^(j*N) with j in (1/N)Z and u a p-adic
unit, together with an absolute precision bound. Precision None means the
element is an exact finite sum of rational multiples of powers of pi; a finite
precision q means the value is only known modulo p^q, and unit coefficients
are canonicalized to integer residues.

The canonical form keeps at most one term per residue class of the exponent
mod 1, which makes the valuation of a nonzero element exact: distinct classes
can never cancel.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .valuation import (
    INFINITY,
    ExtendedRational,
    ceil_fraction,
    floor_fraction,
    vp,
)


class ContextError(ValueError):
    pass


class PrecisionError(ArithmeticError):
    """Raised when a question cannot be answered at the tracked precision."""


class DivergentSeries(ArithmeticError):
    pass


class NoSquareRoot(ArithmeticError):
    pass


class NoNthRoot(ArithmeticError):
    pass


def _modinv(a, m):
    return pow(a % m, -1, m)


class LocalFieldContext:
    """Ambient field Q_p(pi), pi^N = p, with default unit precision M."""

    def __init__(self, p, N=40, M=8):
        if p < 3 or any(p % q == 0 for q in range(2, int(math.isqrt(p)) + 1)):
            raise ContextError(f"p must be an odd prime, got {p}")
        if N < 1 or M < 1:
            raise ContextError(f"N and M must be positive, got N={N}, M={M}")
        self.p = p
        self.N = N
        self.M = M

    def __eq__(self, other):
        return (
            isinstance(other, LocalFieldContext)
            and (self.p, self.N, self.M) == (other.p, other.N, other.M)
        )

    def __hash__(self):
        return hash((self.p, self.N, self.M))

    def __repr__(self):
        return f"LocalFieldContext(p={self.p}, N={self.N}, M={self.M})"

    def refine(self, other):
        """Common refinement context with N = lcm of the two Ns."""
        if self.p != other.p:
            raise ContextError(f"prime mismatch: {self.p} vs {other.p}")
        return LocalFieldContext(
            self.p, math.lcm(self.N, other.N), max(self.M, other.M)
        )

    # constructors

    def element(self, pairs, prec=None):
        return LocalFieldElement(self, pairs, prec)

    def zero(self, prec=None):
        return LocalFieldElement(self, [], prec)

    def one(self):
        return LocalFieldElement(self, [(Fraction(0), 1)])

    def from_rational(self, q, prec=None):
        q = Fraction(q)
        if q == 0:
            return self.zero(prec)
        return LocalFieldElement(self, [(Fraction(0), q)], prec)

    def pi_power(self, j, unit=1, prec=None):
        """unit * pi^(j*N), i.e. valuation j (j a Fraction with denominator | N)."""
        return LocalFieldElement(self, [(Fraction(j), Fraction(unit))], prec)


class LocalFieldElement:
    __slots__ = ("ctx", "terms", "prec")

    def __init__(self, ctx, pairs, prec=None):
        self.ctx = ctx
        if prec is not None:
            prec = Fraction(prec)
        self.prec = prec
        self.terms = self._canonicalize(pairs)

    def _canonicalize(self, pairs):
        p, N = self.ctx.p, self.ctx.N
        classes = {}
        for e, u in pairs:
            e = Fraction(e)
            if (e * N).denominator != 1:
                raise ContextError(
                    f"exponent {e} not representable with ramification index {N}"
                )
            u = Fraction(u)
            if u == 0:
                continue
            fl = floor_fraction(e)
            f = e - fl
            classes[f] = classes.get(f, Fraction(0)) + u * Fraction(p) ** fl
        terms = {}
        for f, c in classes.items():
            if c == 0:
                continue
            v = vp(c, p).as_fraction()
            e0 = f + v
            if self.prec is not None and e0 >= self.prec:
                continue
            unit = c / Fraction(p) ** int(v)
            if self.prec is not None:
                k = ceil_fraction(self.prec - e0)
                mod = p**k
                unit = unit.numerator * _modinv(unit.denominator, mod) % mod
                if unit == 0:
                    continue
                # reduction can only strip p-multiples >= prec, never create them
                if unit % p == 0:
                    v2 = vp(unit, p).as_fraction()
                    if e0 + v2 >= self.prec:
                        continue
                    raise AssertionError("canonicalization lost unit normalization")
            terms[e0] = unit
        return dict(sorted(terms.items()))

    # --- queries ---

    def is_zero(self):
        """True only for the exact zero; raises if zero merely to precision."""
        if self.terms:
            return False
        if self.prec is None:
            return True
        raise PrecisionError(f"element is zero modulo p^{self.prec}; cannot decide")

    def valuation(self) -> ExtendedRational:
        if self.terms:
            return ExtendedRational(min(self.terms))
        if self.prec is None:
            return INFINITY
        raise PrecisionError(
            f"valuation unknown: zero modulo p^{self.prec}"
        )

    def valuation_lower_bound(self) -> ExtendedRational:
        if self.terms:
            return ExtendedRational(min(self.terms))
        if self.prec is None:
            return INFINITY
        return ExtendedRational(self.prec)

    def valuation_at_least(self, bound) -> bool:
        bound = Fraction(bound)
        if self.terms and min(self.terms) < bound:
            return False
        if self.prec is not None and self.prec < bound and not any(
            e < bound for e in self.terms
        ):
            raise PrecisionError(
                f"cannot certify valuation >= {bound} at precision p^{self.prec}"
            )
        return True

    def unit_at(self, exponent):
        """Coefficient at the given exponent (0 if provably absent)."""
        exponent = Fraction(exponent)
        if exponent in self.terms:
            return self.terms[exponent]
        if self.prec is not None and exponent >= self.prec:
            raise PrecisionError(f"exponent {exponent} beyond precision {self.prec}")
        return 0

    # --- arithmetic ---

    def _check_ctx(self, other):
        if self.ctx != other.ctx:
            raise ContextError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def _coerce(self, other):
        if isinstance(other, LocalFieldElement):
            return other
        return self.ctx.from_rational(other)

    def __add__(self, other):
        other = self._coerce(other)
        self._check_ctx(other)
        prec = _min_prec(self.prec, other.prec)
        pairs = list(self.terms.items()) + list(other.terms.items())
        return LocalFieldElement(self.ctx, pairs, prec)

    __radd__ = __add__

    def __neg__(self):
        return LocalFieldElement(
            self.ctx, [(e, -Fraction(u)) for e, u in self.terms.items()], self.prec
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        self._check_ctx(other)
        if not self.terms and self.prec is None:
            return self.ctx.zero()
        if not other.terms and other.prec is None:
            return self.ctx.zero()
        va = min(self.terms) if self.terms else self.prec
        vb = min(other.terms) if other.terms else other.prec
        prec = None
        if self.prec is not None:
            prec = self.prec + vb
        if other.prec is not None:
            q = other.prec + va
            prec = q if prec is None else min(prec, q)
        pairs = []
        for e1, u1 in self.terms.items():
            for e2, u2 in other.terms.items():
                pairs.append((e1 + e2, Fraction(u1) * Fraction(u2)))
        return LocalFieldElement(self.ctx, pairs, prec)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ctx.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def inverse(self, rel_prec=None):
        if not self.terms:
            if self.prec is None:
                raise ZeroDivisionError("inverse of exact zero")
            raise PrecisionError(f"inverse of element that is zero modulo p^{self.prec}")
        v = min(self.terms)
        u = self.terms[v]
        lead_inv = LocalFieldElement(self.ctx, [(-v, Fraction(1) / Fraction(u))])
        if len(self.terms) == 1 and self.prec is None and rel_prec is None:
            return lead_inv
        if self.prec is not None:
            rel = self.prec - v
        else:
            rel = Fraction(rel_prec if rel_prec is not None else self.ctx.M)
        z = self * lead_inv - 1
        zv = z.valuation_lower_bound()
        out = self.ctx.one()
        power = self.ctx.one()
        k = 1
        while ExtendedRational(k) * zv < rel:
            power = power * (-z)
            out = out + power
            k += 1
        return (out * lead_inv).truncate(-v + rel)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def truncate(self, prec):
        prec = Fraction(prec)
        if self.prec is not None and self.prec <= prec:
            return self
        return LocalFieldElement(self.ctx, list(self.terms.items()), prec)

    def to_context(self, ctx):
        if ctx.p != self.ctx.p:
            raise ContextError(f"prime mismatch: {self.ctx.p} vs {ctx.p}")
        return LocalFieldElement(ctx, list(self.terms.items()), self.prec)

    # --- comparisons / display ---

    def __eq__(self, other):
        if not isinstance(other, LocalFieldElement):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (
            self.ctx == other.ctx
            and self.prec == other.prec
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, self.prec, tuple(self.terms.items())))

    def agrees_with(self, other, bound=None):
        """True if self - other vanishes at least to `bound` (default: joint precision)."""
        other = self._coerce(other)
        diff = self - other
        if bound is None:
            if diff.prec is None:
                return diff.is_zero()
            bound = diff.prec
        return diff.valuation_at_least(bound)

    def __repr__(self):
        p = self.ctx.p
        bits = []
        for e, u in self.terms.items():
            if e == 0:
                bits.append(f"{u}")
            elif e == 1:
                bits.append(f"{u}*{p}")
            else:
                bits.append(f"{u}*{p}^({e})")
        body = " + ".join(bits) if bits else "0"
        if self.prec is not None:
            body += f" + O({p}^({self.prec}))"
        return body

    def to_json(self):
        out = {
            "terms": [
                {
                    "exponent": str(e),
                    "unit": str(u),
                    "modulus": (
                        f"{self.ctx.p}^{ceil_fraction(self.prec - e)}"
                        if self.prec is not None
                        else "exact"
                    ),
                }
                for e, u in self.terms.items()
            ],
            "precision": str(self.prec) if self.prec is not None else "exact",
        }
        return out


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# --- square roots ---


def hensel_sqrt(u, p, M):
    """Square root of a unit residue mod p^M, branch = lift of the smallest
    nonnegative root mod p."""
    u = u % (p**M)
    if u % p == 0:
        raise NoSquareRoot(f"{u} is not a unit mod {p}")
    r0 = None
    for y in range(p):
        if (y * y - u) % p == 0:
            r0 = y
            break
    if r0 is None:
        raise NoSquareRoot(f"{u} is not a quadratic residue mod {p}")
    r = r0
    k = 1
    while k < M:
        k = min(2 * k, M)
        mod = p**k
        r = (r - (r * r - u) * _modinv(2 * r, mod)) % mod
    return r


def sqrt_of_minus_one(ctx, prec=None):
    """The square root of -1 congruent to the smaller root mod p; requires
    p = 1 mod 4."""
    M = ceil_fraction(prec) if prec is not None else ctx.M
    r = hensel_sqrt(-1 % ctx.p ** M, ctx.p, M)
    return ctx.element([(Fraction(0), r)], Fraction(M))


# --- n-th roots ---


def _unit_pth_root(u, p, K):
    """Solve y^p = u in Z_p to precision p^K; returns int residue or None."""
    u = u % (p**K)
    y = u % p
    if y == 0:
        return None
    if pow(y, p, p * p) != u % (p * p):
        return None
    # extend digit by digit: y^p = u mod p^(t+1) implies a unique digit fixing
    # the next level
    for t in range(1, K):
        mod = p ** (t + 2)
        diff = (u - pow(y, p, mod)) % mod
        if diff % (p ** (t + 1)) != 0:
            return None
        c = (diff // p ** (t + 1)) * _modinv(pow(y, p - 1, p), p) % p
        y = y + c * p**t
    return y % (p**K)


def _unit_prime_to_p_root(u, m, p, K):
    """Solve y^m = u in Z_p (gcd(m, p) = 1) to precision p^K."""
    u = u % (p**K)
    y0 = None
    for y in range(1, p):
        if (pow(y, m, p) - u) % p == 0:
            y0 = y
            break
    if y0 is None:
        return None
    y = y0
    k = 1
    while k < K:
        k = min(2 * k, K)
        mod = p**k
        f = (pow(y, m, mod) - u) % mod
        y = (y - f * _modinv(m * pow(y, m - 1, mod), mod)) % mod
    return y


def _integer_nth_root_exact(n, k):
    """Exact k-th root of a nonnegative integer, or None."""
    if n == 0:
        return 0
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def unit_nth_root(u, n, p, K):
    """n-th root of a p-adic unit, given as Fraction or int residue.

    Returns (root, exact) where root is a Fraction (exact=True) or an int
    residue mod p^K (exact=False). Raises NoNthRoot when no root exists in Z_p.
    """
    if isinstance(u, Fraction) and u.denominator != 1 or isinstance(u, Fraction):
        frac = Fraction(u)
    else:
        frac = Fraction(u)
    # exact shortcut for rational perfect powers
    num, den = frac.numerator, frac.denominator
    sign = 1
    if num < 0:
        if n % 2 == 0:
            pass  # handled by residue path (may still have a root if -1 is a square...)
        else:
            sign = -1
            num = -num
    if sign == -1 or num >= 0:
        rn = _integer_nth_root_exact(abs(num), n)
        rd = _integer_nth_root_exact(den, n)
        if rn is not None and rd is not None and (sign == 1 or n % 2 == 1):
            if (sign * Fraction(rn, rd)) ** n == frac:
                return sign * Fraction(rn, rd), True
    mod = p**K
    res = frac.numerator * _modinv(frac.denominator, mod) % mod
    if res % p == 0:
        raise NoNthRoot(f"{u} is not a unit mod {p}")
    a = 0
    m = n
    while m % p == 0:
        m //= p
        a += 1
    y = res
    for _ in range(a):
        y = _unit_pth_root(y, p, K)
        if y is None:
            raise NoNthRoot(
                f"unit {res} mod {p}^{K} has no {n}-th root in Z_{p} "
                f"(obstruction at the p-part)"
            )
    if m > 1:
        y = _unit_prime_to_p_root(y, m, p, K)
        if y is None:
            raise NoNthRoot(
                f"unit {res} mod {p}^{K} has no {n}-th root in Z_{p} "
                f"(no residue solves y^{m} = u mod {p})"
            )
    return y, False


def _binomial_series(z, exponent, target):
    """(1 + z)^exponent truncated so the tail is beyond `target` (absolute),
    for a Fraction exponent with v_p(denominator) = a.

    Convergence requires v(z) > a + 1/(p-1) if a > 0, else v(z) > 0.
    """
    ctx = z.ctx
    p = ctx.p
    exponent = Fraction(exponent)
    a = -min(0, int(vp(exponent, p).as_fraction()))
    zv = z.valuation_lower_bound()
    bound = Fraction(a) + Fraction(1, p - 1) if a > 0 else Fraction(0)
    if not zv > bound:
        raise DivergentSeries(
            f"binomial series with exponent {exponent} needs v(z) > {bound}, "
            f"got {zv}"
        )
    slope = zv + ExtendedRational(-bound)  # per-term valuation gain, > 0
    out = ctx.one()
    coeff = Fraction(1)
    zpow = ctx.one()
    k = 1
    while slope * k < target or (slope.is_infinite and k <= 1):
        if slope.is_infinite:
            break
        coeff = coeff * (exponent - (k - 1)) / k
        zpow = zpow * z
        if coeff != 0:
            out = out + zpow * coeff
        k += 1
    return out


def pnth_root_binomial(x, a):
    """p^a-th root of x via the binomial series; needs v(x - 1) > a + 1/(p-1)."""
    ctx = x.ctx
    p = ctx.p
    if a == 0:
        return x
    z = x - 1
    bound = Fraction(a) + Fraction(1, p - 1)
    zv = z.valuation_lower_bound()
    if not zv > bound:
        raise DivergentSeries(
            f"p^{a}-th root series needs v(x-1) > {bound}, got v(x-1) = {zv}"
        )
    if x.prec is not None:
        target = x.prec - a
    elif not zv.is_infinite:
        target = zv.as_fraction() - a + ctx.M
    else:
        return ctx.one()
    y = _binomial_series(z, Fraction(1, p**a), target)
    return y.truncate(target)


def nth_root(x, n, branch=0):
    """n-th root of x in Q_p(pi) when one exists; deterministic branch.

    The valuation must divide evenly (v(x)/n must live in (1/N)Z), the unit
    part must have an n-th root in Z_p, and when p | n the principal part must
    lie in the binomial convergence region.
    """
    ctx = x.ctx
    p = ctx.p
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    v = x.valuation()
    if v.is_infinite:
        return ctx.zero()
    v = v.as_fraction()
    if (v / n * ctx.N).denominator != 1:
        raise NoNthRoot(
            f"valuation {v} is not divisible by {n} within ramification index {ctx.N}"
        )
    u0 = x.terms[v]
    a = 0
    m = n
    while m % p == 0:
        m //= p
        a += 1
    rel = (x.prec - v) if x.prec is not None else Fraction(ctx.M)
    K = max(ceil_fraction(rel) + 2 * a + 2, 2 * a + 3)
    root_u, exact = unit_nth_root(Fraction(u0), n, p, K)
    if exact:
        lead_root = ctx.element([(v / n, root_u)])
    else:
        lead_root = ctx.element([(v / n, root_u)], v / n + K)
    if len(x.terms) == 1:
        if x.prec is None and exact:
            out = lead_root
        else:
            out = lead_root.truncate(v / n + rel - a)
    else:
        lead = ctx.element([(v, u0)])
        z = x / lead - 1
        series = _binomial_series(z, Fraction(1, n), rel - a)
        out = (lead_root * series).truncate(v / n + rel - a)
    if branch and n % 2 == 0:
        out = -out
    return out


# --- p-th power decision procedure ---


class PthPowerVerdict:
    """Outcome of the k-th power test: kind in {yes, no, undecidable}."""

    def __init__(self, kind, root=None, certificate=None):
        self.kind = kind
        self.root = root
        self.certificate = certificate

    def __repr__(self):
        return f"PthPowerVerdict({self.kind!r}, certificate={self.certificate!r})"

    def to_json(self):
        out = {"verdict": self.kind}
        if self.root is not None:
            out["root"] = self.root.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def _digit_levels(Nsub, p):
    """Digit indices of a candidate root that can influence the decision."""
    D = Nsub // (p - 1) + 1
    return list(range(D + 1))


def _constraint_exponents(Nsub, p):
    C = Fraction(p, p - 1)
    out = []
    t = 0
    while Fraction(t, Nsub) <= C:
        out.append(Fraction(t, Nsub))
        t += 1
    return out


def _first_effect(t, Nsub, p):
    if t == 0:
        return Fraction(0)
    return min(1 + Fraction(t, Nsub), Fraction(p * t, Nsub))


def _decide_unit_pth_power(w, ctx):
    """Search for a unit y with v(y^p - w) > p/(p-1) in ctx; returns the digit
    list or None."""
    p, Nsub = ctx.p, ctx.N
    C = Fraction(p, p - 1)
    levels = _digit_levels(Nsub, p)

    def ok_so_far(y, depth):
        # constraints frozen once later digits cannot touch them
        frozen = (
            _first_effect(depth + 1, Nsub, p)
            if depth + 1 <= levels[-1]
            else ExtendedRational(None)
        )
        diff = y**p - w
        for e in diff.terms:
            if e <= C and ExtendedRational(e) < frozen:
                return False
        return True

    def final_ok(y):
        diff = y**p - w
        return all(e > C for e in diff.terms)

    def dfs(digits, elem, depth):
        if depth > levels[-1]:
            return digits if final_ok(elem) else None
        lo = 1 if depth == 0 else 0
        for d in range(lo, p):
            nxt = elem + ctx.element([(Fraction(depth, Nsub), d)]) if d else elem
            if ok_so_far(nxt, depth):
                found = dfs(digits + [d], nxt, depth + 1)
                if found is not None:
                    return found
        return None

    return dfs([], ctx.zero(), 0)


def _class_residue(x, frac_class, modulus_exp, p):
    """Aggregate integer residue of the terms of x in one exponent class."""
    total = Fraction(0)
    for e, u in x.terms.items():
        f = e - floor_fraction(e)
        if f == frac_class:
            total += Fraction(u) * Fraction(p) ** floor_fraction(e - frac_class)
    mod = p**modulus_exp
    return total.numerator * _modinv(total.denominator, mod) % mod if total else 0


def _no_certificate(w, ctx):
    """Normalized non-power certificate: alpha from the integer level, beta
    from the lowest fractional constraint, then the first violated congruence."""
    p, Nsub = ctx.p, ctx.N
    C = Fraction(p, p - 1)
    alpha = int(_class_residue(w, Fraction(0), 1, p))
    beta = None
    beta_exponent = None
    for e in sorted(w.terms):
        f = e - floor_fraction(e)
        if f != 0 and e <= C:
            # the candidate digit t sits at exponent e - 1; its cross term is
            # p * alpha^(p-1) * beta * pi^(e-1)
            coeff = int(w.terms[e]) % p
            beta = coeff * _modinv(pow(alpha, p - 1, p), p) % p
            beta_exponent = e
            break
    y = ctx.element([(Fraction(0), alpha)])
    if beta is not None:
        y = y + ctx.element([(beta_exponent - 1, beta)])
    diff = y**p - w
    violated = None
    for e in sorted(diff.terms):
        if e <= C:
            violated = e
            break
    cert = {
        "kind": "congruence",
        "alpha": alpha,
        "beta": beta,
        "modulus_alpha": p,
        "modulus_beta": p,
    }
    if violated is not None:
        f = violated - floor_fraction(violated)
        mexp = floor_fraction(C - f) + 1
        lhs = _class_residue(y**p, f, mexp, p)
        rhs = _class_residue(w, f, mexp, p)
        cert.update(
            {
                "violated_exponent_class": str(f),
                "modulus": f"{p}^{mexp}",
                "lhs": int(lhs),
                "rhs": int(rhs),
            }
        )
    return cert


def is_pth_power(x, k):
    """Decide whether x is a k-th power in its field, k in {p, p^2}.

    Returns a PthPowerVerdict. No-verdicts carry either a valuation
    obstruction or a congruence certificate; Undecidable means the tracked
    precision cannot separate the cases.
    """
    ctx = x.ctx
    p = ctx.p
    if k not in (p, p * p):
        raise ValueError(f"k must be p or p^2, got {k}")
    if not x.terms:
        if x.prec is None:
            raise ValueError("0 is excluded from the power test")
        return PthPowerVerdict("undecidable", certificate={"reason": "zero to precision"})
    v = min(x.terms)
    if (v / p * ctx.N).denominator != 1:
        return PthPowerVerdict(
            "no",
            certificate={
                "kind": "valuation",
                "valuation": str(v),
                "k": k,
                "reason": f"v(x) = {v} is not divisible by {p} within the field",
            },
        )
    if k == p * p:
        first = is_pth_power(x, p)
        if first.kind != "yes":
            out = PthPowerVerdict(first.kind, certificate=first.certificate)
            return out
        second = is_pth_power(first.root, p)
        if second.kind == "yes":
            return PthPowerVerdict("yes", root=second.root, certificate=None)
        return PthPowerVerdict(second.kind, certificate=second.certificate)

    # reduce to a unit in the minimal subcontext
    w_full = x * ctx.element([(-v, 1)])
    denoms = [e.denominator for e in w_full.terms]
    Nsub = math.lcm(1, *denoms)
    sub = LocalFieldContext(p, Nsub, ctx.M)
    w = w_full.to_context(sub)
    C = Fraction(p, p - 1)
    needed = max(e for e in _constraint_exponents(Nsub, p))
    if w.prec is not None and w.prec <= needed:
        return PthPowerVerdict(
            "undecidable",
            certificate={
                "reason": f"precision p^{w.prec} does not reach the decision "
                f"level {needed}"
            },
        )
    digits = _decide_unit_pth_power(w, sub)
    if digits is None:
        return PthPowerVerdict("no", certificate=_no_certificate(w, sub))
    y0 = sub.zero()
    for t, d in enumerate(digits):
        if d:
            y0 = y0 + sub.element([(Fraction(t, Nsub), d)])
    z = w / y0**p - 1
    if not z.valuation_lower_bound() > C:
        raise AssertionError("digit search returned a non-root")
    unit_root = y0 * _binomial_series(
        z, Fraction(1, p), (w.prec - 1) if w.prec is not None else Fraction(ctx.M)
    )
    if w.prec is not None:
        unit_root = unit_root.truncate(w.prec - 1)
    root = unit_root.to_context(ctx) * ctx.element([(v / p, 1)])
    return PthPowerVerdict("yes", root=root)
