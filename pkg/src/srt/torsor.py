"""
Splitting analysis of mu_{p^n}-torsors over a p-adic disk, read off from the
valuations of the series coefficients c_i, together with the closed-form
centers and radii of the distinguished disks (new etale tail, new inseparable
tails) of the associated reduction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .localfield import (
    LocalFieldContext,
    LocalFieldElement,
    NoNthRoot,
    PrecisionError,
    nth_root,
)
from .valuation import ExtendedRational, vp


class InsufficientData(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class CaseMismatch(ValueError):
    pass


class InadmissibleValuation(ValueError):
    pass


GENERIC = "generic"
A_ZERO = "a=0"
A_ONE = "a=1"
_CASES = (GENERIC, A_ZERO, A_ONE)


def _norm_case(case):
    aliases = {
        "generic": GENERIC,
        "a=0": A_ZERO,
        "a0": A_ZERO,
        "a-zero": A_ZERO,
        "a=1": A_ONE,
        "a1": A_ONE,
        "a-one": A_ONE,
    }
    key = str(case).lower()
    if key not in aliases:
        raise CaseMismatch(f"unknown case {case!r}; expected one of {_CASES}")
    return aliases[key]


@dataclass
class SplitVerdict:
    kind: str  # ObstructedByConditionI | ObstructedByConditionII |
    #            SplitsWithConductor | Inconclusive
    conductor: Fraction | None = None
    evidence: dict = field(default_factory=dict)

    def to_json(self):
        out = {"verdict": self.kind}
        if self.conductor is not None:
            out["conductor"] = str(self.conductor)
        out["evidence"] = {k: str(v) for k, v in self.evidence.items()}
        return out


def _as_ext(v):
    if isinstance(v, ExtendedRational):
        return v
    if v is None:
        return ExtendedRational(None)
    return ExtendedRational(v)


def _positive_criterion(vals, p, theta):
    """Unique prime-to-p index sigma <= p at exactly the threshold, all other
    indices strictly above it."""
    hits = [i for i, v in vals.items() if v == theta]
    if len(hits) != 1:
        return None
    sigma = hits[0]
    if sigma % p == 0 or sigma > p:
        return None
    if any(not v > theta for i, v in vals.items() if i != sigma):
        return None
    return sigma


def splitting_obstruction(vals, p, n, c1=None, cp=None, cp_candidate=None):
    """Decide splitting of the torsor 1 + c_1 t + c_2 t^2 + ... at level n.

    Args:
        vals: v(c_i) for i = 1..T (Fractions or ExtendedRationals), T >= p.
        p: odd prime; n: level (the torsor splits into p^(n-1) pieces of
           conductor sigma when the verdict is SplitsWithConductor(sigma)).
        c1, cp: optional LocalFieldElements for the borderline comparison.
        cp_candidate: optional LocalFieldElement, an integral approximation of
           c_p whose p-th-root term can be absorbed into c_1.

    Returns:
        SplitVerdict.
    """
    T = len(vals)
    if T < p:
        raise InsufficientData(f"need coefficient valuations up to i = {p}, got {T}")
    vals = {i + 1: _as_ext(v) for i, v in enumerate(vals)}
    theta = Fraction(n) + Fraction(1, p - 1)
    for i, v in vals.items():
        if i > p and i % p == 0 and not v > theta:
            return SplitVerdict(
                "Inconclusive",
                evidence={
                    "reason": f"hypothesis v(c_{i}) > {theta} fails for the "
                    f"p-divisible index {i}",
                },
            )
    v_p = vals[p]
    for i, v in vals.items():
        if i != p and v < min(v_p, ExtendedRational(theta)):
            return SplitVerdict(
                "ObstructedByConditionI",
                evidence={"witness_index": i, "valuation": v, "threshold": theta},
            )
    if v_p > theta:
        sigma = _positive_criterion(vals, p, theta)
        if sigma is not None:
            return SplitVerdict(
                "SplitsWithConductor",
                conductor=sigma,
                evidence={"threshold": theta, "v_c_sigma": vals[sigma]},
            )
        return SplitVerdict(
            "Inconclusive",
            evidence={"reason": "no unique prime-to-p index at the threshold"},
        )
    # borderline: v(c_p) <= theta; absorb the p-th-root part of c_p into c_1
    floor = Fraction(n) - Fraction(p - 2, 2 * (p - 1))
    if not v_p > floor:
        return SplitVerdict(
            "Inconclusive",
            evidence={"reason": f"requires v(c_p) > {floor}, got {v_p}"},
        )
    v_root = (v_p + (p - 1) * n + 1) * Fraction(1, p)
    v1 = vals[1]
    if v1 != v_root:
        v_diff = min(v1, v_root)
        if v_diff < theta:
            return SplitVerdict(
                "ObstructedByConditionII",
                evidence={
                    "v_c1": v1,
                    "v_root_term": v_root,
                    "v_difference": v_diff,
                    "threshold": theta,
                },
            )
        return _absorbed_verdict(vals, p, n, theta, v_diff, v_root)
    # exact tie: the comparison needs the elements themselves
    if c1 is None or cp is None:
        return SplitVerdict(
            "Inconclusive",
            evidence={
                "reason": f"v(c_1) = v((p^((p-1)n+1) c_p)^(1/p)) = {v_root}; "
                f"element data (c1, cp) required to compare"
            },
        )
    ctx = cp.ctx
    if cp_candidate is None:
        candidate = c1**p / ctx.from_rational(Fraction(p) ** ((p - 1) * n + 1))
        root = c1
        diff1 = ctx.zero()
    else:
        candidate = cp_candidate
        try:
            root = nth_root(
                candidate * ctx.from_rational(Fraction(p) ** ((p - 1) * n + 1)), p
            )
        except NoNthRoot as exc:
            return SplitVerdict(
                "Inconclusive", evidence={"reason": f"root unavailable: {exc}"}
            )
        diff1 = c1 - root
    gap = cp - candidate
    if not gap.valuation_lower_bound() > theta:
        return SplitVerdict(
            "Inconclusive",
            evidence={
                "reason": f"candidate is not within p^{theta} of c_p "
                f"(v >= {gap.valuation_lower_bound()})"
            },
        )
    try:
        below = not diff1.valuation_at_least(theta)
    except PrecisionError as exc:
        return SplitVerdict("Inconclusive", evidence={"reason": str(exc)})
    if below:
        return SplitVerdict(
            "ObstructedByConditionII",
            evidence={
                "v_c1_minus_root": diff1.valuation(),
                "threshold": theta,
            },
        )
    return _absorbed_verdict(
        vals, p, n, theta, diff1.valuation_lower_bound(), v_root,
        v_p_new=gap.valuation_lower_bound(),
    )


def _absorbed_verdict(vals, p, n, theta, v1_new, v_root, v_p_new=None):
    """Positive criterion after twisting away the p-th-root part of c_p."""
    new_vals = dict(vals)
    new_vals[1] = v1_new
    new_vals[p] = v_p_new if v_p_new is not None else ExtendedRational(theta) + Fraction(1, 2 * p * (p - 1))
    for k in range(2, p):
        # the twist contributes binom(p^n, k) eta^k at index k
        contribution = Fraction(n) * (1 - k) + v_root * k
        new_vals[k] = min(new_vals[k], contribution)
    if not new_vals[p] > theta:
        return SplitVerdict(
            "Inconclusive",
            evidence={"reason": "absorbed c_p not certified above the threshold"},
        )
    sigma = _positive_criterion(new_vals, p, theta)
    if sigma is not None:
        return SplitVerdict(
            "SplitsWithConductor",
            conductor=sigma,
            evidence={
                "threshold": theta,
                "v_c_sigma": new_vals[sigma],
                "absorbed": "true",
            },
        )
    return SplitVerdict(
        "Inconclusive",
        evidence={"reason": "no unique prime-to-p index at the threshold after absorption"},
    )


def center_from_constraint(alpha, beta, c_valuation, p):
    """Nearby rational center: a0 = 1 - (beta/alpha)^2 with the guaranteed
    valuation of a - a0, namely c_valuation + 2*v(beta)."""
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    c_valuation = Fraction(c_valuation)
    if vp(alpha, p) != 0:
        raise PreconditionViolated(f"v({alpha}) = {vp(alpha, p)} != 0")
    if not c_valuation > 0:
        raise PreconditionViolated(f"need v(c) > 0, got {c_valuation}")
    a0 = 1 - (beta / alpha) ** 2
    if beta == 0:
        return a0, None
    return a0, c_valuation + 2 * vp(beta, p).as_fraction()


def tail_center(p, nu, r, s, case, branch=0, ctx=None):
    """Center of the disk of the new etale tail.

    Rational in the non-exceptional cases; a ramified local field element for
    the p = 5 exceptional cases (v(a) = nu - 1 resp. v(sqrt(1-a)) = nu - 1).
    """
    case = _norm_case(case)
    if vp(r, p) != 0:
        raise CaseMismatch(f"v_{p}({r}) must be 0")
    vs = vp(s, p)
    vrs = vp(r + s, p)
    if case == GENERIC:
        if vs != 0 or vrs != 0:
            raise CaseMismatch(
                f"generic case needs v(s) = v(r+s) = 0, got v(s)={vs}, v(r+s)={vrs}"
            )
        if r == s:
            raise CaseMismatch("center 1 - s^2/r^2 = 0 coincides with the branch point x = 0")
        return 1 - Fraction(s, r) ** 2
    if case == A_ZERO:
        if vs != 0 or not vrs > 0:
            raise CaseMismatch(
                f"case a=0 needs v(s) = 0 < v(r+s), got v(s)={vs}, v(r+s)={vrs}"
            )
        va = vrs.as_fraction()
        if va > nu - 1:
            raise InadmissibleValuation(f"v(a) = {va} exceeds nu - 1 = {nu - 1}")
        if p > 5 or va < nu - 1:
            return 1 - Fraction(s, r) ** 2
        return _exceptional_center(p, nu, r, s, r + s, branch, ctx)
    # case a=1
    if not vs > 0:
        raise CaseMismatch(f"case a=1 needs v(s) > 0, got v(s)={vs}")
    w = vs.as_fraction()
    if w > nu - 1:
        raise InadmissibleValuation(
            f"v(sqrt(1-a)) = {w} exceeds nu - 1 = {nu - 1}"
        )
    if p > 5 or w < nu - 1:
        return 1 - Fraction(s, r) ** 2
    return _exceptional_center(p, nu, r, s, s, branch, ctx)


def _exceptional_center(p, nu, r, s, binom_arg, branch, ctx):
    import math

    if ctx is None:
        ctx = LocalFieldContext(p)
    radicand = Fraction(p) ** (4 * nu + 1) * math.comb(binom_arg, 5)
    root = nth_root(ctx.from_rational(radicand), 5, branch=branch)
    return 1 - ((ctx.from_rational(s) - root) * Fraction(1, r)) ** 2


@dataclass
class TailRadius:
    v_rho: Fraction
    v_e: Fraction

    def to_json(self):
        return {"v_rho": str(self.v_rho), "v_e": str(self.v_e)}


def tail_radius(p, nu, case, extra=None):
    """Valuations of the radius rho of the tail disk (x-coordinate) and of
    the scale e of the disk upstairs (z-coordinate)."""
    case = _norm_case(case)
    x = Fraction(nu) + Fraction(1, p - 1)
    if case == GENERIC:
        if extra not in (None, 0, Fraction(0)):
            raise CaseMismatch("generic case takes no auxiliary valuation")
        return TailRadius(Fraction(2, 3) * x, Fraction(1, 3) * x)
    if extra is None or not Fraction(extra) > 0:
        raise PreconditionViolated(f"case {case} needs a positive auxiliary valuation")
    extra = Fraction(extra)
    if case == A_ZERO:
        return TailRadius(
            Fraction(2, 3) * x + Fraction(1, 3) * extra,
            Fraction(1, 3) * (x - extra),
        )
    return TailRadius(
        Fraction(2, 3) * (x + extra),
        Fraction(1, 3) * (x + extra),
    )


@dataclass
class TailDescriptor:
    case: str
    kind: str  # "new-inseparable"
    j: int
    center: str
    radius_valuation: Fraction
    sigma: Fraction
    upstairs_centers: str
    upstairs_radius_valuation: Fraction

    def to_json(self):
        return {
            "case": self.case,
            "kind": self.kind,
            "j": self.j,
            "center": self.center,
            "radius_valuation": str(self.radius_valuation),
            "sigma": str(self.sigma),
            "upstairs_centers": self.upstairs_centers,
            "upstairs_radius_valuation": str(self.upstairs_radius_valuation),
        }


def insep_tail_catalog(p, nu, case, extra=None):
    """Complete list of new inseparable tails.

    Args:
        p, nu: prime and exponent; empty for nu = 1.
        case: generic / a=0 / a=1.
        extra: v(a) for a=0, v(sqrt(1-a)) for a=1.
    """
    case = _norm_case(case)
    if case == GENERIC:
        return []
    if nu <= 1:
        return []
    if extra is None:
        raise PreconditionViolated(f"case {case} needs the auxiliary valuation")
    extra = Fraction(extra)
    if case == A_ZERO:
        if not 0 < extra <= nu - 1:
            raise InadmissibleValuation(
                f"v(a) must satisfy 0 < v(a) <= nu - 1 = {nu - 1}, got {extra}"
            )
        out = [
            TailDescriptor(
                case=case,
                kind="new-inseparable",
                j=int(nu - extra),
                center="a/2",
                radius_valuation=extra + Fraction(1, p - 1),
                sigma=Fraction(2),
                upstairs_centers="z = +sqrt(-1), z = -sqrt(-1)",
                upstairs_radius_valuation=Fraction(1, 2 * (p - 1)),
            )
        ]
        if p == 5 and extra < nu - 1:
            out.append(
                TailDescriptor(
                    case=case,
                    kind="new-inseparable",
                    j=int(nu - extra - 1),
                    center=f"a/(1-d^2), d = +-(5^{extra + 1}/(r+s))^(2/5)",
                    radius_valuation=extra + Fraction(17, 20),
                    sigma=Fraction(2),
                    upstairs_centers="z = +d, z = -d",
                    upstairs_radius_valuation=Fraction(17, 40),
                )
            )
        return out
    # case a=1: extra = v(sqrt(1-a)), so v(1-a) = 2*extra
    if not 0 < 2 * extra <= 2 * (nu - 1 + Fraction(1, p - 1)):
        raise InadmissibleValuation(
            f"v(1-a) = {2 * extra} must lie in (0, {2 * (nu - 1 + Fraction(1, p - 1))}]"
        )
    if p != 5 or extra >= nu - 1:
        return []
    return [
        TailDescriptor(
            case=case,
            kind="new-inseparable",
            j=int(nu - extra - 1),
            center=f"a/(1-d^2), d = +-2(s/r)(5^{extra + 1}/s)^(2/5)",
            radius_valuation=2 * extra + Fraction(17, 20),
            sigma=Fraction(2),
            upstairs_centers="z = +d, z = -d",
            upstairs_radius_valuation=extra + Fraction(17, 40),
        )
    ]


def new_insep_radius_bounds(p, nu, j, case, extra=None):
    """Strict lower bounds that the disk data of a new inseparable p^j-tail
    must satisfy: returns (bound on v(rho'), optional bound on v(e'))."""
    case = _norm_case(case)
    base = Fraction(nu - j) + Fraction(1, p - 1)
    if case == GENERIC:
        return Fraction(2, 3) * base, None
    extra = Fraction(extra)
    if case == A_ZERO:
        return Fraction(2, 3) * base + Fraction(1, 3) * extra, None
    v1ma = 2 * extra
    return (
        Fraction(2, 3) * (base - v1ma),
        Fraction(1, 3) * (base + v1ma),
    )
