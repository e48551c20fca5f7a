"""
End-to-end wild monodromy verification: from (q, p, r) build the auxiliary
cover parameters, locate the inseparable-tail disk center d, evaluate the
cover function g at d along two independent paths, extract the p-th root
delta, and decide the p-th/p^2-th power questions whose combination witnesses
nontrivial wild monodromy.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .localfield import (
    DivergentSeries,
    LocalFieldContext,
    PrecisionError,
    is_pth_power,
    nth_root,
)
from .series import CoverParams, maclaurin_g
from .valuation import vp


class PipelineError(RuntimeError):
    pass


@dataclass
class PipelineReport:
    inputs: dict
    steps: list = field(default_factory=list)
    verdict: str = "Inconclusive"

    def add(self, step_id, description, value):
        self.steps.append({"id": step_id, "description": description, "value": value})
        return value

    def to_json(self):
        def show(v):
            if hasattr(v, "to_json"):
                return v.to_json()
            if isinstance(v, Fraction):
                return str(v)
            if isinstance(v, (list, tuple)):
                return [show(x) for x in v]
            return v if isinstance(v, (int, bool, dict, str)) else repr(v)

        return {
            "inputs": {k: show(v) for k, v in self.inputs.items()},
            "steps": [
                {
                    "id": s["id"],
                    "description": s["description"],
                    "value": show(s["value"]),
                }
                for s in self.steps
            ],
            "verdict": self.verdict,
        }

    def to_text(self):
        lines = [f"inputs: {self.inputs}"]
        for s in self.steps:
            lines.append(f"[{s['id']}] {s['description']}: {s['value']}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _direct_g(params, d):
    """g(d) as the exact product of the four linear factors."""
    out = d.ctx.one()
    for root, m in params.roots():
        out = out * (d - root) ** m
    return out


def run_wild_monodromy(q, p, r=1):
    """Run the full verification chain for the degree-q cover with cyclic
    p-Sylow; the paper-exact case is (q, p) = (251, 5).

    Returns a PipelineReport whose verdict is "Nontrivial" exactly when g(d)
    is a p-th power but not a p^2-th power, for both sign branches of d.
    """
    if vp(r, p) != 0:
        raise PipelineError(f"need v_{p}({r}) = 0")
    nu = vp(q * q - 1, p)
    if nu.is_infinite or nu.as_fraction() < 2:
        raise PipelineError(
            f"need p^2 | q^2 - 1 for an inseparable tail, got v = {nu}"
        )
    nu = int(nu.as_fraction())
    s = p
    sqrt1ma = Fraction(-s, r)
    a = 1 - sqrt1ma**2
    w = int(vp(sqrt1ma, p).as_fraction())  # = 1
    if not w < nu - 1:
        raise PipelineError(
            f"inseparable-tail case needs v(sqrt(1-a)) = {w} < nu - 1 = {nu - 1}"
        )
    report = PipelineReport(
        inputs={"q": q, "p": p, "r": r, "s": s, "a": a, "nu": nu}
    )
    report.add("params", "auxiliary cover parameters (s = p, a = 1 - p^2/r^2)", str(a))
    report.add("v_sqrt", "v(sqrt(1-a))", Fraction(w))
    j = nu - w - 1
    report.add("tail", "new inseparable tail level j", j)

    ctx = LocalFieldContext(p, N=5, M=8)
    params = CoverParams(p, nu, r, s, sqrt1ma)
    T = 3 * p + 2
    # d = +-2 (s/r) (p^(w+1)/s)^(2/5); with s = p this is an exact pi-power
    # (the p-content of 2s/r shifts the exponent up by w during normalization)
    d_plus = ctx.pi_power(Fraction(2, 5), Fraction(2 * s, r))
    if d_plus.valuation().as_fraction() != Fraction(5 * w + 2, 5):
        raise PipelineError("internal: center valuation mismatch")
    report.add("center", "disk center d (positive branch)", repr(d_plus))

    sign = 1 if (r + s) % 2 == 0 else -1
    verdicts = []
    for branch, d in (("+", d_plus), ("-", -d_plus)):
        series = maclaurin_g(params, T)
        try:
            g_series = series.evaluate(d)
            g_direct = _direct_g(params, d)
        except (PrecisionError, DivergentSeries) as exc:
            raise PipelineError(
                f"insufficient precision evaluating g(d): {exc}; retry with a "
                f"larger context (N = {ctx.N}, M >= {ctx.M + 4}, T >= {T + p})"
            ) from exc
        agreement = (g_series - g_direct).valuation_lower_bound()
        if not agreement > Fraction(2 * w, 1) + Fraction(1, p - 1):
            raise PipelineError(
                f"series and closed-form evaluations of g(d) disagree "
                f"(v(difference) >= {agreement}); increase T beyond {T}"
            )
        report.add(
            f"g(d){branch}",
            "g(d) by truncated series (agrees with the exact product)",
            repr(g_series),
        )
        g = g_direct.truncate(g_series.prec) if g_series.prec is not None else g_direct
        try:
            delta = nth_root(g, p)
        except (PrecisionError, DivergentSeries) as exc:
            raise PipelineError(
                f"could not extract the p-th root of g(d): {exc}; retry with "
                f"M >= {ctx.M + 4}"
            ) from exc
        check = (delta**p - g).valuation_lower_bound()
        report.add(
            f"delta{branch}",
            f"delta = g(d)^(1/{p}) (delta^{p} matches g(d) to v >= {check})",
            repr(delta),
        )
        eps = -delta * sign
        report.add(
            f"eps{branch}",
            "sign-normalized root -delta",
            repr(eps),
        )
        first = is_pth_power(g, p)
        second = is_pth_power(eps, p)
        report.add(
            f"power-p{branch}",
            f"is g(d) a {p}-th power",
            first,
        )
        report.add(
            f"power-p2{branch}",
            f"is g(d) a {p * p}-th power (via the normalized root)",
            second,
        )
        if first.kind == "undecidable" or second.kind == "undecidable":
            raise PipelineError(
                f"power test undecidable at precision; retry with M >= {ctx.M + 4}"
            )
        verdicts.append((first.kind, second.kind))
    if len(set(verdicts)) != 1:
        report.verdict = "Inconclusive"
        report.add("branches", "sign branches disagree", verdicts)
        return report
    first_kind, second_kind = verdicts[0]
    if first_kind == "yes" and second_kind == "no":
        report.verdict = "Nontrivial"
    elif first_kind == "yes" and second_kind == "yes":
        report.verdict = "Trivial"
    else:
        report.verdict = "Inconclusive"
    return report
