"""
Command-line front door: parse flags, dispatch to the library modules, and
serialize deterministic reports.

Exit codes: 0 for success / affirmative verdicts, 2 for runs that complete
with a mathematical-contradiction verdict (obstructions, violated identities,
proper subgroups, non-powers), 1 for usage errors and tool failures.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .graph import (
    ReductionTree,
    check_monotonic,
    check_vanishing_cycles,
    enumerate_tail_configs,
    propagate_differents,
    validate_tree,
)
from .groups import (
    element_order,
    generation_check,
    solve_trace_system,
    standard_generators,
    sylow_data,
)
from .localfield import LocalFieldContext, LocalFieldElement
from .pipeline import run_wild_monodromy
from .ramification import (
    Filtration,
    compositum_conductor,
    conductor_case,
    cyclotomic_filtration,
    herbrand,
)
from .series import CoverParams, coefficient_valuations, maclaurin_g
from .torsor import (
    insep_tail_catalog,
    splitting_obstruction,
    tail_center,
    tail_radius,
)
from .valuation import ExtendedRational

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONTRADICTION = 2

_CONTRADICTION_VERDICTS = {
    "ObstructedByConditionI",
    "ObstructedByConditionII",
    "Violated",
    "Violation",
    "Contradiction",
    "ProperSubgroup",
    "no",
    "trivial",
    "inconclusive",
}


class UsageError(Exception):
    """Carries a one-line remedy for the user."""


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(
            f"could not parse {text!r} as a rational; write it as 'a/b'"
        ) from exc


def _ext_fraction(text):
    if str(text).lower() in ("inf", "infinity", "oo"):
        return ExtendedRational(None)
    return ExtendedRational(_fraction(text))


def _show(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (Fraction, ExtendedRational)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    if isinstance(v, dict):
        return {k: _show(x) for k, x in v.items()}
    return v


def _load_config():
    cfg = {"N": 40, "M": 8, "T": None, "format": "json"}
    path = os.environ.get("SRT_CONFIG")
    if path:
        try:
            with open(path) as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(
                f"SRT_CONFIG file {path!r} unreadable ({exc}); point it at a "
                f"JSON object like {{\"N\": 40, \"M\": 8, \"format\": \"json\"}}"
            ) from exc
        for key in cfg:
            if key in data:
                cfg[key] = data[key]
    if cfg["format"] not in ("json", "text"):
        raise UsageError(
            f"output format must be 'json' or 'text', got {cfg['format']!r}"
        )
    for key in ("N", "M"):
        if not isinstance(cfg[key], int) or cfg[key] < 1:
            raise UsageError(f"config {key} must be a positive integer, got {cfg[key]!r}")
    return cfg


def _require_divisible(N, denominators, what):
    need = math.lcm(1, *denominators)
    if N % need != 0:
        raise UsageError(
            f"{what} needs fractional exponents with denominator {need}; "
            f"re-run with N a multiple of {need} (got N = {N})"
        )


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, separators=(",", ":")))
    else:
        for line in _text_lines(obj, ""):
            print(line)


def _text_lines(obj, prefix):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                yield f"{prefix}{k}:"
                yield from _text_lines(v, prefix + "  ")
            else:
                yield f"{prefix}{k}: {v}"
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            if isinstance(v, (dict, list)):
                yield f"{prefix}- [{i}]"
                yield from _text_lines(v, prefix + "  ")
            else:
                yield f"{prefix}- {v}"
    else:
        yield f"{prefix}{obj}"


def _verdict_exit(kind):
    return EXIT_CONTRADICTION if kind in _CONTRADICTION_VERDICTS else EXIT_OK


# --- subcommand handlers (each returns (report object, exit code)) ---


def _cmd_expand(args, cfg):
    sqrt1ma = (
        _fraction(args.sqrt1ma) if args.sqrt1ma is not None else Fraction(-args.s, args.r)
    )
    params = CoverParams(args.p, args.nu, args.r, args.s, sqrt1ma)
    T = args.T if args.T is not None else (cfg["T"] or 3 * args.p + 2)
    series = maclaurin_g(params, T)
    vals = coefficient_valuations(series, args.p)
    return {
        "p": args.p,
        "order": T,
        "coefficients": [str(series.coefficient(i)) for i in range(T + 1)],
        "valuations": [str(v) for v in vals],
    }, EXIT_OK


def _cmd_split_check(args, cfg):
    try:
        raw = json.loads(args.vals)
    except json.JSONDecodeError as exc:
        raise UsageError(
            f"--vals must be a JSON array of rationals like '[\"3/2\", \"inf\"]' ({exc})"
        ) from exc
    vals = [_ext_fraction(v) for v in raw]
    verdict = splitting_obstruction(vals, args.p, args.level)
    return verdict.to_json(), _verdict_exit(verdict.kind)


def _cmd_tail_center(args, cfg):
    ctx = None
    if args.p == 5:
        _require_divisible(cfg["N"], [5], "the exceptional p = 5 center")
        ctx = LocalFieldContext(args.p, cfg["N"], cfg["M"])
    center = tail_center(
        args.p, args.nu, args.r, args.s, args.case, branch=args.branch, ctx=ctx
    )
    if isinstance(center, LocalFieldElement):
        return {"center": center.to_json()}, EXIT_OK
    return {"center": str(center)}, EXIT_OK


def _cmd_tail_radius(args, cfg):
    extra = _fraction(args.extra) if args.extra is not None else None
    return tail_radius(args.p, args.nu, args.case, extra).to_json(), EXIT_OK


def _cmd_insep_tails(args, cfg):
    extra = _fraction(args.extra) if args.extra is not None else None
    catalog = insep_tail_catalog(args.p, args.nu, args.case, extra)
    return [t.to_json() for t in catalog], EXIT_OK


def _load_tree(path):
    try:
        with open(path) as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(
            f"tree file {path!r} unreadable ({exc}); expected the JSON schema "
            f"with 'vertices' and 'edges'"
        ) from exc
    try:
        return ReductionTree.from_json(data)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed tree JSON: {exc}") from exc


def _cmd_tree_check(args, cfg):
    tree = _load_tree(args.tree)
    problems = validate_tree(tree, args.p)
    out = {"problems": problems}
    code = EXIT_CONTRADICTION if problems else EXIT_OK
    try:
        cycles = check_vanishing_cycles(tree)
        out["vanishing_cycles"] = cycles.to_json()
        if cycles.kind == "Violated":
            code = EXIT_CONTRADICTION
    except Exception as exc:  # missing sigma labels: report, not fail
        out["vanishing_cycles"] = {"skipped": str(exc)}
    mono = check_monotonic(tree)
    out["monotonicity"] = mono.to_json()
    if mono.kind == "Violation":
        code = EXIT_CONTRADICTION
    return out, code


def _cmd_tree_solve(args, cfg):
    tree = _load_tree(args.tree)
    root_delta = _fraction(args.root_delta) if args.root_delta is not None else None
    result = propagate_differents(tree, args.p, root_delta)
    return result.to_json(), _verdict_exit(result.status)


def _cmd_enum_tails(args, cfg):
    configs = enumerate_tail_configs(args.tau, args.m_g, args.p)
    out = []
    for c in configs:
        entry = {}
        if c.prim:
            entry["prim"] = [str(s) for s in c.prim]
        if c.new:
            entry["new"] = [str(s) for s in c.new]
        if c.flagged:
            entry["flagged"] = True
        out.append(entry)
    return out, EXIT_OK


def _cmd_conductor(args, cfg):
    if args.compositum:
        values = [_fraction(x) for x in args.compositum.split(",")]
        return {"conductor": str(compositum_conductor(values))}, EXIT_OK
    if args.shape is None:
        raise UsageError("provide --shape or --compositum 'a/b,c/d'")
    value = conductor_case(args.p, args.nu, args.shape)
    return {"conductor": str(value)}, EXIT_OK


def _cmd_herbrand(args, cfg):
    if args.filtration:
        try:
            with open(args.filtration) as handle:
                filtration = Filtration.from_json(json.load(handle))
        except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
            raise UsageError(
                f"filtration file {args.filtration!r} unreadable ({exc}); "
                f"expected {{\"breaks\": [{{\"jump\": ..., \"order\": ...}}]}}"
            ) from exc
    elif args.p is not None and args.nu is not None:
        filtration = cyclotomic_filtration(args.p, args.nu)
    else:
        raise UsageError("provide --filtration FILE or both --p and --nu")
    value = herbrand(filtration, args.direction, _fraction(args.x))
    return {
        "direction": args.direction,
        "x": args.x,
        "value": str(value),
        "conductor": str(filtration.conductor()),
    }, EXIT_OK


def _cmd_group(args, cfg):
    q = args.q
    if args.tau is not None and args.rho is not None:
        from .groups import MatrixElement

        alpha = MatrixElement(1, 1, 0, 1, q)
        beta = solve_trace_system(q, args.tau, args.rho)
    else:
        if args.p is None:
            raise UsageError("provide --p (for the standard pair) or --tau/--rho")
        alpha, beta = standard_generators(q, args.p)
    verdict = generation_check([alpha, beta], q, mode=args.mode)
    out = {
        "q": q,
        "alpha": list(alpha.entries()),
        "beta": list(beta.entries()),
        "orders": {
            "alpha": element_order(alpha),
            "beta": element_order(beta),
            "alpha*beta": element_order(alpha * beta),
        },
        "generation": verdict.to_json(),
    }
    if args.p is not None:
        out["sylow"] = sylow_data(q, args.p).to_json()
    return out, _verdict_exit(verdict.kind)


def _cmd_wild_monodromy(args, cfg):
    report = run_wild_monodromy(args.q, args.p, args.r)
    out = report.to_json()
    out["verdict"] = report.verdict.lower()
    return out, _verdict_exit(out["verdict"])


# --- parser ---


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="srt",
        description="Exact p-adic analysis of cyclic covers and their "
        "stable reductions.",
    )
    parser.add_argument(
        "--format", choices=("json", "text"), default=None, help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("expand", _cmd_expand, "Maclaurin expansion of the cover function")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--sqrt1ma", help="chosen square root of 1-a (default -s/r)")
    p.add_argument("--T", type=int, help="truncation order (default 3p+2)")

    p = add("split-check", _cmd_split_check, "torsor splitting criterion")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--level", type=int, required=True, help="torsor level n")
    p.add_argument(
        "--vals", required=True, help="JSON array of v(c_i), i = 1..T, as 'a/b'"
    )

    p = add("tail-center", _cmd_tail_center, "new etale tail disk center")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--case", required=True, help="generic | a=0 | a=1")
    p.add_argument("--branch", type=int, default=0)

    p = add("tail-radius", _cmd_tail_radius, "new etale tail disk radius")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--case", required=True)
    p.add_argument("--extra", help="v(a) for a=0, v(sqrt(1-a)) for a=1")

    p = add("insep-tails", _cmd_insep_tails, "catalog of new inseparable tails")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--case", required=True)
    p.add_argument("--extra")

    p = add("tree-check", _cmd_tree_check, "reduction tree structural checks")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--tree", required=True, help="tree JSON file")

    p = add("tree-solve", _cmd_tree_solve, "solve the different/epaisseur laws")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--tree", required=True, help="tree JSON file")
    p.add_argument("--root-delta", help="override the root effective different")

    p = add("enum-tails", _cmd_enum_tails, "admissible etale tail configurations")
    p.add_argument("--tau", type=int, required=True, help="number of primitive tails")
    p.add_argument("--m-g", type=int, default=2, dest="m_g")
    p.add_argument("--p", type=int, default=5)

    p = add("conductor", _cmd_conductor, "closed-form conductors")
    p.add_argument("--p", type=int)
    p.add_argument("--nu", type=int)
    p.add_argument("--shape", choices=("tame-over-cyclotomic", "kummer-tower"))
    p.add_argument("--compositum", help="comma-separated conductors to combine")

    p = add("herbrand", _cmd_herbrand, "Herbrand phi/psi transform")
    p.add_argument("--filtration", help="filtration JSON file")
    p.add_argument("--p", type=int)
    p.add_argument("--nu", type=int)
    p.add_argument("--direction", choices=("phi", "psi"), required=True)
    p.add_argument("--x", required=True)

    p = add("group", _cmd_group, "SL2(F_q) generator and Sylow checks")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--tau", type=int, help="prescribed trace of beta")
    p.add_argument("--rho", type=int, help="prescribed trace of alpha*beta")
    p.add_argument("--mode", choices=("criterion", "bfs"), default="criterion")

    p = add(
        "wild-monodromy",
        _cmd_wild_monodromy,
        "end-to-end wild monodromy verification",
    )
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, default=1)

    return parser


def dispatch(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        cfg = _load_config()
        fmt = args.format or cfg["format"]
        report, code = args.handler(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(_show(report), fmt)
    return code


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
