"""Command-line front end: every library operation as a subcommand.

Output modes: human-readable text (default) or a single-line JSON envelope
(--json) of the form {"command": ..., "inputs": ..., "result": ...} on
success and {"command": ..., "inputs": ..., "error": {"code", "message"}}
on failure; exactly one of result/error is present. Numbers are printed
with 17 significant digits in both modes, so emitted JSON re-serializes
byte-identically after a parse round trip.

Exit codes: 0 success, 2 domain/validation error, 3 solver non-convergence
(the best iterate is still reported in a result envelope).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from enum import Enum
from fractions import Fraction

from .errors import TowerlabError
from .inequalities import Inequality, sweep
from .solver import (
    TowerEquation,
    bracket_tower,
    lambert_w0,
    solve_tower,
    solve_via_lambert,
)
from .witnesses import (
    classify_xx_target,
    log_construction_pair,
    lord_pair,
    parse_rational,
    triple_sqrt_power,
    verify_pair,
)

__all__ = ["main", "run", "to_json", "format_number"]


def format_number(value: float) -> str:
    """Fixed 17-significant-digit rendering used by both output modes."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0.0:
        value = 0.0  # normalize -0.0; JSON "-0" would parse back as int 0
    return format(value, ".17g")


def _fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_json(value) -> str:
    """Serialize an envelope deterministically (insertion-order keys)."""
    if isinstance(value, dict):
        items = ", ".join(f"{to_json(str(k))}: {to_json(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isfinite(value):
            return format_number(value)
        return json.dumps(format_number(value))  # non-finite becomes a string
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, Fraction):
        return json.dumps(_fraction_str(value))
    if isinstance(value, Enum):
        return json.dumps(value.value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _text_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, Fraction):
        return _fraction_str(value)
    if isinstance(value, Enum):
        return str(value.value)
    return str(value)


def _kv_lines(payload: dict, prefix: str = "") -> list[str]:
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.extend(_kv_lines(value, prefix=f"{prefix}{key}."))
        else:
            lines.append(f"{prefix}{key} = {_text_value(value)}")
    return lines


def _cmd_solve(args, inputs):
    inputs["height"] = args.height
    if args.y is not None:
        inputs["y"] = args.y
        eq = TowerEquation.from_target(args.height, args.y)
    else:
        eq = TowerEquation(args.height, args.log_y)
    inputs["log_y"] = eq.log_y
    inputs["tol"] = args.tol
    inputs["max_iter"] = args.max_iter

    result = solve_tower(eq, tol=args.tol, max_iter=args.max_iter)
    payload = {
        "x": result.x,
        "residual": result.residual,
        "iterations": result.iterations,
        "converged": result.converged,
        "bracket": {
            "lo": result.bracket.lo,
            "hi": result.bracket.hi,
            "provenance": result.bracket.provenance,
        },
    }
    if args.height == 1:
        payload["lambert_x"] = solve_via_lambert(eq.log_y)
    return payload, 0 if result.converged else 3


def _cmd_bracket(args, inputs):
    inputs["height"] = args.height
    if args.y is not None:
        inputs["y"] = args.y
        eq = TowerEquation.from_target(args.height, args.y)
    else:
        eq = TowerEquation(args.height, args.log_y)
    inputs["log_y"] = eq.log_y
    bracket = bracket_tower(eq.height, eq.log_y)
    return {"lo": bracket.lo, "hi": bracket.hi, "provenance": bracket.provenance}, 0


def _cmd_lambert(args, inputs):
    inputs["z"] = args.z
    w = lambert_w0(args.z)
    return {"w": w, "identity_residual": w * math.exp(w) - args.z}, 0


def _cmd_sweep(args, inputs):
    inputs["inequality"] = args.inequality
    inputs["lo"] = args.lo
    inputs["hi"] = args.hi
    inputs["samples"] = args.samples
    inputs["seed"] = args.seed
    report = sweep(Inequality(args.inequality), args.lo, args.hi, args.samples, args.seed)
    payload = {
        "inequality_id": report.inequality_id,
        "samples": report.samples,
        "domain_lo": report.domain_lo,
        "domain_hi": report.domain_hi,
        "min_margin": report.min_margin,
        "argmin": report.argmin,
        "all_positive": report.all_positive,
        "seed": report.seed,
    }
    return payload, 0


def _pair_payload(pair) -> dict:
    return {
        "base_kind": pair.base_kind,
        "base_param": pair.base_param,
        "base_value": pair.base_value,
        "exponent_value": pair.exponent_value,
        "target": pair.target,
        "certified_irrational": pair.certified_irrational,
        "residual": verify_pair(pair),
    }


def _cmd_lord_pair(args, inputs):
    inputs["p"] = args.p
    inputs["m"] = args.m
    inputs["n"] = args.n
    pair = lord_pair(args.p, args.m, args.n)
    return _pair_payload(pair), 0


def _cmd_pair(args, inputs):
    inputs["base"] = args.base
    inputs["c"] = args.c
    c = parse_rational(args.c)
    inputs["c"] = c
    pair = log_construction_pair(args.base, c)
    return _pair_payload(pair), 0


def _cmd_triple_sqrt(args, inputs):
    inputs["n"] = args.n
    t = triple_sqrt_power(args.n)
    payload = {"n": t.n, "is_rational": t.is_rational}
    if t.is_rational:
        payload["exact_value"] = t.exact_value
    else:
        payload["coefficient"] = t.coefficient
        payload["radicand"] = t.radicand
    payload["approx"] = t.approx
    return payload, 0


def _cmd_classify(args, inputs):
    inputs["y"] = args.y
    y = parse_rational(args.y)
    inputs["y"] = y
    cls = classify_xx_target(y)
    payload = {"kind": cls.kind}
    if cls.n is not None:
        payload["n"] = cls.n
    payload["y"] = cls.y
    return payload, 0


_HANDLERS = {
    "solve": _cmd_solve,
    "bracket": _cmd_bracket,
    "lambert": _cmd_lambert,
    "sweep": _cmd_sweep,
    "lord-pair": _cmd_lord_pair,
    "pair": _cmd_pair,
    "triple-sqrt": _cmd_triple_sqrt,
    "classify": _cmd_classify,
}


def _add_target_args(parser):
    parser.add_argument("--height", type=int, choices=(1, 2), required=True,
                        help="tower height: 1 for x^x, 2 for x^(x^x)")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--y", type=float, help="target y (must exceed 1)")
    group.add_argument("--log-y", type=float, dest="log_y",
                       help="target as L = ln(y); use for huge y like 10^(10^6)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="towerlab",
        description="Solve power-tower equations, sweep inequality margins, "
                    "and build constructive irrationality witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve x^x = y or x^(x^x) = y")
    _add_target_args(solve)
    solve.add_argument("--tol", type=float, default=1e-12,
                       help="convergence tolerance on the log-space residual")
    solve.add_argument("--max-iter", type=int, default=200, dest="max_iter")

    bracket = sub.add_parser("bracket", help="certified bracket for the root")
    _add_target_args(bracket)

    lam = sub.add_parser("lambert", help="principal-branch Lambert W")
    lam.add_argument("--z", type=float, required=True)

    sw = sub.add_parser("sweep", help="seeded margin sweep of an inequality")
    sw.add_argument("--inequality", required=True,
                    choices=[i.value for i in Inequality])
    sw.add_argument("--lo", type=float, required=True)
    sw.add_argument("--hi", type=float, required=True)
    sw.add_argument("--samples", type=int, required=True)
    sw.add_argument("--seed", type=int, required=True)

    lp = sub.add_parser("lord-pair", help="pair (sqrt p, log_sqrt(p)(m/n))")
    lp.add_argument("--p", type=int, required=True)
    lp.add_argument("--m", type=int, required=True)
    lp.add_argument("--n", type=int, required=True)

    pr = sub.add_parser("pair", help="pair (a, log_a c) over the base catalog")
    pr.add_argument("--base", required=True, help="'e', 'pi', or 'sqrt:<k>'")
    pr.add_argument("--c", required=True, help="rational target, 'a/b' or integer")

    ts = sub.add_parser("triple-sqrt", help="((sqrt n)^sqrt n)^sqrt n exactly")
    ts.add_argument("--n", type=int, required=True)

    cl = sub.add_parser("classify", help="rational/irrational verdict for x^x = y")
    cl.add_argument("--y", required=True, help="rational target, 'a/b' or integer")

    for p in (solve, bracket, lam, sw, lp, pr, ts, cl):
        p.add_argument("--json", action="store_true",
                       help="emit a single-line JSON envelope")
    return parser


def run(argv=None) -> int:
    """Parse argv, dispatch, and return the exit code (0, 2, or 3)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return code

    inputs: dict = {}
    try:
        payload, code = _HANDLERS[args.command](args, inputs)
    except TowerlabError as exc:
        error = {"code": exc.code, "message": str(exc)}
        if args.json:
            envelope = {"command": args.command, "inputs": inputs, "error": error}
            sys.stdout.write(to_json(envelope) + "\n")
        else:
            sys.stderr.write(f"error: {error['code']}: {error['message']}\n")
        return 2

    if args.json:
        envelope = {"command": args.command, "inputs": inputs, "result": payload}
        sys.stdout.write(to_json(envelope) + "\n")
    else:
        for line in _kv_lines(payload):
            sys.stdout.write(line + "\n")
        if code == 3:
            sys.stderr.write("warning: did not converge within max-iter\n")
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
