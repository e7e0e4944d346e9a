"""Command-line front end: report, resurrect, and sweep commands.

Output is deterministic: JSON with sorted keys and all floats printed with 12
significant digits (lowercase exponent); CSV uses the same float formatting.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import discord, families, qstate
from .discord import OptimizerConfig
from .errors import NoConvergence, QuantumStateError
from .measure import INFINITY, QubitBasis
from .qstate import DensityMatrix

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_CONVERGENCE = 3
EXIT_GAP = 4

SWEEP_COLUMNS = [
    "param",
    "S_AB",
    "S_B",
    "cond_entropy_strong",
    "cond_entropy_weak",
    "I",
    "D_s",
    "D_w",
    "delta",
    "D_w_post",
    "gap",
]


def fmt_float(v: float) -> str:
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format(float(v), ".12g")


def _json_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isfinite(v):
            return fmt_float(v)
        return json.dumps(fmt_float(v))  # "inf"/"nan" as strings, valid JSON
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, dict):
        inner = ",".join(f"{json.dumps(k)}:{_json_value(v[k])}" for k in sorted(v))
        return "{" + inner + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_json_value(i) for i in v) + "]"
    raise TypeError(f"cannot serialize {type(v)}")


def dumps(obj) -> str:
    return _json_value(obj)


def _basis_dict(b: QubitBasis) -> dict:
    return {"gamma": float(b.gamma), "delta": float(b.delta)}


def parse_strength(text: str) -> float:
    if text.strip().lower() == "inf":
        return INFINITY
    x = float(text)
    if x < 0 or math.isnan(x):
        raise ValueError(f"strength must be >= 0 or 'inf', got {text}")
    return x


def load_state_file(path: str) -> DensityMatrix:
    with open(path) as fh:
        data = json.load(fh)
    for key in ("dim_a", "dim_b", "re", "im"):
        if key not in data:
            raise QuantumStateError(f"state file missing key '{key}'")
    m = np.asarray(data["re"], dtype=float) + 1j * np.asarray(data["im"], dtype=float)
    return qstate.validate(m, dim_a=int(data["dim_a"]), dim_b=int(data["dim_b"]))


def resolve_state(args) -> DensityMatrix:
    spec = args.state
    if spec.startswith("file:"):
        return load_state_file(spec[len("file:") :])
    if spec == "pure":
        return families.pure_schmidt(args.lambda0)
    if spec == "werner":
        return families.werner(args.z)
    if spec == "random":
        return families.random_state(args.seed)
    raise QuantumStateError(f"unknown state spec '{spec}'")


def make_config(args) -> OptimizerConfig:
    return OptimizerConfig(
        grid_gamma=args.grid,
        grid_delta=args.grid,
        refine_tol=args.refine_tol,
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--state", default="pure", help="pure | werner | random | file:PATH")
    common.add_argument("--lambda0", type=float, default=0.5, help="Schmidt weight for --state pure")
    common.add_argument("--z", type=float, default=0.5, help="singlet weight for --state werner")
    common.add_argument("--seed", type=int, default=0, help="seed for --state random")
    common.add_argument("--x", default="0.5", help="measurement strength (float or 'inf')")
    common.add_argument("--grid", type=int, default=64, help="lattice points per angle")
    common.add_argument("--refine-tol", type=float, default=1e-8, help="refinement tolerance, bits")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", default=None, help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="superdiscord")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("report", parents=[common], help="discord, super discord, and delta for one state")
    res = sub.add_parser("resurrect", parents=[common], help="verify delta against the post-measured state")
    res.add_argument("--gap-tol", type=float, default=1e-3)
    swp = sub.add_parser("sweep", parents=[common], help="CSV sweep over x, z, or lambda0")
    swp.add_argument("--axis", choices=["x", "z", "lambda0"], required=True)
    swp.add_argument("--start", type=float, required=True)
    swp.add_argument("--stop", type=float, required=True)
    swp.add_argument("--steps", type=int, required=True)
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def cmd_report(args) -> int:
    rho = resolve_state(args)
    x = parse_strength(args.x)
    rep = discord.analyze(rho, x, make_config(args))
    if args.format == "json":
        payload = {
            "conditional_entropy_qq": rep.conditional_entropy_qq,
            "mutual_info": rep.mutual_info,
            "discord": rep.discord,
            "super_discord": rep.super_discord,
            "delta": rep.delta,
            "strong_basis": _basis_dict(rep.strong_basis),
            "weak_basis": _basis_dict(rep.weak_basis),
            "strength": rep.strength,
        }
        _emit(dumps(payload), args.out)
    else:
        header = (
            "strength,cond_entropy_qq,mutual_info,discord,super_discord,delta,"
            "strong_gamma,strong_delta,weak_gamma,weak_delta"
        )
        row = ",".join(
            fmt_float(v)
            for v in (
                rep.strength,
                rep.conditional_entropy_qq,
                rep.mutual_info,
                rep.discord,
                rep.super_discord,
                rep.delta,
                rep.strong_basis.gamma,
                rep.strong_basis.delta,
                rep.weak_basis.gamma,
                rep.weak_basis.delta,
            )
        )
        _emit(header + "\n" + row, args.out)
    return EXIT_OK


def cmd_resurrect(args) -> int:
    rho = resolve_state(args)
    x = parse_strength(args.x)
    if not (math.isfinite(x) and x > 0):
        raise QuantumStateError("resurrect requires a finite strength x > 0")
    rec = discord.verify_resurrection(rho, x, make_config(args))
    payload = {
        "delta": rec.delta,
        "post_super_discord": rec.post_super_discord,
        "gap": rec.gap,
        "strong_basis": _basis_dict(rec.strong_basis),
        "post_weak_basis": _basis_dict(rec.post_weak_basis),
        "ambiguous_minimizer": rec.ambiguous_minimizer,
        "coincidence": rec.coincidence,
        "strength": x,
    }
    _emit(dumps(payload), args.out)
    return EXIT_OK if rec.gap <= args.gap_tol else EXIT_GAP


def _sweep_state(args, value: float) -> DensityMatrix:
    if args.axis == "z":
        return families.werner(value)
    if args.axis == "lambda0":
        return families.pure_schmidt(value)
    return resolve_state(args)


def cmd_sweep(args) -> int:
    if args.axis == "z" and args.state not in ("werner",):
        raise QuantumStateError("axis 'z' requires --state werner")
    if args.axis == "lambda0" and args.state not in ("pure",):
        raise QuantumStateError("axis 'lambda0' requires --state pure")
    cfg = make_config(args)
    grid = np.linspace(args.start, args.stop, args.steps)
    lines = [",".join(SWEEP_COLUMNS)]
    for value in grid:
        x = float(value) if args.axis == "x" else parse_strength(args.x)
        rho = _sweep_state(args, float(value))
        rep = discord.analyze(rho, x, cfg)
        s_ab = qstate.von_neumann_entropy(rho.entries)
        s_b = qstate.von_neumann_entropy(qstate.partial_trace_a(rho))
        if math.isfinite(x) and x > 0:
            rec = discord.verify_resurrection(rho, x, cfg)
            dw_post, gap = rec.post_super_discord, rec.gap
        else:
            dw_post, gap = math.nan, math.nan
        row = (
            float(value),
            s_ab,
            s_b,
            rep.discord + rep.conditional_entropy_qq,
            rep.super_discord + rep.conditional_entropy_qq,
            rep.mutual_info,
            rep.discord,
            rep.super_discord,
            rep.delta,
            dw_post,
            gap,
        )
        lines.append(",".join(fmt_float(v) for v in row))
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    # accepted for interface compatibility; evaluation is vectorized, not threaded
    os.environ.get("SUPERDISCORD_THREADS")
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"report": cmd_report, "resurrect": cmd_resurrect, "sweep": cmd_sweep}
    try:
        return handlers[args.command](args)
    except (QuantumStateError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
