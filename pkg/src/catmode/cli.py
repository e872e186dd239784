"""Command-line front end.

    python -m catmode equilibrium --b 0.6 --h 0
    python -m catmode modes --b 0.6 --h 0.1 --N 4 [--format csv --output outdir]
    python -m catmode nonlinear --b 0.6 --h 0 --N 7
    python -m catmode oracle --b 0.6 --h 0 --links 200 --N 8

Options may also come from a ``--config`` file of ``key=value`` lines (keys
are the long option names without dashes); command-line flags win.
Exit status: 0 success, 2 bad input, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .assembly import assemble, detect_degeneracy
from .basis import fourier_sine_basis
from .chain import linearized_frequencies, static_equilibrium
from .equilibrium import SpanGeometry, solve_equilibrium
from .errors import InputError, NumericalError
from .modal import solve_modes
from .nonlinear import one_mode_frequency
from .quadrature import QuadratureRule

SIG_DIGITS = 10
EXIT_INPUT, EXIT_NUMERICAL = 2, 3


def _clean(obj):
    """Round floats to fixed significant digits so output is byte-stable."""
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        return float(f"{x:.{SIG_DIGITS}g}") + 0.0
    return obj


def _num(x) -> str:
    return f"{float(x) + 0.0:.{SIG_DIGITS}g}"


def _read_config(path: str) -> dict[str, str]:
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}:{lineno}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        cfg[key.lstrip("-").replace("-", "_")] = val
    return cfg


def _geometry(args) -> SpanGeometry:
    return SpanGeometry(args.b, args.h + 0.0, args.length, args.mass, args.g)


def _rule(args) -> QuadratureRule:
    if args.panels is None:
        return QuadratureRule.from_env(args.order)
    return QuadratureRule(args.panels, args.order)


def _meta(args) -> dict:
    keys = ["b", "h", "length", "mass", "g", "panels", "order", "N", "samples", "links", "modes"]
    cfg = {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}
    rule = _rule(args)
    cfg["panels"], cfg["order"] = rule.panel_count, rule.nodes_per_panel
    return {"command": args.command, "version": __version__, "config": cfg}


def run_equilibrium(args) -> dict:
    shape = solve_equilibrium(_geometry(args))
    x = np.linspace(0.0, shape.b, args.samples)
    end, length = shape.residuals()
    return {
        "meta": _meta(args),
        "equilibrium": {"W": shape.W, "C": shape.C},
        "residuals": {"end_height": end, "arc_length": length},
        "samples": np.column_stack([x, shape.y(x)]),
    }


def _system(args):
    shape = solve_equilibrium(_geometry(args))
    system = assemble(shape, fourier_sine_basis(shape.b, args.N), _rule(args))
    return shape, system


def run_modes(args) -> dict:
    shape, system = _system(args)
    modes = solve_modes(system, args.samples)
    return {
        "meta": _meta(args),
        "equilibrium": {"W": shape.W, "C": shape.C},
        "system": {
            "M": system.M, "B": system.B, "p": system.p, "q": system.q,
            "lambda0": system.lambda0,
            "parallelism_residual": system.parallelism_residual,
            "quadrature_change": system.quadrature_change,
        },
        "modes": [
            {"omega": modes.frequencies[i], "coeffs": modes.coefficients[:, i],
             "samples": modes.sampled_shapes[i]}
            for i in range(len(modes))
        ],
    }


def run_nonlinear_check(args) -> dict:
    shape, system = _system(args)
    modes = solve_modes(system, args.samples)
    count = min(args.modes, len(modes))
    mode_basis = modes.as_basis(count)
    rule = _rule(args)
    reassembled = assemble(shape, mode_basis, rule, check_convergence=False)
    q_sine = float(np.linalg.norm(system.q))
    q_modes = float(np.linalg.norm(reassembled.q))
    rows = []
    for i in range(count):
        res = one_mode_frequency(shape, mode_basis, i, rule)
        lin = float(modes.frequencies[i])
        rows.append({"mode": i + 1, "omega_linear": lin, "omega_tilde": res.omega_tilde,
                     "diff": res.omega_tilde - lin, "rel_diff": (res.omega_tilde - lin) / lin,
                     "C1": res.C1, "C2": res.C2})
    return {
        "meta": _meta(args),
        "equilibrium": {"W": shape.W, "C": shape.C},
        "sine_basis": {"q_norm": q_sine, "degenerate": detect_degeneracy(system),
                       "lambda0": system.lambda0},
        "mode_basis": {"q_norm": q_modes, "q_ratio": q_modes / q_sine,
                       "degenerate": detect_degeneracy(reassembled)},
        "modes": rows,
    }


def run_oracle_compare(args) -> dict:
    geom = _geometry(args)
    shape, system = _system(args)
    modal = solve_modes(system, 2).frequencies[: args.modes]
    chain = static_equilibrium(geom, args.links)
    oracle = linearized_frequencies(chain, len(modal))
    tension = geom.weight * shape.W
    return {
        "meta": _meta(args),
        "n_links": args.links,
        "oracle": oracle,
        "modal": modal,
        "relative_differences": (oracle - modal) / modal,
        "horizontal_reaction": chain.H,
        "continuum_tension": tension,
        "reaction_rel_diff": (chain.H - tension) / tension,
        "closure_residual": float(np.max(np.abs(chain.closure_residual()))),
    }


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_num(v) if isinstance(v, (float, np.floating)) else v for v in r])
    return buf.getvalue()


def _emit(text: str, output: str | None):
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _write_csv(args, payload: dict):
    cmd = args.command
    if cmd == "modes":
        outdir = Path(args.output or ".")
        outdir.mkdir(parents=True, exist_ok=True)
        for i, mode in enumerate(payload["modes"], 1):
            text = _csv_text(["x", "v", "u"], np.asarray(mode["samples"]).tolist())
            (outdir / f"mode_{i}.csv").write_text(text, encoding="utf-8")
        return
    if cmd == "equilibrium":
        text = _csv_text(["x", "y"], np.asarray(payload["samples"]).tolist())
    elif cmd == "nonlinear":
        keys = ["mode", "omega_linear", "omega_tilde", "diff", "rel_diff"]
        text = _csv_text(keys, [[r[k] for k in keys] for r in payload["modes"]])
    else:
        rows = zip(range(1, len(payload["modal"]) + 1), payload["oracle"], payload["modal"],
                   payload["relative_differences"])
        text = _csv_text(["mode", "oracle", "modal", "rel_diff"], rows)
    _emit(text, args.output)


COMMANDS = {
    "equilibrium": run_equilibrium,
    "modes": run_modes,
    "nonlinear": run_nonlinear_check,
    "oracle": run_oracle_compare,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file of option defaults")
    common.add_argument("--b", type=float, default=0.6, help="horizontal span")
    common.add_argument("--h", type=float, default=0.0, help="height of right support")
    common.add_argument("--length", type=float, default=1.0, help="chain length")
    common.add_argument("--mass", type=float, default=1.0, help="mass per unit length")
    common.add_argument("--g", type=float, default=1.0, help="gravitational acceleration")
    common.add_argument("--panels", type=int, default=None,
                        help="quadrature panels (default: $CATMODE_QUAD_PANELS or 16)")
    common.add_argument("--order", type=int, default=10, help="Gauss-Legendre nodes per panel")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--output", default=None,
                        help="output file (json) or directory (modes csv); default stdout / cwd")
    common.add_argument("--samples", type=int, default=401, help="output grid size")

    parser = argparse.ArgumentParser(prog="catmode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("equilibrium", parents=[common], help="static catenary shape")
    p = sub.add_parser("modes", parents=[common], help="assumed-modes frequencies and shapes")
    p.add_argument("--N", type=int, default=4, help="number of sine trial functions")
    p = sub.add_parser("nonlinear", parents=[common], help="degeneracy replay and one-mode check")
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--modes", type=int, default=3)
    p = sub.add_parser("oracle", parents=[common], help="discrete-chain frequency comparison")
    p.add_argument("--N", type=int, default=8)
    p.add_argument("--links", type=int, default=200)
    p.add_argument("--modes", type=int, default=3)
    return parser


def _parse(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        cfg = _read_config(args.config)
        subparser = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest for a in subparser._actions}
        unknown = sorted(set(cfg) - known - {"config"})
        if unknown:
            raise InputError(f"unknown config keys: {', '.join(unknown)}")
        subparser.set_defaults(**cfg)
        args = parser.parse_args(argv)
    if args.samples < 2:
        raise InputError("--samples must be at least 2")
    if getattr(args, "N", 2) < 2:
        raise InputError("--N must be at least 2")
    if getattr(args, "links", 3) < 3:
        raise InputError("--links must be at least 3")
    return args


def main(argv=None) -> int:
    try:
        args = _parse(argv)
        payload = _clean(COMMANDS[args.command](args))
        if args.format == "csv":
            _write_csv(args, payload)
        else:
            _emit(json.dumps(payload, indent=2) + "\n", args.output)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
