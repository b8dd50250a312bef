"""Command line entry point: simulate, optimize, verify.

Exit codes: 0 success, 1 invalid configuration or failed check, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import metrics
from .core import ExperimentConfig
from .optimizer import OptimizationOptions, maximize_visibility, sweep
from .oracle import MAX_ORACLE_ATOMS
from .plot import sweep_figure
from .verify import run_verification

DEFAULTS = {"gT": 2 * math.pi, "N": 20, "seed": 0}
CONFIG_KEYS = frozenset(DEFAULTS)

SIMULATE_COLUMNS = ("n", "a", "D_S0_F", "C_S0_F", "D_S0_atoms", "conservation_residual")
OPTIMIZE_COLUMNS = ("n", "V", "P", "C", "dD_T", "dD_F", "dD_R", "thetas", "phis")


class DomainError(Exception):
    pass


def _uint(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return ";".join(_cell(v) for v in value)
    if isinstance(value, int):
        return str(value)
    return f"{value:.12g}"


def _emit(rows: list[dict], columns: tuple[str, ...], fmt: str, meta: dict) -> str:
    if fmt == "json":
        return json.dumps({**meta, "columns": list(columns), "rows": rows}, indent=2) + "\n"
    lines = [",".join(columns)]
    lines += [",".join(_cell(row[c]) for c in columns) for row in rows]
    return "\n".join(lines) + "\n"


def _load_settings(args) -> dict:
    settings = dict(DEFAULTS)
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise DomainError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(data, dict) or not set(data) <= CONFIG_KEYS:
            raise DomainError(f"config must be an object with keys among {sorted(CONFIG_KEYS)}")
        settings.update(data)
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            settings[key] = flag
    if not isinstance(settings["N"], int) or isinstance(settings["N"], bool):
        raise DomainError("N must be an integer")
    if not isinstance(settings["seed"], int) or settings["seed"] < 0:
        raise DomainError("seed must be a nonnegative integer")
    return settings


def _config(settings: dict) -> ExperimentConfig:
    return ExperimentConfig.from_gT(float(settings["gT"]), settings["N"])


def _n_values(args, config: ExperimentConfig) -> list[int]:
    if args.n is not None:
        if not 0 <= args.n <= config.reservoir_size_N:
            raise DomainError(f"n must lie in [0, {config.reservoir_size_N}]")
        return [args.n]
    top = config.reservoir_size_N if args.n_max is None else args.n_max
    if not 0 <= top <= config.reservoir_size_N:
        raise DomainError(f"n-max must lie in [0, {config.reservoir_size_N}]")
    return list(range(top + 1))


def _meta(config: ExperimentConfig, settings: dict) -> dict:
    return {"gT": config.gT, "N": config.reservoir_size_N, "g_dt": config.g_dt, "seed": settings["seed"]}


def cmd_simulate(args) -> int:
    settings = _load_settings(args)
    config = _config(settings)
    rows = []
    for n in _n_values(args, config):
        rows.append(
            {
                "n": n,
                "a": config.a,
                "D_S0_F": metrics.distinguishability_S0_F(config, n),
                "C_S0_F": metrics.concurrence_S0_F(config, n),
                "D_S0_atoms": [metrics.distinguishability_S0_atom(config, n, i) for i in range(1, n + 1)],
                "conservation_residual": abs(metrics.total_distinguishability(config, n) - 1.0),
            }
        )
    sys.stdout.write(_emit(rows, SIMULATE_COLUMNS, args.format, _meta(config, settings)))
    return 0


def cmd_optimize(args) -> int:
    settings = _load_settings(args)
    config = _config(settings)
    options = OptimizationOptions(starts=args.starts, max_iterations=args.max_iter, seed=settings["seed"])
    ns = _n_values(args, config)
    if args.n is not None and args.n > 0:
        solutions = [maximize_visibility(config, args.n, options)]
    else:
        solutions = sweep(config, ns, options)
    rows = [
        {
            "n": s.n,
            "V": s.visibility,
            "P": s.predictability,
            "C": s.concurrence,
            "dD_T": s.delta_D_T,
            "dD_F": s.delta_D_F,
            "dD_R": s.delta_D_R,
            "thetas": list(s.basis.thetas),
            "phis": list(s.basis.phis),
        }
        for s in solutions
    ]
    sys.stdout.write(_emit(rows, OPTIMIZE_COLUMNS, args.format, _meta(config, settings)))
    if args.plot:
        Path(args.plot).write_text(sweep_figure(solutions), encoding="utf-8")
    return 0


def cmd_verify(args) -> int:
    report = run_verification(max_n=args.max_n, trials=args.trials, seed=args.seed)
    for line in report.lines():
        print(line)
    print("all checks passed" if report.passed else "verification FAILED")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mqeraser", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("--gT", type=float, help="dimensionless interaction time g*T (default 2 pi)")
        p.add_argument("--N", type=int, help="number of reservoir atoms (default 20)")
        p.add_argument("--seed", type=_uint, help="random seed (default 0)")
        p.add_argument("--config", help="JSON file with any of gT, N, seed")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--n", type=int, help="only this number of interacted atoms")
        group.add_argument("--n-max", type=int, help="rows n = 0..n-max (default N)")

    p = sub.add_parser("simulate", help="closed-form D and C per number of interacted atoms")
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("optimize", help="eraser bases maximizing the visibility of S0")
    common(p)
    p.add_argument("--starts", type=_positive, default=OptimizationOptions.starts)
    p.add_argument("--max-iter", type=_positive, default=OptimizationOptions.max_iterations)
    p.add_argument("--plot", help="write an SVG of the sweep to this path")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("verify", help="cross-check closed forms against the dense simulator")
    p.add_argument("--max-n", type=_uint, default=8)
    p.add_argument("--trials", type=_positive, default=50)
    p.add_argument("--seed", type=_uint, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.max_n > MAX_ORACLE_ATOMS:
        parser.error(f"--max-n is capped at {MAX_ORACLE_ATOMS} for the dense simulator")
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
