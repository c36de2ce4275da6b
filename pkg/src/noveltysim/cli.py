"""Command line interface.

    noveltysim list
    noveltysim run <experiment> [--seed N] [--trials N] [--out PATH]
                   [--format csv|json|md] [--sigma X] [--delta X] [--parallel]
    noveltysim run-all [--out-dir DIR] [--parallel]
    noveltysim sweep --config FILE [--out-dir DIR] [--parallel]

The NOVELTYSIM_SEED environment variable overrides the default master
seed; an explicit --seed flag wins over both.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .experiments import (
    EXPERIMENT_NAMES,
    ExperimentSpec,
    experiment_defaults,
    run_experiment,
)
from .reports import REPORT_FORMATS, load_config, render, write_report, write_summary


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noveltysim",
        description="Simulation lab for collaboration-effort scaling experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print experiment names and default parameters")

    run = sub.add_parser("run", help="run one experiment")
    run.add_argument("experiment", choices=EXPERIMENT_NAMES)
    run.add_argument("--seed", type=int, default=None, help="master seed override")
    run.add_argument("--trials", type=int, default=None, help="trial count override")
    run.add_argument("--out", type=Path, default=None, help="output path (default: stdout)")
    run.add_argument("--format", choices=REPORT_FORMATS, default="csv")
    run.add_argument("--sigma", type=float, default=None,
                     help="trajectory step noise override")
    run.add_argument("--delta", type=float, default=None,
                     help="trajectory checkpoint tolerance override")
    run.add_argument("--parallel", action="store_true",
                     help="run trials concurrently (identical results)")

    run_all = sub.add_parser("run-all", help="run every experiment with defaults")
    run_all.add_argument("--out-dir", type=Path, default=Path("results"))
    run_all.add_argument("--parallel", action="store_true")

    sweep = sub.add_parser("sweep", help="run experiments from a config file")
    sweep.add_argument("--config", type=Path, required=True)
    sweep.add_argument("--out-dir", type=Path, default=Path("results"))
    sweep.add_argument("--parallel", action="store_true")

    return parser


def _cmd_list() -> int:
    for name in EXPERIMENT_NAMES:
        d = experiment_defaults(name)
        print(name)
        print(f"  seed: {d['master_seed']}")
        if d["n_trials"] is not None:
            print(f"  trials: {d['n_trials']}")
        if d["e_grid"] is not None:
            grid = d["e_grid"]
            shown = (
                ", ".join(str(e) for e in grid)
                if len(grid) <= 12
                else f"{grid[0]}..{grid[-1]} ({len(grid)} sizes)"
            )
            print(f"  task sizes: {shown}")
        for key, value in d["params"].items():
            print(f"  {key}: {_compact(value)}")
    return 0


def _compact(value) -> str:
    if isinstance(value, tuple):
        if len(value) > 12:
            return f"{value[0]}..{value[-1]} ({len(value)} values)"
        return ", ".join(str(v) for v in value)
    return str(value)


def _cmd_run(args: argparse.Namespace) -> int:
    overrides = {}
    if args.sigma is not None:
        overrides["sigma"] = args.sigma
    if args.delta is not None:
        overrides["delta"] = args.delta
    spec = ExperimentSpec(
        name=args.experiment,
        master_seed=args.seed,
        n_trials=args.trials,
        overrides=overrides,
    )
    try:
        table = run_experiment(spec, parallel=args.parallel)
    except ValueError as err:
        print(f"experiment {args.experiment} failed: {err}", file=sys.stderr)
        return 1
    if args.out is None:
        sys.stdout.write(render(table, args.format))
    else:
        write_report(table, args.format, args.out)
        print(f"wrote {args.out}")
    return 0


def _run_specs_to_dir(
    specs: list[ExperimentSpec], out_dir: Path, parallel: bool
) -> int:
    tables = {}
    failures = []
    used_names: dict[str, int] = {}
    for spec in specs:
        try:
            table = run_experiment(spec, parallel=parallel)
        except ValueError as err:
            failures.append(spec.name)
            print(f"experiment {spec.name} failed: {err}", file=sys.stderr)
            continue
        count = used_names.get(spec.name, 0)
        used_names[spec.name] = count + 1
        stem = spec.name if count == 0 else f"{spec.name}_{count + 1}"
        write_report(table, "csv", out_dir / f"{stem}.csv")
        tables[stem] = table
    write_summary(tables, out_dir / "summary.md")
    print(f"wrote {len(tables)} tables to {out_dir}")
    if failures:
        print(f"failed experiments: {', '.join(failures)}", file=sys.stderr)
        return 1
    return 0


def _cmd_run_all(args: argparse.Namespace) -> int:
    specs = [ExperimentSpec(name) for name in EXPERIMENT_NAMES]
    return _run_specs_to_dir(specs, args.out_dir, args.parallel)


def _cmd_sweep(args: argparse.Namespace) -> int:
    try:
        specs = load_config(args.config)
    except ValueError as err:
        print(str(err), file=sys.stderr)
        return 1
    return _run_specs_to_dir(specs, args.out_dir, args.parallel)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "list":
        return _cmd_list()
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "run-all":
        return _cmd_run_all(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
