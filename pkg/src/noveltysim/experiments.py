"""Experiment registry: every reference dataset, reproducible from fixed seeds.

Each experiment resolves its defaults, runs its model (Monte Carlo or
closed-form), and returns a ResultTable with a frozen column schema.
Column schemas are versioned via the schema_version metadata key.
"""
from __future__ import annotations

import datetime as _dt
import difflib
import os
from dataclasses import dataclass, field
from typing import Any, Callable

from ._version import __version__
from .analytic import (
    checkpoint_count,
    checkpoint_interval,
    e2e_reliability,
    novelty_dominance,
    verifiability_effort_rate,
)
from .engine import SeedSpec, run_trials
from .fitting import loglog_fit
from .model import (
    AGENT_PRESETS,
    ORG_PRESETS,
    AgentConfig,
    ResultTable,
)
from .org import integer_team_size, min_wall_clock, optimal_team_size, org_sweep
from .trajectory import divergence_sweep, trajectory_checkpoints

SEED_ENV_VAR = "NOVELTYSIM_SEED"
SCHEMA_VERSION = 1

DEFAULT_E_GRID = (10, 25, 50, 100, 200, 500, 1000, 2000, 5000)


@dataclass(frozen=True)
class ExperimentSpec:
    """One experiment request; omitted fields fall back to the defaults."""

    name: str
    master_seed: int | None = None
    n_trials: int | None = None
    e_grid: tuple[int, ...] | None = None
    overrides: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class _Defaults:
    master_seed: int
    n_trials: int | None  # None: closed-form experiment, trials not used
    e_grid: tuple[int, ...] | None
    params: dict[str, Any]


_DEFAULTS: dict[str, _Defaults] = {
    "scaling": _Defaults(
        master_seed=42, n_trials=50, e_grid=DEFAULT_E_GRID, params={},
    ),
    "mutual_information": _Defaults(
        master_seed=456,
        n_trials=50,
        e_grid=DEFAULT_E_GRID,
        params={
            "m_grid": (0.0, 0.3, 0.6, 0.9, 0.99),
            "spec_cost": 1.0,
            "verify_cost": 0.05,
        },
    ),
    "trajectory": _Defaults(
        master_seed=123,
        n_trials=100,
        e_grid=DEFAULT_E_GRID,
        params={"sigma": 0.1, "delta": 1.0},
    ),
    "novelty_dominance": _Defaults(
        master_seed=42,
        n_trials=None,
        e_grid=tuple(range(10, 2001, 10)),
        params={"nu_grid": (0.0, 0.01, 0.05, 0.1, 0.2, 0.5, 1.0)},
    ),
    "march_of_nines": _Defaults(
        master_seed=42,
        n_trials=None,
        e_grid=(10, 25, 50, 100, 200, 400, 500, 1000, 2000, 5000),
        params={
            "target_reliability": 0.8,
            "p_grid": (0.9, 0.95, 0.99, 0.999),
        },
    ),
    "verifiability": _Defaults(
        master_seed=42,
        n_trials=None,
        e_grid=None,
        params={
            "nu_grid": tuple(i / 20 for i in range(21)),
            "v_grid": tuple(i / 20 for i in range(21)),
        },
    ),
    "org_scaling": _Defaults(
        master_seed=42,
        n_trials=None,
        e_grid=(5000,),
        params={"n_grid": tuple(range(1, 201))},
    ),
}

EXPERIMENT_NAMES = tuple(_DEFAULTS)


def suggest(key: str, options) -> str:
    """Human-facing hint appended to unknown-key errors."""
    close = difflib.get_close_matches(key, list(options), n=1)
    return f"; did you mean {close[0]!r}?" if close else ""


def experiment_defaults(name: str) -> dict[str, Any]:
    """Default seed, trials, grid and parameters for one experiment."""
    if name not in _DEFAULTS:
        raise ValueError(
            f"unknown experiment {name!r}{suggest(name, EXPERIMENT_NAMES)}"
        )
    d = _DEFAULTS[name]
    return {
        "master_seed": d.master_seed,
        "n_trials": d.n_trials,
        "e_grid": d.e_grid,
        "params": dict(d.params),
    }


@dataclass(frozen=True)
class _Resolved:
    name: str
    master_seed: int
    n_trials: int | None
    e_grid: tuple[int, ...] | None
    params: dict[str, Any]


def resolve(spec: ExperimentSpec) -> _Resolved:
    """Fill defaults; the env seed applies only when the spec omits one."""
    if spec.name not in _DEFAULTS:
        raise ValueError(
            f"unknown experiment {spec.name!r}{suggest(spec.name, EXPERIMENT_NAMES)}"
        )
    d = _DEFAULTS[spec.name]

    if spec.master_seed is not None:
        seed = int(spec.master_seed)
    elif os.environ.get(SEED_ENV_VAR):
        seed = int(os.environ[SEED_ENV_VAR])
    else:
        seed = d.master_seed
    if seed < 0:
        raise ValueError(f"master_seed must be nonnegative: got {seed}")

    n_trials = d.n_trials
    if spec.n_trials is not None:
        if d.n_trials is None:
            raise ValueError(
                f"experiment {spec.name!r} is closed-form; n_trials does not apply"
            )
        n_trials = int(spec.n_trials)
        if n_trials < 1:
            raise ValueError(f"n_trials must be at least 1: got {n_trials}")

    e_grid = d.e_grid
    if spec.e_grid is not None:
        if d.e_grid is None:
            raise ValueError(
                f"experiment {spec.name!r} has no task-size grid; E_grid does not apply"
            )
        e_grid = tuple(int(e) for e in spec.e_grid)
        if not e_grid:
            raise ValueError("E_grid must not be empty")
        if any(e < 0 for e in e_grid):
            raise ValueError(f"E_grid entries must be nonnegative: got {e_grid}")

    params = dict(d.params)
    for key, value in spec.overrides.items():
        if key not in params:
            raise ValueError(
                f"unknown override {key!r} for experiment {spec.name!r}"
                f"{suggest(key, params)}"
            )
        params[key] = value

    return _Resolved(spec.name, seed, n_trials, e_grid, params)


def _metadata(res: _Resolved) -> dict[str, Any]:
    md: dict[str, Any] = {
        "experiment": res.name,
        "master_seed": res.master_seed,
        "schema_version": SCHEMA_VERSION,
        "artifact_version": __version__,
        "generated_at": _dt.datetime.now(_dt.timezone.utc).isoformat(),
    }
    if res.n_trials is not None:
        md["n_trials"] = res.n_trials
    params: dict[str, Any] = dict(res.params)
    if res.e_grid is not None:
        params["e_grid"] = list(res.e_grid)
    md["parameters"] = _jsonable(params)
    return md


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def run_experiment(spec: ExperimentSpec, parallel: bool = False) -> ResultTable:
    """Run one experiment and return its ResultTable.

    With parallel=True, Monte Carlo trials may execute concurrently; the
    output is bit-identical to a serial run.
    """
    res = resolve(spec)
    runner: Callable[[_Resolved, bool], ResultTable] = _RUNNERS[res.name]
    return runner(res, parallel)


def run_all(
    specs: list[ExperimentSpec] | None = None, parallel: bool = False
) -> dict[str, ResultTable]:
    """Run the given specs (default: all experiments with defaults)."""
    if specs is None:
        specs = [ExperimentSpec(name) for name in EXPERIMENT_NAMES]
    return {spec.name: run_experiment(spec, parallel=parallel) for spec in specs}


# --- individual experiment runners -----------------------------------------


def _run_scaling(res: _Resolved, parallel: bool) -> ResultTable:
    assert res.e_grid is not None and res.n_trials is not None
    fittable = len(set(res.e_grid)) >= 2
    columns = [
        "config", "task_size", "mean_spec", "mean_verify", "mean_correct",
        "mean_total", "std_total", "effort_per_unit",
    ]
    if fittable:
        columns.append("exponent")

    rows = []
    exponents: dict[str, float] = {}
    for name, config in AGENT_PRESETS.items():
        seeds = SeedSpec(res.master_seed, f"scaling:{name}")
        stats = [
            run_trials(config, e, res.n_trials, seeds, parallel=parallel)
            for e in res.e_grid
        ]
        if fittable:
            fit = loglog_fit(
                [(e, s.mean_effort.total) for e, s in zip(res.e_grid, stats)]
            )
            exponents[name] = fit.exponent
        for e, s in zip(res.e_grid, stats):
            row = [
                name, e, s.mean_effort.spec, s.mean_effort.verify,
                s.mean_effort.correct, s.mean_effort.total, s.std_total,
                s.effort_per_unit,
            ]
            if fittable:
                row.append(exponents[name])
            rows.append(tuple(row))

    metadata = _metadata(res)
    if not fittable:
        metadata["exponent_note"] = "insufficient task sizes for exponent fit"
    return ResultTable("scaling", tuple(columns), tuple(rows), metadata)


def _run_mutual_information(res: _Resolved, parallel: bool) -> ResultTable:
    assert res.e_grid is not None and res.n_trials is not None
    m_grid = res.params["m_grid"]
    spec_cost = float(res.params["spec_cost"])
    verify_cost = float(res.params["verify_cost"])

    rows = []
    for m in m_grid:
        if not 0.0 <= m <= 1.0:
            raise ValueError(f"m_grid entries must lie in [0, 1]: got {m}")
        # Inference failures behave exactly like novel decisions that the
        # agent then resolves: specification is charged, execution always
        # succeeds, so only spec + verification effort remains.
        config = AgentConfig(
            nu=1.0 - m, p_routine=1.0, p_novel=1.0, self_correction=0.0,
            verify_cost=verify_cost, correct_cost=0.0, spec_cost=spec_cost,
        )
        seeds = SeedSpec(res.master_seed, f"mutual_information:{m!r}")
        for e in res.e_grid:
            s = run_trials(config, e, res.n_trials, seeds, parallel=parallel)
            rows.append(
                (m, e, s.mean_effort.total, s.std_total, s.effort_per_unit)
            )
    columns = ("mutual_info", "task_size", "mean_total", "std_total", "effort_per_unit")
    return ResultTable("mutual_information", columns, tuple(rows), _metadata(res))


def _run_trajectory(res: _Resolved, parallel: bool) -> ResultTable:
    assert res.e_grid is not None and res.n_trials is not None
    sigma = float(res.params["sigma"])
    delta = float(res.params["delta"])
    seeds = SeedSpec(res.master_seed, "trajectory")
    sweep = divergence_sweep(sigma, list(res.e_grid), res.n_trials, seeds)

    fittable = (
        len({r.task_size for r in sweep}) >= 2
        and all(r.mean_max_deviation > 0 for r in sweep)
    )
    columns = [
        "sigma", "task_size", "mean_max_deviation", "std_max_deviation",
        "checkpoints",
    ]
    if fittable:
        columns.append("exponent")
        fit = loglog_fit([(r.task_size, r.mean_max_deviation) for r in sweep])

    rows = []
    for r in sweep:
        row = [
            sigma, r.task_size, r.mean_max_deviation, r.std_max_deviation,
            trajectory_checkpoints(delta, sigma, r.task_size) if sigma > 0 else 0,
        ]
        if fittable:
            row.append(fit.exponent)
        rows.append(tuple(row))

    metadata = _metadata(res)
    if not fittable:
        metadata["exponent_note"] = "insufficient data for divergence exponent fit"
    return ResultTable("trajectory", tuple(columns), tuple(rows), metadata)


def _run_novelty_dominance(res: _Resolved, parallel: bool) -> ResultTable:
    assert res.e_grid is not None
    rows = []
    for nu in res.params["nu_grid"]:
        for e in res.e_grid:
            h = novelty_dominance(nu, e)
            rows.append((nu, e, h, h / e))
    columns = ("novelty", "task_size", "effort", "effort_per_unit")
    return ResultTable("novelty_dominance", columns, tuple(rows), _metadata(res))


def _run_march_of_nines(res: _Resolved, parallel: bool) -> ResultTable:
    assert res.e_grid is not None
    target = float(res.params["target_reliability"])
    rows = []
    for p in res.params["p_grid"]:
        interval = checkpoint_interval(p, target)
        for e in res.e_grid:
            rows.append(
                (p, e, e2e_reliability(p, e), interval, checkpoint_count(p, target, e))
            )
    columns = (
        "step_reliability", "task_size", "e2e_reliability",
        "checkpoint_interval", "checkpoint_count",
    )
    return ResultTable("march_of_nines", columns, tuple(rows), _metadata(res))


def _run_verifiability(res: _Resolved, parallel: bool) -> ResultTable:
    rows = [
        (nu, v, verifiability_effort_rate(nu, v))
        for nu in res.params["nu_grid"]
        for v in res.params["v_grid"]
    ]
    columns = ("novelty", "verifiability", "effort_per_unit")
    return ResultTable("verifiability", columns, tuple(rows), _metadata(res))


def _run_org_scaling(res: _Resolved, parallel: bool) -> ResultTable:
    assert res.e_grid is not None
    n_grid = res.params["n_grid"]
    rows = []
    for name, org in ORG_PRESETS.items():
        for e in res.e_grid:
            n_star = optimal_team_size(org, e)
            t_star = min_wall_clock(org, e)
            n_int, t_int = integer_team_size(org, e)
            for point in org_sweep(org, e, list(n_grid)):
                rows.append(
                    (
                        name, e, point.n, point.wall_clock, point.total_effort,
                        point.work_efficiency, n_star, t_star, n_int, t_int,
                    )
                )
    columns = (
        "config", "task_size", "team_size", "wall_clock", "total_effort",
        "work_efficiency", "optimal_team_size", "min_wall_clock",
        "optimal_team_size_int", "wall_clock_at_int",
    )
    return ResultTable("org_scaling", columns, tuple(rows), _metadata(res))


_RUNNERS: dict[str, Callable[[_Resolved, bool], ResultTable]] = {
    "scaling": _run_scaling,
    "mutual_information": _run_mutual_information,
    "trajectory": _run_trajectory,
    "novelty_dominance": _run_novelty_dominance,
    "march_of_nines": _run_march_of_nines,
    "verifiability": _run_verifiability,
    "org_scaling": _run_org_scaling,
}
