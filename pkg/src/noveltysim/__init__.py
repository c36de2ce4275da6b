"""noveltysim: a simulation and analysis lab for collaboration-effort scaling.

Monte Carlo per-decision simulation of human-agent task execution,
closed-form oracles, a trajectory-divergence model, an organizational
scaling optimizer, and an experiment harness that regenerates every
reference dataset from fixed seeds.
"""
from ._version import __version__
from .analytic import (
    amdahl_limit,
    amdahl_speedup,
    asymptotic_coefficient,
    checkpoint_count,
    checkpoint_interval,
    e2e_reliability,
    effective_novelty,
    expected_effort,
    mutual_info_effort,
    novelty_dominance,
    uncaught_error_rate,
    verifiability_effort_rate,
)
from .engine import SeedSpec, run_trial_batch, run_trials, simulate_task
from .experiments import (
    DEFAULT_E_GRID,
    EXPERIMENT_NAMES,
    ExperimentSpec,
    experiment_defaults,
    run_all,
    run_experiment,
)
from .fitting import PowerLawFit, loglog_fit, mean_std
from .model import (
    AGENT_PRESETS,
    ORG_PRESETS,
    AgentConfig,
    AggregateStats,
    EffortBreakdown,
    OrgConfig,
    ResultTable,
    TrialResult,
    agent_preset,
    org_preset,
    validate,
    validate_org,
)
from .org import (
    OrgCurvePoint,
    integer_team_size,
    min_wall_clock,
    optimal_team_size,
    org_sweep,
    total_effort,
    wall_clock,
)
from .reports import (
    ConfigError,
    load_config,
    read_report_json,
    render,
    write_report,
    write_summary,
)
from .trajectory import (
    DivergenceResult,
    divergence_sweep,
    simulate_divergence,
    trajectory_checkpoints,
)

__all__ = [
    "__version__",
    "AGENT_PRESETS",
    "AgentConfig",
    "AggregateStats",
    "ConfigError",
    "DEFAULT_E_GRID",
    "DivergenceResult",
    "EffortBreakdown",
    "EXPERIMENT_NAMES",
    "ExperimentSpec",
    "ORG_PRESETS",
    "OrgConfig",
    "OrgCurvePoint",
    "PowerLawFit",
    "ResultTable",
    "SeedSpec",
    "TrialResult",
    "agent_preset",
    "amdahl_limit",
    "amdahl_speedup",
    "asymptotic_coefficient",
    "checkpoint_count",
    "checkpoint_interval",
    "divergence_sweep",
    "e2e_reliability",
    "effective_novelty",
    "expected_effort",
    "experiment_defaults",
    "integer_team_size",
    "load_config",
    "loglog_fit",
    "mean_std",
    "min_wall_clock",
    "mutual_info_effort",
    "novelty_dominance",
    "optimal_team_size",
    "org_preset",
    "org_sweep",
    "read_report_json",
    "render",
    "run_all",
    "run_experiment",
    "run_trial_batch",
    "run_trials",
    "simulate_divergence",
    "simulate_task",
    "total_effort",
    "trajectory_checkpoints",
    "uncaught_error_rate",
    "validate",
    "validate_org",
    "wall_clock",
    "write_report",
    "write_summary",
]
