"""Shared value types: agent/org configurations, effort breakdowns, results.

All types are immutable value objects (frozen dataclasses) holding 64-bit
floats, safe to share across threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class AgentConfig:
    """Per-decision simulation parameters for a human-agent pair.

    nu is the fraction of decisions the agent's prior cannot resolve
    ("novel"); the remaining fraction is routine. Costs are dimensionless
    effort units per decision (verify, spec, decompose) or per uncaught
    error (correct).
    """

    nu: float
    p_routine: float
    p_novel: float
    self_correction: float = 0.0
    verify_cost: float = 0.05
    correct_cost: float = 2.0
    spec_cost: float = 1.0
    decompose_cost: float = 0.0


@dataclass(frozen=True)
class EffortBreakdown:
    """Human effort split into its four components."""

    spec: float = 0.0
    verify: float = 0.0
    correct: float = 0.0
    decompose: float = 0.0

    @property
    def total(self) -> float:
        return self.spec + self.verify + self.correct + self.decompose


@dataclass(frozen=True)
class TrialResult:
    """Outcome of one simulated task execution."""

    effort: EffortBreakdown
    n_novel: int
    n_errors: int
    task_size: int
    seed: int


@dataclass(frozen=True)
class AggregateStats:
    """Across-trial summary for one (config, task size) pair."""

    mean_effort: EffortBreakdown
    std_total: float
    n_trials: int
    effort_per_unit: float


@dataclass(frozen=True)
class OrgConfig:
    """Organizational scaling parameters.

    c is the irreducible per-unit work coefficient, beta the pairwise
    coordination cost, gamma the integration cost per unit of agent
    throughput, and tau the agent throughput amplifier.
    """

    c: float
    beta: float
    gamma: float
    tau: float


@dataclass(frozen=True)
class ResultTable:
    """Uniform tabular output of an experiment.

    Rows are tuples of numbers or strings, one entry per column.
    Metadata records the seed, parameters, trial count and timestamp.
    """

    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[Any, ...], ...]
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        width = len(self.columns)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(
                    f"row {i} of table {self.name!r} has {len(row)} entries, "
                    f"expected {width}"
                )

    def column(self, name: str) -> list[Any]:
        """Values of one column, in row order."""
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


_UNIT_FIELDS = ("nu", "p_routine", "p_novel", "self_correction")
_COST_FIELDS = ("verify_cost", "correct_cost", "spec_cost", "decompose_cost")


def validate(config: AgentConfig) -> AgentConfig:
    """Check all AgentConfig invariants; return the config unchanged.

    Raises ValueError naming the offending field on any range violation.
    """
    for name in _UNIT_FIELDS:
        value = getattr(config, name)
        if not (isinstance(value, (int, float)) and math.isfinite(value)):
            raise ValueError(f"{name} must be a finite number: got {value!r}")
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{name} out of range [0, 1]: got {value}")
    for name in _COST_FIELDS:
        value = getattr(config, name)
        if not (isinstance(value, (int, float)) and math.isfinite(value)):
            raise ValueError(f"{name} must be a finite number: got {value!r}")
        if value < 0.0:
            raise ValueError(f"{name} must be nonnegative: got {value}")
    return config


def validate_org(config: OrgConfig) -> OrgConfig:
    """Check OrgConfig invariants; return the config unchanged."""
    for name in ("c", "beta", "gamma", "tau"):
        value = getattr(config, name)
        if not (isinstance(value, (int, float)) and math.isfinite(value)):
            raise ValueError(f"{name} must be a finite number: got {value!r}")
        if value < 0.0:
            raise ValueError(f"{name} must be nonnegative: got {value}")
    if config.tau <= 0.0:
        raise ValueError(f"tau must be positive: got {config.tau}")
    return config


# Named agent configurations used by the scaling experiment. All share a
# correction cost of 2.0 and a specification cost of 1.0.
AGENT_PRESETS: dict[str, AgentConfig] = {
    "low_novelty": AgentConfig(
        nu=0.1, p_routine=0.95, p_novel=0.3, self_correction=0.0,
        verify_cost=0.05, correct_cost=2.0, spec_cost=1.0,
    ),
    "medium_novelty": AgentConfig(
        nu=0.3, p_routine=0.95, p_novel=0.3, self_correction=0.0,
        verify_cost=0.05, correct_cost=2.0, spec_cost=1.0,
    ),
    "high_novelty": AgentConfig(
        nu=0.8, p_routine=0.95, p_novel=0.3, self_correction=0.0,
        verify_cost=0.05, correct_cost=2.0, spec_cost=1.0,
    ),
    "high_capability": AgentConfig(
        nu=0.3, p_routine=0.99, p_novel=0.7, self_correction=0.8,
        verify_cost=0.02, correct_cost=2.0, spec_cost=1.0,
    ),
}

# Named organizational configurations, ordered by increasing agent
# capability. Iteration order is the canonical report order.
ORG_PRESETS: dict[str, OrgConfig] = {
    "no_ai": OrgConfig(c=1.0, beta=0.5, gamma=0.0, tau=1.0),
    "basic_ai": OrgConfig(c=0.5, beta=0.5, gamma=0.1, tau=2.0),
    "strong_ai": OrgConfig(c=0.2, beta=0.5, gamma=0.1, tau=5.0),
    "frontier_ai": OrgConfig(c=0.1, beta=0.5, gamma=0.1, tau=10.0),
}


def agent_preset(name: str) -> AgentConfig:
    """Look up an agent preset by name."""
    try:
        return AGENT_PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown agent preset {name!r}; valid: {', '.join(AGENT_PRESETS)}"
        ) from None


def org_preset(name: str) -> OrgConfig:
    """Look up an organizational preset by name."""
    try:
        return ORG_PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown org preset {name!r}; valid: {', '.join(ORG_PRESETS)}"
        ) from None
