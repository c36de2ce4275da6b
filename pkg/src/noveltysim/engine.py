"""Per-decision Monte Carlo simulation with deterministic substreams.

Each trial draws from its own PRNG substream, derived from a master seed,
an experiment label, the task size and the trial index. Results are
therefore identical whether trials run serially or in parallel, and
independent of execution order.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .fitting import mean_std
from .model import AgentConfig, AggregateStats, EffortBreakdown, TrialResult, validate

_MASK64 = (1 << 64) - 1
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a64(text: str) -> int:
    """FNV-1a 64-bit hash of a string (UTF-8 bytes)."""
    h = _FNV_OFFSET
    for byte in text.encode("utf-8"):
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK64
    return h


def splitmix64(value: int) -> int:
    """The splitmix64 finalizer: an invertible 64-bit bit mixer."""
    z = value & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class SeedSpec:
    """Master seed plus experiment label; derives per-trial substreams."""

    master_seed: int
    experiment_id: str

    def substream_seed(self, task_size: int, trial_index: int) -> int:
        """Seed for the (task_size, trial_index) substream.

        splitmix64 finalizer over the xor-fold of the master seed, the
        hashed experiment id, the task size and the trial index; identical
        inputs yield identical substreams regardless of execution order.
        """
        folded = (
            (self.master_seed & _MASK64)
            ^ fnv1a64(self.experiment_id)
            ^ (task_size & _MASK64)
            ^ (trial_index & _MASK64)
        )
        return splitmix64(folded)

    def substream(self, task_size: int, trial_index: int) -> np.random.Generator:
        return np.random.default_rng(self.substream_seed(task_size, trial_index))


def simulate_task(config: AgentConfig, task_size: int, seed: int) -> TrialResult:
    """Simulate one task of task_size independent decisions.

    Per decision, in draw order: (1) classify novel vs routine; (2) if
    novel, charge the specification cost; (3) the agent attempts the
    decision, succeeding with the class-specific probability; (4) on
    failure only, draw whether the error is caught internally; uncaught
    errors accumulate. Afterwards, verification is charged per decision
    and correction per uncaught error. Draws are consumed only when their
    branch is reached, so the substream position is well-defined.
    """
    validate(config)
    if task_size < 0:
        raise ValueError(f"task_size must be nonnegative: got {task_size}")

    nu = config.nu
    p_routine = config.p_routine
    p_novel = config.p_novel
    r = config.self_correction

    n_novel = 0
    n_errors = 0
    if task_size > 0:
        rng = np.random.default_rng(seed)
        # At most 3 draws per decision; the buffer is read as the stream,
        # advancing only for draws the procedure actually consumes.
        draws = rng.random(3 * task_size).tolist()
        i = 0
        for _ in range(task_size):
            novel = draws[i] < nu
            i += 1
            if novel:
                n_novel += 1
                ok = draws[i] < p_novel
            else:
                ok = draws[i] < p_routine
            i += 1
            if not ok:
                caught = draws[i] < r
                i += 1
                if not caught:
                    n_errors += 1

    effort = EffortBreakdown(
        spec=config.spec_cost * n_novel,
        verify=config.verify_cost * task_size,
        correct=config.correct_cost * n_errors,
        decompose=0.0,
    )
    return TrialResult(
        effort=effort,
        n_novel=n_novel,
        n_errors=n_errors,
        task_size=task_size,
        seed=seed,
    )


def run_trials(
    config: AgentConfig,
    task_size: int,
    n_trials: int,
    seeds: SeedSpec,
    parallel: bool = False,
) -> AggregateStats:
    """Run independent trials and aggregate.

    Trials use disjoint substreams indexed by trial number, so the result
    is bit-identical whether they execute serially or concurrently.
    """
    if n_trials < 1:
        raise ValueError(f"n_trials must be at least 1: got {n_trials}")
    trials = run_trial_batch(config, task_size, n_trials, seeds, parallel=parallel)
    return aggregate(trials)


def run_trial_batch(
    config: AgentConfig,
    task_size: int,
    n_trials: int,
    seeds: SeedSpec,
    parallel: bool = False,
) -> list[TrialResult]:
    """The individual trial results behind run_trials, in trial order."""
    substreams = [seeds.substream_seed(task_size, t) for t in range(n_trials)]
    if parallel and n_trials > 1:
        with ThreadPoolExecutor() as pool:
            return list(
                pool.map(lambda s: simulate_task(config, task_size, s), substreams)
            )
    return [simulate_task(config, task_size, s) for s in substreams]


def aggregate(trials: list[TrialResult]) -> AggregateStats:
    """Componentwise mean effort and sample deviation of trial totals."""
    if not trials:
        raise ValueError("aggregate requires at least one trial")
    n = len(trials)
    mean_effort = EffortBreakdown(
        spec=sum(t.effort.spec for t in trials) / n,
        verify=sum(t.effort.verify for t in trials) / n,
        correct=sum(t.effort.correct for t in trials) / n,
        decompose=sum(t.effort.decompose for t in trials) / n,
    )
    _, std_total = mean_std([t.effort.total for t in trials])
    task_size = trials[0].task_size
    per_unit = mean_effort.total / task_size if task_size > 0 else 0.0
    return AggregateStats(
        mean_effort=mean_effort,
        std_total=std_total,
        n_trials=n,
        effort_per_unit=per_unit,
    )
