"""Closed-form oracles for the collaboration-effort model.

Every function here is an exact expectation or algebraic identity; the
Monte Carlo engine is verified against these. All are pure and
thread-safe.
"""
from __future__ import annotations

import math

from .model import AgentConfig, EffortBreakdown, validate


def _check_unit(name: str, value: float) -> float:
    if not (isinstance(value, (int, float)) and math.isfinite(value)):
        raise ValueError(f"{name} must be a finite number: got {value!r}")
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} out of range [0, 1]: got {value}")
    return float(value)


def _check_count(name: str, value: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer count: got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative: got {value}")
    return value


def _floor_guarded(x: float) -> int:
    # floor with a tiny relative tolerance so that values like
    # 1.0 / (0.1 * 0.1) == 99.999..., whose exact mathematical value is an
    # integer, floor to that integer rather than one below it.
    return math.floor(x + 1e-9 * max(1.0, abs(x)))


def uncaught_error_rate(config: AgentConfig) -> float:
    """Expected fraction of decisions that end as uncaught errors."""
    fail = config.nu * (1.0 - config.p_novel) + (1.0 - config.nu) * (1.0 - config.p_routine)
    return (1.0 - config.self_correction) * fail


def expected_effort(config: AgentConfig, task_size: int) -> EffortBreakdown:
    """Exact expected effort breakdown for a task of the given size.

    Per decision: novel decisions (fraction nu) incur the specification
    cost; every decision incurs the verification cost; uncaught errors
    incur the correction cost; the decomposition cost applies uniformly.
    """
    validate(config)
    e = _check_count("task_size", task_size)
    return EffortBreakdown(
        spec=config.nu * config.spec_cost * e,
        verify=config.verify_cost * e,
        correct=config.correct_cost * uncaught_error_rate(config) * e,
        decompose=config.decompose_cost * e,
    )


def asymptotic_coefficient(config: AgentConfig) -> float:
    """Limit of effort per decision as the task grows.

    Zero exactly when every effort source vanishes: no specification
    (nu * spec_cost = 0), no verification, no decomposition, and no
    expected correction cost. Any single positive source makes effort
    linear in task size with this coefficient.
    """
    validate(config)
    return (
        config.nu * config.spec_cost
        + config.verify_cost
        + config.correct_cost * uncaught_error_rate(config)
        + config.decompose_cost
    )


def mutual_info_effort(
    shared_prior: float,
    task_size: int,
    spec_cost: float = 1.0,
    verify_cost: float = 0.05,
) -> float:
    """Expected total effort when the agent infers intent with probability
    shared_prior per decision; the human supplies the rest at spec_cost and
    always pays verify_cost."""
    m = _check_unit("shared_prior", shared_prior)
    e = _check_count("task_size", task_size)
    if spec_cost < 0 or verify_cost < 0:
        raise ValueError("costs must be nonnegative")
    return (1.0 - m) * spec_cost * e + verify_cost * e


def novelty_dominance(nu: float, task_size: int) -> float:
    """Mixture-model effort: linear novel term, logarithmic routine term,
    irreducible verification.

    effort = nu * E + (1 - nu) * 2 * log2(E) + 0.05 * E
    """
    _check_unit("nu", nu)
    e = _check_count("task_size", task_size)
    if e < 2:
        raise ValueError(f"task_size must be at least 2: got {e}")
    return nu * e + (1.0 - nu) * 2.0 * math.log2(e) + 0.05 * e


def e2e_reliability(p: float, task_size: int) -> float:
    """End-to-end success probability of a task of independent steps."""
    _check_unit("p", p)
    e = _check_count("task_size", task_size)
    return p ** e


def checkpoint_interval(p: float, target: float) -> int:
    """Steps between human checkpoints keeping segment reliability >= target.

    floor(log(target) / log(p)), clamped to at least 1: a step-granular
    human cannot checkpoint more often than every step.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(
            f"perfect/zero reliability has no finite interval: p={p}"
        )
    if not 0.0 < target < 1.0:
        raise ValueError(
            f"perfect/zero reliability has no finite interval: target={target}"
        )
    return max(1, _floor_guarded(math.log(target) / math.log(p)))


def checkpoint_count(p: float, target: float, task_size: int) -> int:
    """Number of checkpoints over a whole task (ceiling of E / interval)."""
    e = _check_count("task_size", task_size)
    k = checkpoint_interval(p, target)
    return -(-e // k)


def effective_novelty(nu: float, alpha: float, v: float) -> float:
    """Novelty reduced by self-correction: nu * (1 - alpha * v).

    alpha is the agent's self-correction rate, v the degree to which
    output correctness is machine-checkable.
    """
    n = _check_unit("nu", nu)
    a = _check_unit("alpha", alpha)
    w = _check_unit("v", v)
    return n * (1.0 - a * w)


def verifiability_effort_rate(nu: float, v: float) -> float:
    """Effort per decision over the novelty/verifiability plane.

    nu * (1 - 0.8 v) + 0.05 (1 - v) + 0.02: self-correction at rate 0.8
    when automated verification is available, a human verification cost
    that vanishes with verifiability, and a base coordination cost.
    """
    n = _check_unit("nu", nu)
    w = _check_unit("v", v)
    return n * (1.0 - 0.8 * w) + 0.05 * (1.0 - w) + 0.02


def amdahl_speedup(parallel_fraction: float, n_workers: int) -> float:
    """Speedup from n workers given the parallelizable fraction of work."""
    p = _check_unit("parallel_fraction", parallel_fraction)
    n = _check_count("n_workers", n_workers)
    if n < 1:
        raise ValueError(f"n_workers must be at least 1: got {n}")
    return 1.0 / ((1.0 - p) + p / n)


def amdahl_limit(parallel_fraction: float) -> float:
    """Upper bound on speedup as the worker count grows without bound."""
    p = _check_unit("parallel_fraction", parallel_fraction)
    if p == 1.0:
        raise ValueError("fully parallel work has no finite speedup limit")
    return 1.0 / (1.0 - p)
