"""Random-walk model of agent trajectory divergence and checkpointing."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import SeedSpec
from .fitting import mean_std


@dataclass(frozen=True)
class DivergenceResult:
    """Across-trial maximum-deviation summary for one task size."""

    task_size: int
    mean_max_deviation: float
    std_max_deviation: float
    n_trials: int
    sigma: float


def simulate_divergence(sigma: float, task_size: int, seed: int) -> float:
    """Maximum absolute cumulative deviation of one noisy trajectory.

    The trajectory accumulates independent zero-mean Gaussian steps of
    standard deviation sigma; returns max over t of |sum of the first t
    steps|. Values scale exactly linearly in sigma for a shared seed.
    """
    if sigma < 0:
        raise ValueError(f"sigma must be nonnegative: got {sigma}")
    if task_size < 1:
        raise ValueError(f"task_size must be at least 1: got {task_size}")
    rng = np.random.default_rng(seed)
    steps = rng.standard_normal(task_size) * sigma
    return float(np.max(np.abs(np.cumsum(steps))))


def divergence_sweep(
    sigma: float,
    task_sizes: list[int],
    n_trials: int,
    seeds: SeedSpec,
) -> list[DivergenceResult]:
    """One DivergenceResult per task size, each over n_trials substreams."""
    if n_trials < 1:
        raise ValueError(f"n_trials must be at least 1: got {n_trials}")
    results = []
    for task_size in task_sizes:
        devs = [
            simulate_divergence(sigma, task_size, seeds.substream_seed(task_size, t))
            for t in range(n_trials)
        ]
        mean, std = mean_std(devs)
        results.append(
            DivergenceResult(
                task_size=task_size,
                mean_max_deviation=mean,
                std_max_deviation=std,
                n_trials=n_trials,
                sigma=sigma,
            )
        )
    return results


def trajectory_checkpoints(delta: float, sigma: float, task_size: int) -> int:
    """Checkpoints needed to keep deviation within tolerance delta.

    The checkpoint interval is delta**2 / sigma**2 steps (floored, at
    least 1); the count is the ceiling of task_size over that interval.
    """
    if not delta > 0:
        raise ValueError(f"delta must be positive: got {delta}")
    if not sigma > 0:
        raise ValueError(f"sigma must be positive: got {sigma}")
    if task_size < 0:
        raise ValueError(f"task_size must be nonnegative: got {task_size}")
    ratio = (delta / sigma) ** 2
    # Guard the floor against representation error when the exact ratio is
    # an integer (e.g. delta=1, sigma=0.1).
    interval = max(1, math.floor(ratio + 1e-9 * max(1.0, ratio)))
    return -(-task_size // interval)
