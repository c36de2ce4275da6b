"""Analytical organizational scaling model: wall-clock time, total effort,
optimal team size. Team size is continuous; integer recommendations are
derived by bracketing."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .model import OrgConfig, validate_org


@dataclass(frozen=True)
class OrgCurvePoint:
    """One team size on an organizational scaling curve."""

    n: float
    wall_clock: float
    total_effort: float
    work_efficiency: float


def _coordination_rate(org: OrgConfig) -> float:
    return org.beta + org.gamma * org.tau


def wall_clock(org: OrgConfig, task_size: float, n: float) -> float:
    """Elapsed time for n humans: parallel work plus per-head coordination
    and throughput-amplified integration.

    T(n) = c * E / n + beta * n + gamma * n * tau
    """
    validate_org(org)
    if not n > 0:
        raise ValueError(f"team size must be positive: got {n}")
    if not task_size > 0:
        raise ValueError(f"task_size must be positive: got {task_size}")
    return org.c * task_size / n + org.beta * n + org.gamma * n * org.tau


def total_effort(org: OrgConfig, task_size: float, n: float) -> float:
    """Summed human effort: irreducible work plus pairwise overhead.

    H(n) = c * E + (beta + gamma * tau) * n * (n - 1) / 2
    """
    validate_org(org)
    if n < 1:
        raise ValueError(f"team size must be at least 1: got {n}")
    if not task_size > 0:
        raise ValueError(f"task_size must be positive: got {task_size}")
    return org.c * task_size + _coordination_rate(org) * n * (n - 1.0) / 2.0


def optimal_team_size(org: OrgConfig, task_size: float) -> float:
    """Continuous minimizer of wall_clock: sqrt(c * E / (beta + gamma * tau))."""
    validate_org(org)
    coord = _coordination_rate(org)
    if coord <= 0:
        raise ValueError("unbounded team size: no coordination cost")
    work = org.c * task_size
    if work <= 0:
        raise ValueError("no work to parallelize: c * task_size must be positive")
    return math.sqrt(work / coord)


def min_wall_clock(org: OrgConfig, task_size: float) -> float:
    """Wall-clock time at the optimal team size: 2 * sqrt(c * E * (beta + gamma * tau))."""
    validate_org(org)
    coord = _coordination_rate(org)
    if coord <= 0:
        raise ValueError("unbounded team size: no coordination cost")
    work = org.c * task_size
    if work <= 0:
        raise ValueError("no work to parallelize: c * task_size must be positive")
    return 2.0 * math.sqrt(work * coord)


def integer_team_size(org: OrgConfig, task_size: float) -> tuple[int, float]:
    """Best whole-number team size and its wall-clock time.

    The integer minimizer of a convex T(n) is the floor or ceiling of the
    continuous optimum (clamped to at least one person).
    """
    n_star = optimal_team_size(org, task_size)
    lo = max(1, math.floor(n_star))
    hi = max(1, math.ceil(n_star))
    t_lo = wall_clock(org, task_size, lo)
    t_hi = wall_clock(org, task_size, hi)
    return (lo, t_lo) if t_lo <= t_hi else (hi, t_hi)


def org_sweep(
    org: OrgConfig, task_size: float, n_grid: list[float]
) -> list[OrgCurvePoint]:
    """Curve data over a grid of team sizes.

    Work efficiency is the useful-work share of total effort,
    c * E / H(n), which is exactly 1 for a single person.
    """
    points = []
    for n in n_grid:
        if n < 1:
            raise ValueError(f"team sizes in the sweep must be at least 1: got {n}")
        effort = total_effort(org, task_size, n)
        points.append(
            OrgCurvePoint(
                n=float(n),
                wall_clock=wall_clock(org, task_size, n),
                total_effort=effort,
                work_efficiency=org.c * task_size / effort,
            )
        )
    return points
