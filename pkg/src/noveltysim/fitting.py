"""Log-log least squares exponent estimation and small aggregation helpers."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class PowerLawFit:
    """OLS fit of log(effort) on log(task size).

    exponent is the slope (the scaling exponent), log_coefficient the
    intercept in natural-log space.
    """

    exponent: float
    log_coefficient: float
    r_squared: float

    @property
    def coefficient(self) -> float:
        return math.exp(self.log_coefficient)


def loglog_fit(points: Iterable[tuple[float, float]]) -> PowerLawFit:
    """Fit effort ~ coefficient * size**exponent by OLS in log-log space.

    Requires at least two points with strictly positive coordinates and
    at least two distinct sizes. Natural logs internally; the exponent is
    base-invariant.
    """
    pts = list(points)
    if len(pts) < 2:
        raise ValueError(f"need at least 2 points to fit, got {len(pts)}")
    for size, effort in pts:
        if not size > 0 or not effort > 0:
            raise ValueError(
                f"log-log fit requires strictly positive data: got ({size}, {effort})"
            )
    # canonical summation order: the fit depends only on the point multiset
    pts.sort()
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    x_var = float(np.sum((x - x.mean()) ** 2))
    if x_var == 0.0:
        raise ValueError("degenerate design: all task sizes equal")
    slope = float(np.sum((x - x.mean()) * (y - y.mean()))) / x_var
    intercept = float(y.mean()) - slope * float(x.mean())
    residuals = y - (slope * x + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return PowerLawFit(
        exponent=slope,
        log_coefficient=intercept,
        r_squared=min(1.0, max(0.0, r2)),
    )


def mean_std(values: Sequence[float]) -> tuple[float, float]:
    """Arithmetic mean and sample standard deviation (n-1 denominator).

    A single value has zero deviation; an empty input is an error.
    """
    if len(values) == 0:
        raise ValueError("mean_std requires at least one value")
    arr = np.asarray(values, dtype=float)
    if arr.size == 1:
        return float(arr[0]), 0.0
    return float(arr.mean()), float(arr.std(ddof=1))
