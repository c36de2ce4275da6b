from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from noveltysim import (
    SeedSpec,
    divergence_sweep,
    loglog_fit,
    simulate_divergence,
    trajectory_checkpoints,
)

GRID = [10, 25, 50, 100, 200, 500, 1000, 2000, 5000]


def test_zero_noise_never_deviates() -> None:
    for e in (1, 10, 100, 5000):
        assert simulate_divergence(0.0, e, seed=123) == 0.0


def test_deviation_scales_linearly_in_sigma_under_shared_seed() -> None:
    for seed in (1, 42, 987):
        small = simulate_divergence(0.1, 100, seed)
        large = simulate_divergence(0.2, 100, seed)
        assert large == pytest.approx(2.0 * small, rel=1e-12)


def test_mean_deviation_near_oracle_value() -> None:
    # Brute-force oracle (1e5 trials, frozen): mean max |cumsum| at
    # sigma=0.1, E=100 is 1.198 +- 0.002.
    seeds = SeedSpec(123, "trajectory")
    devs = [simulate_divergence(0.1, 100, seeds.substream_seed(100, t)) for t in range(100)]
    mean = sum(devs) / len(devs)
    assert mean == pytest.approx(1.198, rel=0.15)
    assert 1.0625 <= mean <= 1.4375  # 1.25 +- 15%


def test_sweep_shapes_and_determinism() -> None:
    seeds = SeedSpec(123, "trajectory")
    single = divergence_sweep(0.1, [200], 1, seeds)
    assert len(single) == 1
    assert single[0].n_trials == 1
    assert single[0].std_max_deviation == 0.0

    first = divergence_sweep(0.1, GRID[:4], 25, seeds)
    second = divergence_sweep(0.1, GRID[:4], 25, seeds)
    assert first == second


def test_sweep_exponent_is_near_one_half() -> None:
    seeds = SeedSpec(123, "trajectory")
    sweep = divergence_sweep(0.1, GRID, 100, seeds)
    fit = loglog_fit([(r.task_size, r.mean_max_deviation) for r in sweep])
    assert 0.4 <= fit.exponent <= 0.6


def test_sweep_quadrupling_task_size_doubles_deviation() -> None:
    seeds = SeedSpec(123, "trajectory")
    sweep = divergence_sweep(0.1, [100, 400], 100, seeds)
    ratio = sweep[1].mean_max_deviation / sweep[0].mean_max_deviation
    assert ratio == pytest.approx(2.0, rel=0.20)


def test_sweep_mean_deviation_nondecreasing_in_task_size() -> None:
    seeds = SeedSpec(123, "trajectory")
    sweep = divergence_sweep(0.1, GRID, 100, seeds)
    for prev, cur in zip(sweep, sweep[1:]):
        slack = prev.std_max_deviation / (prev.n_trials ** 0.5)
        assert cur.mean_max_deviation >= prev.mean_max_deviation - slack


def test_simulate_divergence_input_checks() -> None:
    with pytest.raises(ValueError, match="task_size"):
        simulate_divergence(0.1, 0, seed=1)
    with pytest.raises(ValueError, match="sigma"):
        simulate_divergence(-0.1, 10, seed=1)
    with pytest.raises(ValueError, match="n_trials"):
        divergence_sweep(0.1, [10], 0, SeedSpec(1, "x"))


class TestTrajectoryCheckpoints:
    def test_unit_tolerance_reference(self) -> None:
        # interval = (1 / 0.1)^2 = 100 despite float representation
        assert trajectory_checkpoints(1.0, 0.1, 1000) == 10

    def test_tolerance_equal_to_noise_checkpoints_every_step(self) -> None:
        assert trajectory_checkpoints(0.3, 0.3, 100) == 100

    def test_linear_in_task_size(self) -> None:
        assert trajectory_checkpoints(1.0, 0.1, 2000) == 20
        assert trajectory_checkpoints(1.0, 0.1, 2000) == 2 * trajectory_checkpoints(
            1.0, 0.1, 1000
        )

    def test_domain_errors(self) -> None:
        with pytest.raises(ValueError, match="delta"):
            trajectory_checkpoints(0.0, 0.1, 100)
        with pytest.raises(ValueError, match="sigma"):
            trajectory_checkpoints(1.0, -1.0, 100)

    @given(
        delta=st.floats(min_value=0.05, max_value=10.0),
        sigma=st.floats(min_value=0.05, max_value=10.0),
        e=st.integers(min_value=0, max_value=10_000),
    )
    def test_monotone_in_each_argument(self, delta: float, sigma: float, e: int) -> None:
        count = trajectory_checkpoints(delta, sigma, e)
        assert trajectory_checkpoints(delta, sigma, e + 100) >= count
        assert trajectory_checkpoints(delta, sigma * 1.5, e) >= count
        assert trajectory_checkpoints(delta * 1.5, sigma, e) <= count
