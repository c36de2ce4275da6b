"""Acceptance gate: every release criterion at its stated tolerance.

Each test prints one `ACCEPTANCE <criterion>: PASS|FAIL` line. Run with
`pytest tests/test_acceptance.py -s` to see them inline.
"""
from __future__ import annotations

import math
import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from noveltysim import (
    AGENT_PRESETS,
    ORG_PRESETS,
    AgentConfig,
    ExperimentSpec,
    SeedSpec,
    asymptotic_coefficient,
    checkpoint_count,
    checkpoint_interval,
    e2e_reliability,
    expected_effort,
    optimal_team_size,
    render,
    run_all,
    run_experiment,
    run_trials,
    simulate_divergence,
    wall_clock,
)
from noveltysim.cli import main


@contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE {name}: FAIL")
        raise
    print(f"\nACCEPTANCE {name}: PASS")


@pytest.fixture(scope="module")
def scaling_run() -> tuple[object, float]:
    start = time.perf_counter()
    table = run_experiment(ExperimentSpec("scaling"))
    return table, time.perf_counter() - start


def test_scaling_exponents(scaling_run) -> None:
    """Fitted scaling exponents land in [0.98, 1.02] for all presets and
    the experiment finishes in well under a minute."""
    with criterion("scaling exponents"):
        table, elapsed = scaling_run
        exponents = {}
        for row in table.rows:
            exponents.setdefault(row[0], row[table.columns.index("exponent")])
        assert set(exponents) == set(AGENT_PRESETS)
        for name, alpha in exponents.items():
            assert 0.98 <= alpha <= 1.02, f"{name}: alpha={alpha}"
        assert elapsed < 60.0, f"scaling experiment took {elapsed:.1f}s"


def test_scaling_coefficients(scaling_run) -> None:
    """Mean effort per decision at the largest task size: within 3% of the
    reference coefficients and within 4 standard errors of the closed form."""
    with criterion("scaling coefficients"):
        table, _ = scaling_run
        reference = {
            "low_novelty": (0.377, 0.38),
            "medium_novelty": (0.841, 0.84),
            "high_novelty": (1.990, 1.99),
            "high_capability": (0.360, 0.3588),
        }
        cols = table.columns
        n_trials = table.metadata["n_trials"]
        for row in table.rows:
            if row[cols.index("task_size")] != 5000:
                continue
            name = row[cols.index("config")]
            per_unit = row[cols.index("effort_per_unit")]
            std = row[cols.index("std_total")]
            observed_target, oracle_value = reference[name]
            assert abs(per_unit - observed_target) <= 0.03 * observed_target, name
            se_per_unit = std / math.sqrt(n_trials) / 5000
            assert abs(per_unit - oracle_value) <= 4 * se_per_unit, (
                f"{name}: {per_unit} vs oracle {oracle_value} "
                f"(4se={4 * se_per_unit:.5f})"
            )


def test_mutual_information_table() -> None:
    """Effort per decision at the largest task size, per inference level."""
    with criterion("mutual information table"):
        table = run_experiment(ExperimentSpec("mutual_information"))
        targets = {0.0: 1.050, 0.3: 0.751, 0.6: 0.450, 0.9: 0.151, 0.99: 0.060}
        cols = table.columns
        checked = 0
        for row in table.rows:
            if row[cols.index("task_size")] != 5000:
                continue
            m = row[cols.index("mutual_info")]
            per_unit = row[cols.index("effort_per_unit")]
            assert abs(per_unit - targets[m]) <= 0.01, f"M={m}: {per_unit}"
            checked += 1
        assert checked == 5


def test_org_scaling_table() -> None:
    """Optimal team size and minimum wall-clock, exact at one decimal."""
    with criterion("org scaling optima"):
        table = run_experiment(ExperimentSpec("org_scaling"))
        cols = table.columns
        seen: dict[str, tuple[float, float]] = {}
        for row in table.rows:
            seen.setdefault(
                row[cols.index("config")],
                (row[cols.index("optimal_team_size")], row[cols.index("min_wall_clock")]),
            )
        expected = {
            "no_ai": (100.0, 100.0),
            "basic_ai": (59.8, 83.7),
            "strong_ai": (31.6, 63.2),
            "frontier_ai": (18.3, 54.8),
        }
        for name, (n_star, t_star) in seen.items():
            assert (round(n_star, 1), round(t_star, 1)) == expected[name], name


def test_march_of_nines() -> None:
    with criterion("march of nines"):
        assert abs(e2e_reliability(0.99, 100) - 0.366) <= 0.0005
        assert 0.0055 <= e2e_reliability(0.95, 100) <= 0.0065
        assert checkpoint_interval(0.95, 0.8) == 4
        counts = [checkpoint_count(0.95, 0.8, e) for e in (50, 100, 200, 400)]
        for single, double in zip(counts, counts[1:]):
            assert 2 * single - 1 <= double <= 2 * single + 1, counts


def test_trajectory_divergence() -> None:
    with criterion("trajectory divergence"):
        table = run_experiment(ExperimentSpec("trajectory"))
        exponent = table.rows[0][table.columns.index("exponent")]
        assert 0.4 <= exponent <= 0.6, f"divergence exponent {exponent}"
        for e in (1, 100, 5000):
            assert simulate_divergence(0.0, e, seed=123) == 0.0


def test_no_sublinear_regime_predicate() -> None:
    """The per-decision coefficient is zero exactly when every effort
    source vanishes, over 1000 randomly sampled configurations."""
    with criterion("no-sublinear-regime predicate"):
        rng = np.random.default_rng(20260810)
        for _ in range(1000):
            # zero out each source independently half the time so both
            # sides of the iff get heavy coverage
            spec_zero = rng.random() < 0.5
            verify_zero = rng.random() < 0.5
            error_zero = rng.random() < 0.5
            decompose_zero = rng.random() < 0.5

            if spec_zero and rng.random() < 0.5:
                nu, spec_cost = 0.0, float(rng.uniform(0.1, 3.0))
            elif spec_zero:
                nu, spec_cost = float(rng.uniform(0.01, 1.0)), 0.0
            else:
                nu, spec_cost = float(rng.uniform(0.01, 1.0)), float(rng.uniform(0.1, 3.0))
            verify_cost = 0.0 if verify_zero else float(rng.uniform(0.01, 2.0))
            decompose_cost = 0.0 if decompose_zero else float(rng.uniform(0.01, 1.0))
            if error_zero:
                # three routes to a zero expected error cost: free corrections,
                # perfect self-correction, or a never-failing agent
                mode = int(rng.integers(3))
                correct_cost = 0.0 if mode == 0 else float(rng.uniform(0.1, 4.0))
                self_correction = 1.0 if mode == 1 else float(rng.uniform(0.0, 1.0))
                p_routine = 1.0 if mode == 2 else float(rng.uniform(0.0, 1.0))
                p_novel = 1.0 if mode == 2 else float(rng.uniform(0.0, 1.0))
            else:
                correct_cost = float(rng.uniform(0.1, 4.0))
                self_correction = float(rng.uniform(0.0, 0.99))
                p_routine = float(rng.uniform(0.0, 0.99))
                p_novel = float(rng.uniform(0.0, 0.99))

            config = AgentConfig(
                nu=nu, p_routine=p_routine, p_novel=p_novel,
                self_correction=self_correction, verify_cost=verify_cost,
                correct_cost=correct_cost, spec_cost=spec_cost,
                decompose_cost=decompose_cost,
            )
            fail_rate = nu * (1 - p_novel) + (1 - nu) * (1 - p_routine)
            sources = (
                nu * spec_cost,
                verify_cost,
                correct_cost * (1 - self_correction) * fail_rate,
                decompose_cost,
            )
            coefficient = asymptotic_coefficient(config)
            if all(s == 0.0 for s in sources):
                assert coefficient == 0.0, (config, sources)
            else:
                assert coefficient > 0.0, (config, sources)


def test_monte_carlo_matches_oracle_on_random_configs() -> None:
    """200 random configurations x two task sizes: trial means within four
    standard errors of the closed form, allowing a 1% failure rate."""
    with criterion("oracle equivalence"):
        rng = np.random.default_rng(777)
        n_trials = 50
        cases = 0
        failures = 0
        for i in range(200):
            config = AgentConfig(
                nu=float(rng.uniform(0, 1)),
                p_routine=float(rng.uniform(0, 1)),
                p_novel=float(rng.uniform(0, 1)),
                self_correction=float(rng.uniform(0, 1)),
                verify_cost=float(rng.uniform(0, 2)),
                correct_cost=float(rng.uniform(0, 4)),
                spec_cost=float(rng.uniform(0, 3)),
                decompose_cost=0.0,  # the engine charges no decomposition
            )
            for e in (100, 1000):
                seeds = SeedSpec(42, f"acceptance:oracle:{i}")
                stats = run_trials(config, e, n_trials, seeds)
                oracle = expected_effort(config, e).total
                se = stats.std_total / math.sqrt(n_trials)
                diff = abs(stats.mean_effort.total - oracle)
                cases += 1
                if diff > (4 * se if se > 0 else 1e-9):
                    failures += 1
        assert failures <= math.ceil(0.01 * cases), f"{failures}/{cases} outside 4 SE"


def test_run_all_is_deterministic(tmp_path: Path, capsys) -> None:
    """Identical seeds give byte-identical CSV bodies, and concurrent trial
    execution changes nothing."""
    with criterion("determinism"):
        dir_a = tmp_path / "a"
        dir_b = tmp_path / "b"
        assert main(["run-all", "--out-dir", str(dir_a)]) == 0
        assert main(["run-all", "--out-dir", str(dir_b)]) == 0
        csvs = sorted(p.name for p in dir_a.glob("*.csv"))
        assert len(csvs) == 7
        for name in csvs:
            assert (dir_a / name).read_bytes() == (dir_b / name).read_bytes(), name

        serial = run_all(parallel=False)
        threaded = run_all(parallel=True)
        for name in serial:
            assert render(serial[name], "csv") == render(threaded[name], "csv"), name


def test_convexity_and_integer_bracketing() -> None:
    with criterion("convexity and bracketing"):
        for name, org in ORG_PRESETS.items():
            n_star = optimal_team_size(org, 5000)
            best = min(range(1, 201), key=lambda n: wall_clock(org, 5000, n))
            assert best in (math.floor(n_star), math.ceil(n_star)), name
            grid = range(1, 201)
            for a in grid:
                for b in range(a, 201, 9):
                    mid = (a + b) / 2
                    assert (
                        wall_clock(org, 5000, mid)
                        <= (wall_clock(org, 5000, a) + wall_clock(org, 5000, b)) / 2
                        + 1e-9
                    ), (name, a, b)
