"""Render the six standard figures from experiment CSV outputs.

The renderer performs no model computation: every data point drawn comes
verbatim from an input CSV cell. Reference slope lines on the log-log
figure are annotations, normalized to anchor at the smallest task size.
"""
from __future__ import annotations

import csv
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


@dataclass
class Table:
    """A parsed CSV: column names plus rows of raw string cells."""

    path: Path
    columns: list[str]
    rows: list[list[str]]

    def floats(self, column: str) -> list[float]:
        idx = self._index(column)
        values = []
        for i, row in enumerate(self.rows, start=2):  # header is line 1
            try:
                values.append(float(row[idx]))
            except ValueError:
                raise ValueError(
                    f"{self.path}: row {i}: column {column!r} is not numeric: "
                    f"{row[idx]!r}"
                ) from None
        return values

    def strings(self, column: str) -> list[str]:
        idx = self._index(column)
        return [row[idx] for row in self.rows]

    def _index(self, column: str) -> int:
        if column not in self.columns:
            raise ValueError(f"{self.path}: missing column {column!r}")
        return self.columns.index(column)


def load_table(path: Path) -> Table:
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            columns = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: row 1: empty file, expected a header") from None
        rows = []
        for i, row in enumerate(reader, start=2):
            if len(row) != len(columns):
                raise ValueError(
                    f"{path}: row {i}: expected {len(columns)} fields, got {len(row)}"
                )
            rows.append(row)
    return Table(path=path, columns=columns, rows=rows)


def _group(keys: list[str], *series: list[float]) -> dict[str, list[tuple]]:
    grouped: dict[str, list[tuple]] = {}
    for key, *values in zip(keys, *series):
        grouped.setdefault(key, []).append(tuple(values))
    return grouped


def render_fig1(table: Table, out: Path) -> dict[str, list[float]]:
    """Scaling curves: total effort and effort per decision vs task size."""
    configs = table.strings("config")
    sizes = table.floats("task_size")
    totals = table.floats("mean_total")
    per_unit = table.floats("effort_per_unit")
    plotted: dict[str, list[float]] = {}

    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4.5), constrained_layout=True)
    for name, points in _group(configs, sizes, totals).items():
        xs, ys = zip(*points)
        left.plot(xs, ys, marker="o", label=name)
        plotted[f"total:{name}"] = list(ys)
    left.set_xlabel("task size")
    left.set_ylabel("mean human effort")
    left.set_title("Effort grows linearly with task size")
    left.legend()

    for name, points in _group(configs, sizes, per_unit).items():
        xs, ys = zip(*points)
        right.plot(xs, ys, marker="o", label=name)
        plotted[f"per_unit:{name}"] = list(ys)
    right.set_xscale("log")
    right.set_xlabel("task size")
    right.set_ylabel("effort per decision")
    right.set_title("Effort per decision converges to a constant")
    right.legend()

    fig.savefig(out)
    plt.close(fig)
    return plotted


def render_fig2(table: Table, out: Path) -> dict[str, list[float]]:
    """Log-log scaling with reference slopes, plus fitted exponents."""
    configs = table.strings("config")
    sizes = table.floats("task_size")
    totals = table.floats("mean_total")
    exponents: dict[str, float] = {}
    if "exponent" in table.columns:
        for name, alpha in zip(configs, table.floats("exponent")):
            exponents.setdefault(name, alpha)
    plotted: dict[str, list[float]] = {}

    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4.5), constrained_layout=True)
    grouped = _group(configs, sizes, totals)
    for name, points in grouped.items():
        xs, ys = zip(*points)
        left.loglog(xs, ys, marker="o", label=name)
        plotted[f"total:{name}"] = list(ys)

    # reference slopes, anchored at the smallest task size
    e0 = min(sizes)
    anchor = sum(ys[0] for ys in (list(zip(*pts))[1] for pts in grouped.values()))
    anchor /= len(grouped)
    ref_sizes = sorted(set(sizes))
    left.loglog(ref_sizes, [anchor * e / e0 for e in ref_sizes], "k--", alpha=0.5,
                label="linear")
    left.loglog(ref_sizes, [anchor * math.sqrt(e / e0) for e in ref_sizes], "k-.",
                alpha=0.5, label="square root")
    left.loglog(
        ref_sizes,
        [anchor * math.log(e) / math.log(e0) for e in ref_sizes],
        "k:", alpha=0.5, label="logarithmic",
    )
    left.set_xlabel("task size")
    left.set_ylabel("mean human effort")
    left.set_title("Log-log scaling")
    left.legend(fontsize=8)

    if exponents:
        names = list(exponents)
        right.bar(names, [exponents[n] for n in names])
        right.axhline(1.0, color="k", linestyle="--", alpha=0.5)
        right.set_ylabel("fitted scaling exponent")
        right.set_title("Exponents cluster at 1")
        right.tick_params(axis="x", rotation=20)
        plotted["exponents"] = [exponents[n] for n in names]

    fig.savefig(out)
    plt.close(fig)
    return plotted


def render_fig3(table: Table, out: Path) -> dict[str, list[float]]:
    """Reliability compounding: end-to-end success and checkpoint counts."""
    ps = table.strings("step_reliability")
    sizes = table.floats("task_size")
    e2e = table.floats("e2e_reliability")
    counts = table.floats("checkpoint_count")
    plotted: dict[str, list[float]] = {}

    fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4.5), constrained_layout=True)
    for p, points in _group(ps, sizes, e2e).items():
        xs, ys = zip(*points)
        left.semilogy(xs, ys, marker="o", label=f"per-step {p}")
        plotted[f"e2e:{p}"] = list(ys)
    left.set_xlabel("task size")
    left.set_ylabel("end-to-end reliability")
    left.set_title("Reliability decays exponentially")
    left.legend()

    for p, points in _group(ps, sizes, counts).items():
        xs, ys = zip(*points)
        right.plot(xs, ys, marker="o", label=f"per-step {p}")
        plotted[f"checkpoints:{p}"] = list(ys)
    right.set_xlabel("task size")
    right.set_ylabel("checkpoints required")
    right.set_title("Checkpoints scale linearly")
    right.legend()

    fig.savefig(out)
    plt.close(fig)
    return plotted


def render_fig4(table: Table, out: Path) -> dict[str, Any]:
    """Heatmap of effort per decision over the novelty/verifiability plane."""
    nus = table.floats("novelty")
    vs = table.floats("verifiability")
    rates = table.floats("effort_per_unit")

    nu_axis = sorted(set(nus))
    v_axis = sorted(set(vs))
    cell = {(nu, v): rate for nu, v, rate in zip(nus, vs, rates)}
    matrix = [[cell[(nu, v)] for v in v_axis] for nu in nu_axis]

    fig, ax = plt.subplots(figsize=(6.5, 5.5), constrained_layout=True)
    image = ax.imshow(
        matrix,
        origin="lower",
        aspect="auto",
        extent=(min(v_axis), max(v_axis), min(nu_axis), max(nu_axis)),
        cmap="viridis",
    )
    fig.colorbar(image, ax=ax, label="effort per decision")
    ax.set_xlabel("verifiability")
    ax.set_ylabel("novelty")
    ax.set_title("Effort across the novelty-verifiability plane")
    fig.savefig(out)
    plt.close(fig)
    return {"nu_axis": nu_axis, "v_axis": v_axis, "matrix": matrix}


def render_fig5(table: Table, out: Path) -> dict[str, list[float]]:
    """Novelty dominance: effort per decision converges to a positive floor."""
    nus = table.strings("novelty")
    sizes = table.floats("task_size")
    per_unit = table.floats("effort_per_unit")
    plotted: dict[str, list[float]] = {}

    fig, ax = plt.subplots(figsize=(7, 5), constrained_layout=True)
    for nu, points in _group(nus, sizes, per_unit).items():
        xs, ys = zip(*points)
        ax.semilogx(xs, ys, label=f"novelty {nu}")
        plotted[f"rate:{nu}"] = list(ys)
    ax.set_xlabel("task size")
    ax.set_ylabel("effort per decision")
    ax.set_title("Any positive novelty dominates at scale")
    ax.legend(fontsize=8)
    fig.savefig(out)
    plt.close(fig)
    return plotted


def render_fig6(table: Table, out: Path) -> dict[str, list[float]]:
    """Organizational U-curves with the optimum marked per configuration."""
    configs = table.strings("config")
    team = table.floats("team_size")
    clock = table.floats("wall_clock")
    n_star = table.floats("optimal_team_size")
    t_star = table.floats("min_wall_clock")
    plotted: dict[str, list[float]] = {}

    fig, ax = plt.subplots(figsize=(7, 5), constrained_layout=True)
    for name, points in _group(configs, team, clock, n_star, t_star).items():
        xs, ys, n_opt, t_opt = zip(*points)
        line, = ax.plot(xs, ys, label=name)
        ax.plot(n_opt[0], t_opt[0], "o", color=line.get_color(), markersize=9)
        plotted[f"curve:{name}"] = list(ys)
        plotted[f"team:{name}"] = list(xs)
        plotted[f"optimum:{name}"] = [n_opt[0], t_opt[0]]
    ax.set_xlabel("team size")
    ax.set_ylabel("wall-clock time")
    ax.set_title("Optimal team size shrinks as agents improve")
    ax.set_yscale("log")
    ax.legend()
    fig.savefig(out)
    plt.close(fig)
    return plotted


@dataclass(frozen=True)
class FigureSpec:
    name: str
    source_csv: str
    builder: Callable[[Table, Path], dict]


FIGURES = (
    FigureSpec("fig1", "scaling.csv", render_fig1),
    FigureSpec("fig2", "scaling.csv", render_fig2),
    FigureSpec("fig3", "march_of_nines.csv", render_fig3),
    FigureSpec("fig4", "verifiability.csv", render_fig4),
    FigureSpec("fig5", "novelty_dominance.csv", render_fig5),
    FigureSpec("fig6", "org_scaling.csv", render_fig6),
)


def render_all(
    in_dir: Path,
    out_dir: Path,
    image_format: str = "png",
    strict: bool = False,
) -> dict[str, Path]:
    """Render every figure whose input CSV exists.

    Missing inputs are skipped with a warning (an error with strict=True);
    malformed inputs always raise, naming the file and row.
    """
    if image_format not in ("png", "svg"):
        raise ValueError(f"unsupported image format {image_format!r}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    produced: dict[str, Path] = {}
    for spec in FIGURES:
        source = Path(in_dir) / spec.source_csv
        if not source.exists():
            message = f"skipping {spec.name}: missing input {source}"
            if strict:
                raise FileNotFoundError(message)
            print(f"warning: {message}", file=sys.stderr)
            continue
        out = out_dir / f"{spec.name}.{image_format}"
        spec.builder(load_table(source), out)
        produced[spec.name] = out
    return produced
