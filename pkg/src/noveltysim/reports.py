"""Report writers (CSV/JSON/Markdown) and experiment config loading.

Output is bit-stable for identical inputs: floats use their shortest
round-trip representation (6 significant digits in Markdown), column
order is fixed, and timestamps live only in metadata (a sidecar file for
CSV, a metadata object for JSON).
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any

from .experiments import ExperimentSpec, resolve, suggest
from .model import ResultTable


class ConfigError(ValueError):
    """Raised when an experiment config file cannot be parsed or validated."""


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _md_cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def render_csv(table: ResultTable) -> str:
    """RFC-4180 CSV body: header row plus data rows, LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render_json(table: ResultTable) -> str:
    payload = {
        "name": table.name,
        "columns": list(table.columns),
        "rows": [list(row) for row in table.rows],
        "metadata": table.metadata,
    }
    return json.dumps(payload, indent=2) + "\n"


def render_md(table: ResultTable) -> str:
    lines = [f"# {table.name}", ""]
    lines.append("| " + " | ".join(table.columns) + " |")
    lines.append("| " + " | ".join("---" for _ in table.columns) + " |")
    for row in table.rows:
        lines.append("| " + " | ".join(_md_cell(v) for v in row) + " |")
    if table.metadata:
        lines.append("")
        for key, value in table.metadata.items():
            rendered = json.dumps(value) if isinstance(value, (dict, list)) else value
            lines.append(f"- {key}: {rendered}")
    return "\n".join(lines) + "\n"


_RENDERERS = {"csv": render_csv, "json": render_json, "md": render_md}

REPORT_FORMATS = tuple(_RENDERERS)


def render(table: ResultTable, fmt: str) -> str:
    if fmt not in _RENDERERS:
        raise ValueError(f"unknown report format {fmt!r}; valid: {', '.join(_RENDERERS)}")
    return _RENDERERS[fmt](table)


def metadata_sidecar_path(path: Path) -> Path:
    return path.with_suffix(".meta.json")


def write_report(table: ResultTable, fmt: str, path: str | Path) -> Path:
    """Write one report file.

    CSV keeps its data body timestamp-free; the table metadata (including
    the generation timestamp) goes to a `<name>.meta.json` sidecar.
    """
    out = Path(path)
    text = render(table, fmt)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8", newline="")
        if fmt == "csv":
            sidecar = metadata_sidecar_path(out)
            sidecar.write_text(
                json.dumps(table.metadata, indent=2) + "\n", encoding="utf-8"
            )
    except OSError as err:
        raise OSError(f"cannot write report to {out}: {err}") from err
    return out


def read_report_json(path: str | Path) -> ResultTable:
    """Inverse of the JSON writer; round-trips to an equal ResultTable."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    return ResultTable(
        name=raw["name"],
        columns=tuple(raw["columns"]),
        rows=tuple(tuple(row) for row in raw["rows"]),
        metadata=raw["metadata"],
    )


def write_summary(tables: dict[str, ResultTable], path: str | Path) -> Path:
    """Compact Markdown overview of a multi-experiment run."""
    lines = ["# Experiment summary", ""]
    for name, table in tables.items():
        lines.append(f"## {name}")
        lines.append("")
        lines.append(f"- rows: {len(table.rows)}")
        lines.append(f"- master_seed: {table.metadata.get('master_seed')}")
        if "n_trials" in table.metadata:
            lines.append(f"- n_trials: {table.metadata['n_trials']}")
        for line in _headline(table):
            lines.append(f"- {line}")
        lines.append("")
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="")
    return out


def _headline(table: ResultTable) -> list[str]:
    lines: list[str] = []
    if "exponent" in table.columns:
        seen: dict[str, float] = {}
        if "config" in table.columns:
            for cfg, exp in zip(table.column("config"), table.column("exponent")):
                seen.setdefault(cfg, exp)
        else:
            seen["fit"] = table.column("exponent")[0]
        for cfg, exp in seen.items():
            lines.append(f"exponent[{cfg}]: {exp:.6g}")
    if table.name == "org_scaling":
        seen_org: dict[str, tuple[float, float]] = {}
        for cfg, n_star, t_star in zip(
            table.column("config"),
            table.column("optimal_team_size"),
            table.column("min_wall_clock"),
        ):
            seen_org.setdefault(cfg, (n_star, t_star))
        for cfg, (n_star, t_star) in seen_org.items():
            lines.append(f"optimum[{cfg}]: n*={n_star:.1f}, T*={t_star:.1f}")
    return lines


_SPEC_KEYS = {"name", "seed", "trials", "E_grid", "overrides"}


def load_config(path: str | Path) -> list[ExperimentSpec]:
    """Load experiment specs from a JSON config file.

    Schema: {"experiments": [{"name": ..., "seed": ..., "trials": ...,
    "E_grid": [...], "overrides": {...}}, ...]}. Unknown keys are
    rejected (strict mode); omitted fields keep their defaults.
    """
    p = Path(path)
    try:
        raw = json.loads(p.read_text(encoding="utf-8"))
    except OSError as err:
        raise ConfigError(f"cannot read config {p}: {err}") from err
    except json.JSONDecodeError as err:
        raise ConfigError(f"{p}:{err.lineno}:{err.colno}: {err.msg}") from err

    if not isinstance(raw, dict):
        raise ConfigError(f"{p}: top level must be an object")
    for key in raw:
        if key != "experiments":
            raise ConfigError(
                f"{p}: unknown top-level key {key!r}{suggest(key, ['experiments'])}"
            )
    entries = raw.get("experiments", [])
    if not isinstance(entries, list):
        raise ConfigError(f"{p}: 'experiments' must be a list")

    specs: list[ExperimentSpec] = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise ConfigError(f"{p}: experiment #{i} must be an object")
        for key in entry:
            if key not in _SPEC_KEYS:
                raise ConfigError(
                    f"{p}: experiment #{i}: unknown key {key!r}"
                    f"{suggest(key, _SPEC_KEYS)}"
                )
        if "name" not in entry:
            raise ConfigError(f"{p}: experiment #{i} is missing 'name'")
        spec = ExperimentSpec(
            name=entry["name"],
            master_seed=entry.get("seed"),
            n_trials=entry.get("trials"),
            e_grid=tuple(entry["E_grid"]) if "E_grid" in entry else None,
            overrides=dict(entry.get("overrides", {})),
        )
        try:
            resolve(spec)
        except ValueError as err:
            raise ConfigError(f"{p}: experiment #{i}: {err}") from err
        specs.append(spec)
    return specs
