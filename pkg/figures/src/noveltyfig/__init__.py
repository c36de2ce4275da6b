"""Figure rendering for noveltysim experiment CSVs."""
from .render import FIGURES, Table, load_table, render_all

__all__ = ["FIGURES", "Table", "load_table", "render_all"]
