"""
CSV time series: one header row, floats written with repr.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from boltzmann_smoothing.storage_ttc.tools.path_tools import atomic_write_text


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def csv_text(
    header: Sequence[str], rows: Sequence[Sequence[Any]], *, comment: str = ""
) -> str:
    """CSV text; ``comment`` becomes a leading "# ..." line (gnuplot skips it)."""
    buffer = io.StringIO()
    if comment:
        buffer.write(f"# {comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"row has {len(row)} cells, header has {len(header)}")
        writer.writerow([_cell(value) for value in row])
    return buffer.getvalue()


def write_csv(
    path: str | Path,
    header: Sequence[str],
    rows: Sequence[Sequence[Any]],
    *,
    comment: str = "",
) -> Path:
    target = Path(path)
    atomic_write_text(target, csv_text(header, rows, comment=comment))
    return target


def write_series(
    path: str | Path,
    x: Sequence[float],
    y: Sequence[float],
    names: tuple[str, str] = ("t", "value"),
    *,
    comment: str = "",
) -> Path:
    """Two-column, plot-ready CSV."""
    if len(x) != len(y):
        raise ValueError(f"series lengths differ: {len(x)} vs {len(y)}")
    return write_csv(path, names, [(float(a), float(b)) for a, b in zip(x, y)], comment=comment)


def read_csv(path: str | Path) -> tuple[list[str], list[list[str]]]:
    with open(Path(path), "r", encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(line for line in handle if not line.startswith("#")))
    if not rows:
        raise ValueError(f"{path} is empty")
    return rows[0], rows[1:]
