"""CSV ingestion for the experiment outputs.

Strict consumer of the sector-spectral CSV contract: every number used by a
figure comes straight out of a column, and a missing column is a hard error
naming the column. Nothing is recomputed or interpolated here.
"""

from __future__ import annotations

import csv


class SchemaError(ValueError):
    """A required column is absent from the input CSV."""


REQUIRED = {
    "spectrum": ["W", "beta", "index", "eigenvalue", "k_star"],
    "tomography": ["beta", "K", "k_star", "mean_mse", "ci95_half"],
    "dim": ["d", "K", "k_star", "mean_mse", "ci95_half"],
    "basis": ["basis", "K", "k_star", "mean_mse", "ci95_half"],
}

_STRING_COLUMNS = {"basis"}


def read_rows(path, figure_id):
    """Parse one CSV, checking the columns the figure needs are present."""
    required = REQUIRED[figure_id]
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in required:
            if col not in header:
                raise SchemaError(f"missing column: {col} (in {path})")
        rows = []
        for raw in reader:
            row = {}
            for key, val in raw.items():
                row[key] = val if key in _STRING_COLUMNS else float(val)
            rows.append(row)
    return rows


def read_many(paths, figure_id):
    rows = []
    for path in paths:
        rows.extend(read_rows(path, figure_id))
    return rows
