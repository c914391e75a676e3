"""Schema-checked readers for the harness CSV tables.

Every gensemble CSV starts with a versioned magic comment line; readers
refuse anything else so that silent schema drift cannot produce wrong
figures.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

GRID_SCHEMA = "# gensemble-csv grid v1"
DRIFT_SCHEMA = "# gensemble-csv drift v1"

GRID_COLUMNS = ["diam", "cc", "density", "success_ratio", "diversity", "trials", "reason"]
DRIFT_COLUMNS = ["method", "seed_id", "step", "drift"]


class SchemaError(Exception):
    """Input CSV does not match the expected versioned schema."""


def _read_checked(path, magic: str, columns: list[str]) -> list[dict]:
    with open(path, "r", encoding="ascii", newline="") as fh:
        first = fh.readline().rstrip("\n")
        if first != magic:
            raise SchemaError(f"{path}: expected '{magic}', found '{first}'")
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: missing header row") from None
        if header != columns:
            raise SchemaError(f"{path}: header {header} != {columns}")
        return [dict(zip(columns, row)) for row in reader if row]


@dataclass(frozen=True)
class GridTable:
    """Rectangular (diam, cc) grid of success ratios and diversities."""

    diams: np.ndarray       # sorted unique diameters (x axis)
    ccs: np.ndarray         # sorted unique clustering targets (y axis)
    success: np.ndarray     # shape (len(ccs), len(diams))
    diversity: np.ndarray   # same shape, NaN where fewer than 2 successes
    density: float
    trials: int


def load_grid(path) -> GridTable:
    rows = _read_checked(path, GRID_SCHEMA, GRID_COLUMNS)
    if not rows:
        raise SchemaError(f"{path}: grid is empty")
    diams = np.array(sorted({int(r["diam"]) for r in rows}))
    ccs = np.array(sorted({float(r["cc"]) for r in rows}))
    if len(rows) != len(diams) * len(ccs):
        raise SchemaError(
            f"{path}: {len(rows)} rows do not form a "
            f"{len(ccs)}x{len(diams)} rectangular grid"
        )
    success = np.full((len(ccs), len(diams)), np.nan)
    diversity = np.full((len(ccs), len(diams)), np.nan)
    seen = set()
    for r in rows:
        i = int(np.searchsorted(ccs, float(r["cc"])))
        j = int(np.searchsorted(diams, int(r["diam"])))
        if (i, j) in seen:
            raise SchemaError(f"{path}: duplicate cell diam={r['diam']} cc={r['cc']}")
        seen.add((i, j))
        success[i, j] = float(r["success_ratio"])
        diversity[i, j] = float(r["diversity"]) if r["diversity"] else np.nan
    return GridTable(
        diams=diams,
        ccs=ccs,
        success=success,
        diversity=diversity,
        density=float(rows[0]["density"]),
        trials=int(rows[0]["trials"]),
    )


@dataclass(frozen=True)
class DriftTable:
    method: str
    drifts: np.ndarray


def load_drift(path) -> DriftTable:
    rows = _read_checked(path, DRIFT_SCHEMA, DRIFT_COLUMNS)
    if not rows:
        raise SchemaError(f"{path}: drift table is empty")
    methods = {r["method"] for r in rows}
    if len(methods) != 1:
        raise SchemaError(f"{path}: mixed methods {sorted(methods)}")
    return DriftTable(
        method=methods.pop(),
        drifts=np.array([float(r["drift"]) for r in rows]),
    )
