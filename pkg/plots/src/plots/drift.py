"""Overlaid kernel-density estimates of drift-from-seed distributions."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from scipy.stats import gaussian_kde

from .io import DriftTable

_DPI = 150
_GRID_POINTS = 256


def kde_curve(values: np.ndarray, grid: np.ndarray, bandwidth=None) -> np.ndarray:
    """Gaussian KDE evaluated on grid; bandwidth None means the
    rule-of-thumb (Scott) default, otherwise a scipy bw_method value."""
    if len(values) < 2:
        raise ValueError("KDE needs at least two samples")
    if np.ptp(values) == 0.0:
        # degenerate sample: delta spike at the common value
        out = np.zeros_like(grid)
        out[int(np.argmin(np.abs(grid - values[0])))] = 1.0
        return out
    return gaussian_kde(values, bw_method=bandwidth)(grid)


def evaluation_grid(tables: list[DriftTable]) -> np.ndarray:
    top = max(t.drifts.max() for t in tables)
    span = top if top > 0 else 1.0
    return np.linspace(0.0, 1.1 * span, _GRID_POINTS)


def render_drift(mcmc: DriftTable, hybrid: DriftTable, bandwidth=None):
    grid = evaluation_grid([mcmc, hybrid])
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for table, color in ((mcmc, "tab:blue"), (hybrid, "tab:orange")):
        ax.plot(grid, kde_curve(table.drifts, grid, bandwidth), color=color,
                label=table.method)
        ax.fill_between(grid, kde_curve(table.drifts, grid, bandwidth),
                        alpha=0.25, color=color)
    ax.set_xlabel("spectral distance from seed")
    ax.set_ylabel("estimated density")
    ax.set_title("Drift from seed: sampling method comparison")
    ax.legend()
    fig.tight_layout()
    return fig


def save_drift(mcmc: DriftTable, hybrid: DriftTable, out_dir: str,
               bandwidth=None) -> str:
    os.makedirs(out_dir, exist_ok=True)
    fig = render_drift(mcmc, hybrid, bandwidth)
    path = os.path.join(out_dir, "drift_comparison.png")
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path
