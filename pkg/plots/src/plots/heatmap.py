"""Success-ratio and spectral-diversity heatmaps from a grid table."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import GridTable

_DPI = 150


def _draw(ax, table: GridTable, values: np.ndarray, title: str, cmap_name: str):
    masked = np.ma.masked_invalid(values)
    cmap = plt.get_cmap(cmap_name).copy()
    cmap.set_bad("0.85")
    image = ax.imshow(masked, origin="lower", aspect="auto", cmap=cmap)
    ax.set_xticks(range(len(table.diams)), [str(d) for d in table.diams])
    ax.set_yticks(range(len(table.ccs)), [f"{c:g}" for c in table.ccs])
    ax.set_xlabel("diameter target")
    ax.set_ylabel("clustering target")
    ax.set_title(title)
    return image


def render_heatmaps(table: GridTable):
    """Two figures: success ratio and ensemble spectral diversity.

    Cells with fewer than two successes have no diversity value and are
    rendered masked (gray).
    """
    figures = {}
    for key, values, title, cmap in (
        ("success_ratio", table.success,
         f"Success ratio (density {table.density:g}, {table.trials} trials/cell)", "viridis"),
        ("spectral_diversity", table.diversity,
         f"Ensemble spectral diversity (density {table.density:g})", "magma"),
    ):
        fig, ax = plt.subplots(figsize=(6.0, 4.5))
        image = _draw(ax, table, values, title, cmap)
        fig.colorbar(image, ax=ax)
        fig.tight_layout()
        figures[key] = fig
    return figures


def save_heatmaps(table: GridTable, out_dir: str) -> list[str]:
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for key, fig in render_heatmaps(table).items():
        path = os.path.join(out_dir, f"{key}.png")
        fig.savefig(path, dpi=_DPI)
        plt.close(fig)
        paths.append(path)
    return paths
