"""Batch figure rendering for gensemble CSV outputs."""

from .drift import kde_curve, render_drift, save_drift
from .heatmap import render_heatmaps, save_heatmaps
from .io import DriftTable, GridTable, SchemaError, load_drift, load_grid

__version__ = "0.1.0"
