"""Normalized-Laplacian spectra and spectral distances.

L = I - D^{-1/2} A D^{-1/2}, with the D^{-1/2} entry taken as 0 for
isolated nodes so the matrix stays well-defined on every simple graph.
All eigenvalues lie in [0, 2], the smallest is 0, and the sorted
sequence is invariant under node relabeling, which makes the
root-mean-square gap between two sorted spectra a label-free distance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, LengthMismatch, TooFewGraphs
from .graph import Graph


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of the normalized Laplacian, sorted non-decreasing."""

    eigenvalues: np.ndarray

    def __len__(self) -> int:
        return len(self.eigenvalues)


def normalized_laplacian(g: Graph) -> np.ndarray:
    a = g.adjacency_matrix(dtype=np.float64)
    deg = a.sum(axis=1)
    nonzero = deg > 0
    with np.errstate(divide="ignore"):
        inv_sqrt = np.where(nonzero, 1.0 / np.sqrt(deg), 0.0)
    lap = -(inv_sqrt[:, None] * a) * inv_sqrt[None, :]
    lap[np.diag_indices(g.n)] = np.where(nonzero, 1.0, 0.0)
    return lap


def spectrum(g: Graph) -> Spectrum:
    """All n eigenvalues via a dense symmetric solver, ascending order."""
    lap = normalized_laplacian(g)
    try:
        vals = np.linalg.eigvalsh(lap)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological input
        raise ConvergenceFailure(str(exc)) from exc
    return Spectrum(np.sort(vals))


def spectral_distance(a: Spectrum, b: Spectrum) -> float:
    """Root-mean-square difference of the two sorted eigenvalue sequences."""
    if len(a) != len(b):
        raise LengthMismatch(f"spectrum lengths {len(a)} != {len(b)}")
    diff = a.eigenvalues - b.eigenvalues
    return float(np.sqrt(np.mean(diff * diff)))


def ensemble_diversity(spectra: list[Spectrum]) -> float:
    """Mean pairwise spectral distance over all unordered pairs."""
    count = len(spectra)
    if count < 2:
        raise TooFewGraphs(f"diversity needs >= 2 graphs, got {count}")
    total = 0.0
    for i in range(count):
        for j in range(i + 1, count):
            total += spectral_distance(spectra[i], spectra[j])
    return total / (count * (count - 1) // 2)


def distance_matrix(spectra: list[Spectrum]) -> np.ndarray:
    n = len(spectra)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            out[i, j] = out[j, i] = spectral_distance(spectra[i], spectra[j])
    return out
