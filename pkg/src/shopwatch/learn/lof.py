"""Local-outlier-factor anomaly scoring against a normal-behavior corpus.

Scores compare the local density at a query point with the densities at its
nearest reference points: values near 1 mean the query sits inside the
reference distribution, values well above 1 mean it is isolated.

Conventions (shared by the query path and the in-corpus statistics):
exact Euclidean neighbor search, exactly k neighbors with distance ties
broken by insertion order, and densities guarded by a 1e-10 additive term so
duplicate-heavy corpora stay finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InsufficientReference
from ..features import FEATURE_DIM, FeatureVector

_DENSITY_GUARD = 1e-10


@dataclass(frozen=True)
class AnomalyModel:
    reference: tuple[FeatureVector, ...]
    k_lof: int = 10
    # precomputed per-reference statistics; derived, not compared
    _matrix: np.ndarray = field(init=False, repr=False, compare=False)
    _kdist: np.ndarray = field(init=False, repr=False, compare=False)
    _lrd: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k_lof < 1:
            raise ValueError("k_lof must be >= 1")
        n = len(self.reference)
        matrix = np.array([fv.values for fv in self.reference],
                          dtype=np.float64).reshape(n, FEATURE_DIM)
        object.__setattr__(self, "_matrix", matrix)
        if n >= self.k_lof + 1:
            kdist, lrd = _reference_stats(matrix, self.k_lof)
        else:
            kdist, lrd = np.empty(0), np.empty(0)
        object.__setattr__(self, "_kdist", kdist)
        object.__setattr__(self, "_lrd", lrd)


def _reference_stats(matrix: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """k-distance and local reachability density of every reference point."""
    n = matrix.shape[0]
    # row-at-a-time difference form: same arithmetic as the query path and
    # no cancellation error for near-coincident points
    dists = np.empty((n, n), dtype=np.float64)
    for i in range(n):
        diffs = matrix - matrix[i]
        dists[i] = np.sqrt(np.einsum("ij,ij->i", diffs, diffs))
    np.fill_diagonal(dists, np.inf)
    order = np.argsort(dists, axis=1, kind="stable")
    neighbor_idx = order[:, :k]
    neighbor_dist = np.take_along_axis(dists, neighbor_idx, axis=1)
    kdist = neighbor_dist[:, k - 1].copy()

    reach = np.maximum(kdist[neighbor_idx], neighbor_dist)
    lrd = 1.0 / (reach.mean(axis=1) + _DENSITY_GUARD)
    return kdist, lrd


def lof_score(model: AnomalyModel, fv: FeatureVector) -> float:
    """Score a query against the reference corpus; ~1 inside, >> 1 outside."""
    n = len(model.reference)
    if n < model.k_lof + 1:
        raise InsufficientReference(
            f"need at least {model.k_lof + 1} reference points, have {n}")
    diffs = model._matrix - np.asarray(fv.values, dtype=np.float64)
    dists = np.sqrt(np.einsum("ij,ij->i", diffs, diffs))
    nearest = np.argsort(dists, kind="stable")[:model.k_lof]

    reach = np.maximum(model._kdist[nearest], dists[nearest])
    lrd_query = 1.0 / (reach.mean() + _DENSITY_GUARD)
    return float(model._lrd[nearest].mean() / lrd_query)
