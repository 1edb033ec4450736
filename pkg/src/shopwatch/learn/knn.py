"""k-nearest-neighbor posture classifier with exact Euclidean search."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import EmptyModel
from ..features import FEATURE_DIM, FeatureVector
from .dataset import LabeledExample


@dataclass(frozen=True)
class KnnModel:
    examples: tuple[LabeledExample, ...]
    k: int = 5
    # cached matrix view of the stored examples; derived, not compared
    _matrix: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        matrix = np.array([ex.features.values for ex in self.examples],
                          dtype=np.float64).reshape(len(self.examples), FEATURE_DIM)
        object.__setattr__(self, "_matrix", matrix)


def knn_predict(model: KnnModel, fv: FeatureVector) -> tuple[str, list[tuple[float, str]]]:
    """Majority vote among the k nearest stored examples.

    Effective k is min(k, |examples|). Vote ties break to the label with the
    smaller summed neighbor distance, then to the smaller label text. Equal
    distances rank in insertion order.
    """
    if not model.examples:
        raise EmptyModel("knn model holds no examples")
    diffs = model._matrix - np.asarray(fv.values, dtype=np.float64)
    dists = np.sqrt(np.einsum("ij,ij->i", diffs, diffs))
    k = min(model.k, len(model.examples))
    nearest = np.argsort(dists, kind="stable")[:k]

    votes: dict[str, int] = {}
    summed: dict[str, float] = {}
    neighbors = []
    for idx in nearest:
        label = model.examples[int(idx)].label
        d = float(dists[int(idx)])
        neighbors.append((d, label))
        votes[label] = votes.get(label, 0) + 1
        summed[label] = summed.get(label, 0.0) + d

    winner = min(votes, key=lambda lbl: (-votes[lbl], summed[lbl], lbl))
    return winner, neighbors
