"""Independent reference implementations used to check the production paths.

Everything here is deliberately plain Python (loops, math module) so the
oracles share no code with the vectorized implementations they verify.
"""

from __future__ import annotations

import math
from typing import Sequence


def euclidean(a: Sequence[float], b: Sequence[float]) -> float:
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))


def brute_knn_label(
    stored: Sequence[tuple[Sequence[float], str]],
    query: Sequence[float],
    k: int,
) -> str:
    """Spec voting rules replayed with an O(n*d) scan and explicit sorting."""
    ranked = sorted(
        ((euclidean(vec, query), idx, label) for idx, (vec, label) in enumerate(stored)),
        key=lambda t: (t[0], t[1]),
    )[: min(k, len(stored))]

    votes: dict[str, int] = {}
    summed: dict[str, float] = {}
    for dist, _, label in ranked:
        votes[label] = votes.get(label, 0) + 1
        summed[label] = summed.get(label, 0.0) + dist

    best_label = None
    best_key = None
    for label in votes:
        key = (-votes[label], summed[label], label)
        if best_key is None or key < best_key:
            best_key = key
            best_label = label
    return best_label


def brute_lof(
    reference: Sequence[Sequence[float]],
    query: Sequence[float],
    k: int,
) -> float:
    """Textbook LOF with exactly-k neighborhoods and a 1e-10 density guard."""
    n = len(reference)
    guard = 1e-10

    def neighbors_of(point, exclude=None):
        ranked = sorted(
            ((euclidean(reference[j], point), j) for j in range(n) if j != exclude),
            key=lambda t: (t[0], t[1]),
        )
        return ranked[:k]

    kdist = []
    ref_neighbors = []
    for i in range(n):
        ranked = neighbors_of(reference[i], exclude=i)
        ref_neighbors.append(ranked)
        kdist.append(ranked[-1][0])

    def lrd_of(ranked):
        reach = [max(kdist[j], d) for d, j in ranked]
        return 1.0 / (sum(reach) / len(reach) + guard)

    lrd = [lrd_of(ranked) for ranked in ref_neighbors]

    q_ranked = neighbors_of(query)
    lrd_query = lrd_of(q_ranked)
    return sum(lrd[j] for _, j in q_ranked) / len(q_ranked) / lrd_query


def linear_scores(
    classes: Sequence[str],
    weights: Sequence[Sequence[float]],
    values: Sequence[float],
) -> dict[str, float]:
    """Per-class score replay: plain sum of products plus trailing bias."""
    out = {}
    for label, row in zip(classes, weights):
        score = row[-1]
        for w, x in zip(row[:-1], values):
            score += w * x
        out[label] = score
    return out
