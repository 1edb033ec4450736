"""k-fold evaluation harness and the two-algorithm selection rule."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..errors import BadFoldCount, MismatchedReports
from .dataset import LabeledExample
from .knn import KnnModel, knn_predict
from .linear import LinearModel, linear_predict, linear_train_epochs

ALGORITHMS = ("linear", "knn")
CV_EPOCH_BUDGET = 50


@dataclass(frozen=True)
class AccuracyReport:
    """Per-fold and mean accuracy, plus per-class precision for transparency."""

    algorithm: str
    k_folds: int
    n_examples: int
    fold_accuracies: tuple[float, ...]
    mean_accuracy: float
    per_class_precision: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}")
        if len(self.fold_accuracies) != self.k_folds:
            raise ValueError("one accuracy per fold required")
        for a in self.fold_accuracies:
            if not 0.0 <= a <= 1.0:
                raise ValueError("fold accuracies must lie in [0, 1]")
        expected = sum(self.fold_accuracies) / len(self.fold_accuracies)
        if abs(self.mean_accuracy - expected) > 1e-12:
            raise ValueError("mean_accuracy must equal the mean of fold_accuracies")


def kfold_split(n: int, k: int, labels: Sequence[str], seed: int) -> tuple[tuple[int, ...], ...]:
    """Partition indices 0..n into k label-stratified folds.

    Each class's members are shuffled and dealt round-robin, with the dealing
    position carried from class to class so total fold sizes differ by at
    most one. Deterministic for a fixed seed.
    """
    if not 2 <= k <= n:
        raise BadFoldCount(f"fold count must satisfy 2 <= k <= n, got k={k}, n={n}")
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")

    by_class: dict[str, list[int]] = {}
    for idx, label in enumerate(labels):
        by_class.setdefault(label, []).append(idx)

    rng = random.Random(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    cursor = 0
    for label in sorted(by_class):
        members = by_class[label]
        rng.shuffle(members)
        for idx in members:
            folds[cursor % k].append(idx)
            cursor += 1
    return tuple(tuple(sorted(fold)) for fold in folds)


def _train_fold(algorithm: str, train: list[LabeledExample], fold_seed: int,
                epochs: int, knn_k: int):
    if algorithm == "linear":
        return linear_train_epochs(LinearModel(), train, epochs=epochs, seed=fold_seed)
    return KnnModel(tuple(train), k=knn_k)


def _predict(algorithm: str, model, fv) -> str:
    if algorithm == "linear":
        return linear_predict(model, fv)[0]
    return knn_predict(model, fv)[0]


def cross_validate(
    dataset: Sequence[LabeledExample],
    k: int,
    algorithm: str,
    seed: int,
    *,
    epochs: int = CV_EPOCH_BUDGET,
    knn_k: int = 5,
) -> AccuracyReport:
    """Hold out each fold in turn, train on the rest, and report accuracy."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"algorithm must be one of {ALGORITHMS}")
    n = len(dataset)
    labels = [ex.label for ex in dataset]
    folds = kfold_split(n, k, labels, seed)

    fold_accuracies = []
    correct_by_pred: dict[str, int] = {}
    total_by_pred: dict[str, int] = {}
    for fold_idx, fold in enumerate(folds):
        held_out = set(fold)
        train = [ex for i, ex in enumerate(dataset) if i not in held_out]
        model = _train_fold(algorithm, train, seed * 100003 + fold_idx, epochs, knn_k)
        correct = 0
        for i in fold:
            predicted = _predict(algorithm, model, dataset[i].features)
            total_by_pred[predicted] = total_by_pred.get(predicted, 0) + 1
            if predicted == dataset[i].label:
                correct += 1
                correct_by_pred[predicted] = correct_by_pred.get(predicted, 0) + 1
        fold_accuracies.append(correct / len(fold))

    precision = {
        label: correct_by_pred.get(label, 0) / total
        for label, total in sorted(total_by_pred.items())
    }
    return AccuracyReport(
        algorithm=algorithm,
        k_folds=k,
        n_examples=n,
        fold_accuracies=tuple(fold_accuracies),
        mean_accuracy=sum(fold_accuracies) / k,
        per_class_precision=precision,
    )


def select_best(a: AccuracyReport, b: AccuracyReport) -> str:
    """Pick the algorithm with the higher mean accuracy; ties go to linear."""
    if a.n_examples != b.n_examples or a.k_folds != b.k_folds:
        raise MismatchedReports(
            f"reports disagree on setup: n={a.n_examples}/{b.n_examples}, "
            f"k={a.k_folds}/{b.k_folds}")
    if a.mean_accuracy == b.mean_accuracy:
        return "linear" if "linear" in (a.algorithm, b.algorithm) else a.algorithm
    return a.algorithm if a.mean_accuracy > b.mean_accuracy else b.algorithm
