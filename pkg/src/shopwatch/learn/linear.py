"""Multiclass perceptron over 136-dim feature vectors.

Each class holds 137 weights (136 feature weights plus a trailing bias whose
input is a constant 1). Class order is sorted label text, which fixes both
the argmax tie-break and the canonical serialization order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from ..errors import EmptyDataset, EmptyModel
from ..features import FEATURE_DIM, FeatureVector
from .dataset import LabeledExample

WEIGHTS_PER_CLASS = FEATURE_DIM + 1


@dataclass(frozen=True)
class LinearModel:
    classes: tuple[str, ...] = ()
    weights: tuple[tuple[float, ...], ...] = ()  # parallel to classes, 137 each
    epochs_trained: int = 0

    def __post_init__(self):
        if tuple(sorted(self.classes)) != self.classes:
            raise ValueError("classes must be in sorted order")
        if len(self.weights) != len(self.classes):
            raise ValueError("one weight row per class required")
        for row in self.weights:
            if len(row) != WEIGHTS_PER_CLASS:
                raise ValueError(f"each class needs {WEIGHTS_PER_CLASS} weights")


def _weight_matrix(model: LinearModel) -> np.ndarray:
    return np.array(model.weights, dtype=np.float64).reshape(len(model.classes), WEIGHTS_PER_CLASS)


def _augment(fv: FeatureVector) -> np.ndarray:
    x = np.empty(WEIGHTS_PER_CLASS, dtype=np.float64)
    x[:FEATURE_DIM] = fv.values
    x[FEATURE_DIM] = 1.0
    return x


def _scores(w: np.ndarray, x: np.ndarray) -> np.ndarray:
    return w @ x


def linear_predict(model: LinearModel, fv: FeatureVector) -> tuple[str, dict[str, float]]:
    """Return the argmax class and the per-class scores.

    Score ties go to the class earliest in sorted order.
    """
    if not model.classes:
        raise EmptyModel("linear model has no classes")
    scores = _scores(_weight_matrix(model), _augment(fv))
    best = int(np.argmax(scores))  # argmax returns the first maximum
    return model.classes[best], {c: float(s) for c, s in zip(model.classes, scores)}


def _with_class(model: LinearModel, label: str) -> LinearModel:
    if label in model.classes:
        return model
    classes = tuple(sorted(model.classes + (label,)))
    zero = tuple(0.0 for _ in range(WEIGHTS_PER_CLASS))
    by_label = dict(zip(model.classes, model.weights))
    by_label[label] = zero
    return LinearModel(
        classes=classes,
        weights=tuple(by_label[c] for c in classes),
        epochs_trained=model.epochs_trained,
    )


def linear_train_one(model: LinearModel, ex: LabeledExample) -> LinearModel:
    """One perceptron step: on a wrong prediction, move the true class's
    weights toward the example and the predicted class's away from it."""
    model = _with_class(model, ex.label)
    w = _weight_matrix(model)
    x = _augment(ex.features)
    predicted = int(np.argmax(_scores(w, x)))
    truth = model.classes.index(ex.label)
    if predicted == truth:
        return model
    w[truth] += x
    w[predicted] -= x
    return LinearModel(
        classes=model.classes,
        weights=tuple(tuple(float(v) for v in row) for row in w),
        epochs_trained=model.epochs_trained,
    )


def linear_train_epochs(
    model: LinearModel,
    dataset: list[LabeledExample],
    epochs: int,
    seed: int,
) -> LinearModel:
    """Train with a seeded shuffle each epoch; stop early after an error-free pass.

    The arithmetic is identical to repeated `linear_train_one` calls, just
    without rebuilding the model between steps.
    """
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    if not dataset:
        raise EmptyDataset("cannot train on an empty dataset")

    for ex in dataset:
        model = _with_class(model, ex.label)
    classes = model.classes
    index_of = {c: i for i, c in enumerate(classes)}

    w = _weight_matrix(model)
    xs = np.empty((len(dataset), WEIGHTS_PER_CLASS), dtype=np.float64)
    ys = np.empty(len(dataset), dtype=np.intp)
    for i, ex in enumerate(dataset):
        xs[i] = _augment(ex.features)
        ys[i] = index_of[ex.label]

    # epochs_trained counts passes that updated at least one weight, so a
    # dataset the model already classifies perfectly leaves it unchanged.
    rng = random.Random(seed)
    order = list(range(len(dataset)))
    epochs_done = model.epochs_trained
    for _ in range(epochs):
        rng.shuffle(order)
        errors = 0
        for i in order:
            x = xs[i]
            predicted = int(np.argmax(w @ x))
            truth = int(ys[i])
            if predicted != truth:
                w[truth] += x
                w[predicted] -= x
                errors += 1
        if errors == 0:
            break
        epochs_done += 1

    return LinearModel(
        classes=classes,
        weights=tuple(tuple(float(v) for v in row) for row in w),
        epochs_trained=epochs_done,
    )
