"""Online classification, anomaly scoring, evaluation, and model codecs."""

from .dataset import LabeledExample, load_labeled_dataset, parse_labeled_record, emit_labeled_record
from .evaluate import AccuracyReport, cross_validate, kfold_split, select_best
from .knn import KnnModel, knn_predict
from .linear import LinearModel, linear_predict, linear_train_epochs, linear_train_one
from .lof import AnomalyModel, lof_score
from .serialize import deserialize_model, model_hash, serialize_model

__all__ = [
    "AccuracyReport",
    "AnomalyModel",
    "KnnModel",
    "LabeledExample",
    "LinearModel",
    "cross_validate",
    "deserialize_model",
    "emit_labeled_record",
    "kfold_split",
    "knn_predict",
    "linear_predict",
    "linear_train_epochs",
    "linear_train_one",
    "load_labeled_dataset",
    "lof_score",
    "model_hash",
    "parse_labeled_record",
    "select_best",
]
