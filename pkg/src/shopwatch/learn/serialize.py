"""Canonical model bytes for distribution, and the content hash over them.

Encoding is single-document JSON with a fixed field order, classes in sorted
order, and numbers as shortest-round-trip decimals, so equal models always
produce identical bytes and `deserialize(serialize(m)) == m` holds exactly.
"""

from __future__ import annotations

import hashlib
import json
import math
from typing import Any, Union

from ..errors import CorruptModel
from ..features import FEATURE_DIM, FeatureVector
from .dataset import LabeledExample
from .knn import KnnModel
from .linear import WEIGHTS_PER_CLASS, LinearModel
from .lof import AnomalyModel

Model = Union[LinearModel, KnnModel, AnomalyModel]

MODEL_KINDS = ("linear", "knn", "anomaly")


def model_kind(model: Model) -> str:
    if isinstance(model, LinearModel):
        return "linear"
    if isinstance(model, KnnModel):
        return "knn"
    if isinstance(model, AnomalyModel):
        return "anomaly"
    raise TypeError(f"not a model: {type(model).__name__}")


def serialize_model(model: Model) -> bytes:
    kind = model_kind(model)
    doc: dict[str, Any]
    if kind == "linear":
        doc = {
            "kind": "linear",
            "classes": list(model.classes),
            "weights": [list(row) for row in model.weights],
            "epochs_trained": model.epochs_trained,
        }
    elif kind == "knn":
        doc = {
            "kind": "knn",
            "k": model.k,
            "examples": [{"label": ex.label, "values": list(ex.features.values)}
                         for ex in model.examples],
        }
    else:
        doc = {
            "kind": "anomaly",
            "k_lof": model.k_lof,
            "reference": [list(fv.values) for fv in model.reference],
        }
    return json.dumps(doc, separators=(",", ":")).encode("utf-8")


def _vector(raw: Any, what: str) -> tuple[float, ...]:
    if not isinstance(raw, list) or len(raw) != FEATURE_DIM:
        raise CorruptModel(f"{what} must hold {FEATURE_DIM} numbers")
    out = []
    for v in raw:
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            raise CorruptModel(f"{what} contains a non-finite or non-numeric entry")
        out.append(float(v))
    return tuple(out)


def _positive_int(raw: Any, what: str) -> int:
    if type(raw) is not int or raw < 1:
        raise CorruptModel(f"{what} must be a positive integer")
    return raw


def deserialize_model(data: bytes) -> Model:
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CorruptModel(f"model bytes are not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("kind") not in MODEL_KINDS:
        raise CorruptModel("model document lacks a known kind")

    try:
        if doc["kind"] == "linear":
            if set(doc) != {"kind", "classes", "weights", "epochs_trained"}:
                raise CorruptModel("unexpected linear model fields")
            classes = doc["classes"]
            if not isinstance(classes, list) or not all(isinstance(c, str) for c in classes):
                raise CorruptModel("classes must be strings")
            weights = doc["weights"]
            if not isinstance(weights, list) or len(weights) != len(classes):
                raise CorruptModel("one weight row per class required")
            rows = []
            for row in weights:
                if not isinstance(row, list) or len(row) != WEIGHTS_PER_CLASS:
                    raise CorruptModel(f"weight rows must hold {WEIGHTS_PER_CLASS} numbers")
                for v in row:
                    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                        raise CorruptModel("weights contain a non-finite or non-numeric entry")
                rows.append(tuple(float(v) for v in row))
            epochs = doc["epochs_trained"]
            if type(epochs) is not int or epochs < 0:
                raise CorruptModel("epochs_trained must be a non-negative integer")
            return LinearModel(classes=tuple(classes), weights=tuple(rows),
                               epochs_trained=epochs)

        if doc["kind"] == "knn":
            if set(doc) != {"kind", "k", "examples"}:
                raise CorruptModel("unexpected knn model fields")
            k = _positive_int(doc["k"], "k")
            raw = doc["examples"]
            if not isinstance(raw, list):
                raise CorruptModel("examples must be a list")
            examples = []
            for entry in raw:
                if not isinstance(entry, dict) or set(entry) != {"label", "values"}:
                    raise CorruptModel("each example needs label and values")
                label = entry["label"]
                if not isinstance(label, str) or not label:
                    raise CorruptModel("example labels must be non-empty strings")
                examples.append(LabeledExample(FeatureVector(_vector(entry["values"], "values")),
                                               label))
            return KnnModel(tuple(examples), k=k)

        if set(doc) != {"kind", "k_lof", "reference"}:
            raise CorruptModel("unexpected anomaly model fields")
        k_lof = _positive_int(doc["k_lof"], "k_lof")
        raw = doc["reference"]
        if not isinstance(raw, list):
            raise CorruptModel("reference must be a list")
        reference = tuple(FeatureVector(_vector(entry, "reference")) for entry in raw)
        return AnomalyModel(reference, k_lof=k_lof)
    except CorruptModel:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptModel(f"malformed model document: {exc}") from exc


def model_hash(model: Model) -> bytes:
    """SHA-256 over the canonical bytes; identical models hash identically."""
    return hashlib.sha256(serialize_model(model)).digest()
