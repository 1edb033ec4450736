"""Labeled dataset records: landmark NDJSON extended with a posture label."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import ParseError, ValidationError
from ..features import FeatureVector, LandmarkFrame, frame_from_dict, frame_to_dict, normalize_landmarks


@dataclass(frozen=True)
class LabeledExample:
    features: FeatureVector
    label: str

    def __post_init__(self):
        if not self.label:
            raise ValueError("label must be non-empty")


def parse_labeled_record(line: str) -> tuple[LandmarkFrame, str]:
    """Parse a landmark record carrying an extra `label` field."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} at {exc.pos}") from exc
    if not isinstance(obj, dict):
        raise ValidationError("record must be a JSON object", "")
    label = obj.pop("label", None)
    if not isinstance(label, str) or not label:
        raise ValidationError("label must be a non-empty string", "label")
    return frame_from_dict(obj), label


def emit_labeled_record(frame: LandmarkFrame, label: str) -> str:
    obj = frame_to_dict(frame)
    obj["label"] = label
    return json.dumps(obj, separators=(",", ":"))


def load_labeled_dataset(path: str | Path) -> list[LabeledExample]:
    """Read a labeled landmark file and normalize every frame."""
    examples = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            frame, label = parse_labeled_record(line)
            examples.append(LabeledExample(normalize_landmarks(frame), label))
    return examples
