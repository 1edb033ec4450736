"""Landmark frames and their conversion to normalized feature vectors.

A frame is one camera image reduced to 68 facial coordinate points plus the
face bounding box. Normalization subtracts the box origin and divides by the
box size per axis, so the resulting 136 values (68 x then 68 y) do not depend
on where the face sits in the image or how large it is.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .errors import NonPositiveBboxDimension, ParseError, ValidationError, WrongPointCount

POINT_COUNT = 68
FEATURE_DIM = 2 * POINT_COUNT

_RECORD_FIELDS = ("camera_id", "frame_seq", "timestamp_ms", "bbox", "points")


@dataclass(frozen=True)
class LandmarkFrame:
    """One camera frame: 68 (x, y) landmark points and a face bounding box.

    Invariants (68 points, positive box dimensions) are enforced at the
    boundaries — `parse_landmark_record` and `normalize_landmarks` — so that
    tests can construct deliberately broken frames.
    """

    camera_id: str
    frame_seq: int
    timestamp_ms: int
    bbox: tuple[float, float, float, float]  # origin_x, origin_y, width, height
    points: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class FeatureVector:
    """136 dimensionless values: normalized x coordinates then y coordinates."""

    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != FEATURE_DIM:
            raise ValueError(f"feature vector needs {FEATURE_DIM} values, got {len(self.values)}")
        for v in self.values:
            if not math.isfinite(v):
                raise ValueError("feature vector values must be finite")


def normalize_landmarks(frame: LandmarkFrame) -> FeatureVector:
    """Map a frame's pixel landmarks to a position- and scale-free vector.

    Entry i is (x_i - origin_x) / width, entry 68+i is (y_i - origin_y) / height.
    Points outside the box are legal and yield values outside [0, 1].
    """
    if len(frame.points) != POINT_COUNT:
        raise WrongPointCount(f"expected {POINT_COUNT} points, got {len(frame.points)}")
    ox, oy, w, h = frame.bbox
    if w <= 0 or h <= 0:
        raise NonPositiveBboxDimension(f"bbox dimensions must be positive, got {w}x{h}")
    xs = tuple((p[0] - ox) / w for p in frame.points)
    ys = tuple((p[1] - oy) / h for p in frame.points)
    return FeatureVector(xs + ys)


def _require_int(obj: dict[str, Any], field: str) -> int:
    value = obj[field]
    if type(value) is not int:  # bool is an int subclass; reject it
        raise ValidationError(f"{field} must be an integer", field)
    return value


def _require_number(value: Any, field: str) -> float:
    if type(value) is bool or not isinstance(value, (int, float)):
        raise ValidationError(f"{field} must be a number", field)
    out = float(value)
    if not math.isfinite(out):
        raise ValidationError(f"{field} must be finite", field)
    return out


def frame_from_dict(obj: dict[str, Any]) -> LandmarkFrame:
    """Validate a decoded record object into a LandmarkFrame."""
    if not isinstance(obj, dict):
        raise ValidationError("record must be a JSON object", "")
    for field in _RECORD_FIELDS:
        if field not in obj:
            raise ValidationError(f"missing field {field}", field)
    for field in obj:
        if field not in _RECORD_FIELDS:
            raise ValidationError(f"unknown field {field}", field)

    camera_id = obj["camera_id"]
    if not isinstance(camera_id, str):
        raise ValidationError("camera_id must be a string", "camera_id")
    frame_seq = _require_int(obj, "frame_seq")
    timestamp_ms = _require_int(obj, "timestamp_ms")

    bbox_raw = obj["bbox"]
    if not isinstance(bbox_raw, list) or len(bbox_raw) != 4:
        raise ValidationError("bbox must be [origin_x, origin_y, width, height]", "bbox")
    ox = _require_number(bbox_raw[0], "bbox.origin_x")
    oy = _require_number(bbox_raw[1], "bbox.origin_y")
    w = _require_number(bbox_raw[2], "bbox.width")
    h = _require_number(bbox_raw[3], "bbox.height")
    if w <= 0:
        raise ValidationError("bbox.width must be positive", "bbox.width")
    if h <= 0:
        raise ValidationError("bbox.height must be positive", "bbox.height")

    points_raw = obj["points"]
    if not isinstance(points_raw, list) or len(points_raw) != POINT_COUNT:
        raise ValidationError(f"points must hold exactly {POINT_COUNT} pairs", "points")
    points = []
    for i, pair in enumerate(points_raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValidationError(f"points[{i}] must be an [x, y] pair", "points")
        points.append((_require_number(pair[0], f"points[{i}].x"),
                       _require_number(pair[1], f"points[{i}].y")))

    return LandmarkFrame(
        camera_id=camera_id,
        frame_seq=frame_seq,
        timestamp_ms=timestamp_ms,
        bbox=(ox, oy, w, h),
        points=tuple(points),
    )


def parse_landmark_record(line: str) -> LandmarkFrame:
    """Parse one NDJSON landmark record. Strict: unknown fields are rejected."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} at {exc.pos}") from exc
    return frame_from_dict(obj)


def frame_to_dict(frame: LandmarkFrame) -> dict[str, Any]:
    """Record object in canonical field order, numbers coerced to float."""
    return {
        "camera_id": frame.camera_id,
        "frame_seq": frame.frame_seq,
        "timestamp_ms": frame.timestamp_ms,
        "bbox": [float(v) for v in frame.bbox],
        "points": [[float(x), float(y)] for x, y in frame.points],
    }


def emit_landmark_record(frame: LandmarkFrame) -> str:
    """Canonical single-line encoding; numbers as shortest round-trip decimals."""
    return json.dumps(frame_to_dict(frame), separators=(",", ":"))
