import random

import pytest

from shopwatch.features import FEATURE_DIM, POINT_COUNT, FeatureVector, LandmarkFrame


def make_frame(rng: random.Random, camera_id: str = "cam1", frame_seq: int = 0,
               timestamp_ms: int = 0) -> LandmarkFrame:
    ox = rng.uniform(-500, 500)
    oy = rng.uniform(-500, 500)
    w = rng.uniform(10, 400)
    h = rng.uniform(10, 400)
    points = tuple(
        (ox + rng.uniform(-0.5, 1.5) * w, oy + rng.uniform(-0.5, 1.5) * h)
        for _ in range(POINT_COUNT)
    )
    return LandmarkFrame(camera_id=camera_id, frame_seq=frame_seq,
                         timestamp_ms=timestamp_ms, bbox=(ox, oy, w, h), points=points)


def make_vector(rng: random.Random, center: float = 0.5, spread: float = 0.3) -> FeatureVector:
    return FeatureVector(tuple(rng.gauss(center, spread) for _ in range(FEATURE_DIM)))


def padded_vector(*coords: float) -> FeatureVector:
    values = list(coords) + [0.0] * (FEATURE_DIM - len(coords))
    return FeatureVector(tuple(values))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
