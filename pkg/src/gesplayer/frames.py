"""Landmark frame data model, wire-format parsing, and stream ordering.

One wire record is a single line of JSON:

    {"t_ms": 1033, "hands": [{"handedness": "Left", "score": 0.97,
                              "landmarks": [[0.512, 0.631, 0.0], ...21 triples...]}]}

Field names and enum spellings are exact; unknown fields are ignored.
Coordinates are normalized image coordinates, x left-to-right and y
top-to-bottom; z is relative depth and unused by the 2D processing path.
Timestamps travel in the data and are never read from a wall clock, so a
frame stream always replays bit-identically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from enum import Enum

from gesplayer.errors import (
    MalformedRecord,
    NonMonotonicTimestamp,
    SchemaViolation,
    ValueOutOfRange,
)

LANDMARKS_PER_HAND = 21
MAX_HANDS = 2

# Landmark indices of the 21-point hand topology.
WRIST = 0
THUMB_IP = 3
THUMB_TIP = 4
INDEX_MCP = 5
INDEX_PIP = 6
INDEX_TIP = 8
MIDDLE_MCP = 9
MIDDLE_PIP = 10
MIDDLE_TIP = 12
RING_PIP = 14
RING_TIP = 16
PINKY_PIP = 18
PINKY_TIP = 20

# Trackers may overshoot the image border a little; beyond this is garbage.
COORD_MIN = -0.5
COORD_MAX = 1.5


class Handedness(Enum):
    LEFT = "Left"
    RIGHT = "Right"


@dataclass(frozen=True)
class Landmark:
    x: float
    y: float
    z: float = 0.0


@dataclass(frozen=True)
class HandObservation:
    handedness: Handedness
    score: float
    landmarks: tuple[Landmark, ...]


@dataclass(frozen=True)
class LandmarkFrame:
    t_ms: int
    hands: tuple[HandObservation, ...]


def _require_number(value: object, what: str) -> float:
    # bool is an int subclass; it is never a valid numeric field
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaViolation(f"{what} must be a number, got {type(value).__name__}")
    return float(value)


def _parse_landmark(raw: object, where: str) -> Landmark:
    if not isinstance(raw, list) or len(raw) != 3:
        raise SchemaViolation(f"{where} must be a 3-element [x, y, z] array")
    x = _require_number(raw[0], f"{where} x")
    y = _require_number(raw[1], f"{where} y")
    z = _require_number(raw[2], f"{where} z")
    if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
        raise ValueOutOfRange(f"{where} has non-finite coordinates")
    if not (COORD_MIN <= x <= COORD_MAX and COORD_MIN <= y <= COORD_MAX):
        raise ValueOutOfRange(
            f"{where} outside [{COORD_MIN}, {COORD_MAX}]: ({x}, {y})"
        )
    return Landmark(x, y, z)


def _parse_hand(raw: object, index: int) -> HandObservation:
    where = f"hands[{index}]"
    if not isinstance(raw, dict):
        raise SchemaViolation(f"{where} must be an object")
    try:
        handedness_raw = raw["handedness"]
        score_raw = raw["score"]
        landmarks_raw = raw["landmarks"]
    except KeyError as exc:
        raise SchemaViolation(f"{where} missing field {exc.args[0]!r}") from None
    try:
        handedness = Handedness(handedness_raw)
    except ValueError:
        raise SchemaViolation(
            f"{where} handedness must be 'Left' or 'Right', got {handedness_raw!r}"
        ) from None
    score = _require_number(score_raw, f"{where} score")
    if not math.isfinite(score) or not 0.0 <= score <= 1.0:
        raise ValueOutOfRange(f"{where} score outside [0, 1]: {score}")
    if not isinstance(landmarks_raw, list) or len(landmarks_raw) != LANDMARKS_PER_HAND:
        raise SchemaViolation(
            f"{where} must have exactly {LANDMARKS_PER_HAND} landmarks"
        )
    landmarks = tuple(
        _parse_landmark(lm, f"{where} landmark {i}") for i, lm in enumerate(landmarks_raw)
    )
    return HandObservation(handedness=handedness, score=score, landmarks=landmarks)


def parse_frame(line: bytes | str) -> LandmarkFrame:
    """Parse one wire record into a structurally valid frame.

    Never aborts: any input either yields a frame or raises one of
    MalformedRecord, SchemaViolation, ValueOutOfRange.
    """
    if isinstance(line, (bytes, bytearray)):
        try:
            line = line.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedRecord(f"not UTF-8 text: {exc}") from None
    try:
        obj = json.loads(line)
    except (json.JSONDecodeError, RecursionError) as exc:
        raise MalformedRecord(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise SchemaViolation("record must be a JSON object")
    try:
        t_raw = obj["t_ms"]
        hands_raw = obj["hands"]
    except KeyError as exc:
        raise SchemaViolation(f"missing field {exc.args[0]!r}") from None
    if isinstance(t_raw, bool) or not isinstance(t_raw, int):
        raise SchemaViolation(f"t_ms must be an integer, got {t_raw!r}")
    if not isinstance(hands_raw, list):
        raise SchemaViolation("hands must be an array")
    if len(hands_raw) > MAX_HANDS:
        raise SchemaViolation(f"at most {MAX_HANDS} hands per frame, got {len(hands_raw)}")
    hands = tuple(_parse_hand(h, i) for i, h in enumerate(hands_raw))
    return LandmarkFrame(t_ms=t_raw, hands=hands)


def serialize_frame(frame: LandmarkFrame) -> str:
    """Render a frame as one wire line (inverse of parse_frame)."""
    return json.dumps(
        {
            "t_ms": frame.t_ms,
            "hands": [
                {
                    "handedness": hand.handedness.value,
                    "score": hand.score,
                    "landmarks": [[lm.x, lm.y, lm.z] for lm in hand.landmarks],
                }
                for hand in frame.hands
            ],
        }
    )


def validate_sequence(prev_t_ms: int | None, frame: LandmarkFrame) -> LandmarkFrame:
    """Enforce stream ordering and unique handedness labels.

    Rejects frames whose timestamp does not strictly advance.  When two
    observations share a handedness label, the higher-score one wins; ties
    go to the first occurrence.
    """
    if prev_t_ms is not None and frame.t_ms <= prev_t_ms:
        raise NonMonotonicTimestamp(
            f"t_ms {frame.t_ms} does not advance past {prev_t_ms}"
        )
    best: dict[Handedness, HandObservation] = {}
    for hand in frame.hands:
        kept = best.get(hand.handedness)
        if kept is None or hand.score > kept.score:
            best[hand.handedness] = hand
    if len(best) == len(frame.hands):
        return frame
    deduped = tuple(h for h in frame.hands if best.get(h.handedness) is h)
    return replace(frame, hands=deduped)
