"""Per-hand features: key points, finger extension flags, pointer classes.

Everything here is a pure function of a single HandObservation, computed
from 2D distance ratios only, so the results are invariant under uniform
scaling, rotation, and translation of the landmarks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from gesplayer import frames as fr
from gesplayer.errors import DegenerateHand

Point = tuple[float, float]

# Default extension thresholds (tunable through FsmConfig).
FINGER_EXTEND_RATIO = 1.10
THUMB_EXTEND_RATIO = 1.20

_COLLAPSE_EPS = 1e-6

# finger name -> (tip index, PIP index); thumb is measured against the
# middle MCP instead of the wrist, see finger_extended.
_FINGERS: dict[str, tuple[int, int]] = {
    "thumb": (fr.THUMB_TIP, fr.THUMB_IP),
    "index": (fr.INDEX_TIP, fr.INDEX_PIP),
    "middle": (fr.MIDDLE_TIP, fr.MIDDLE_PIP),
    "ring": (fr.RING_TIP, fr.RING_PIP),
    "pinky": (fr.PINKY_TIP, fr.PINKY_PIP),
}


@dataclass(frozen=True)
class KeyPoints:
    wrist: Point
    thumb_tip: Point
    index_tip: Point
    middle_tip: Point


@dataclass(frozen=True)
class FingerFlags:
    thumb: bool
    index: bool
    middle: bool
    ring: bool
    pinky: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool, bool]:
        return (self.thumb, self.index, self.middle, self.ring, self.pinky)


class PointerConfig(Enum):
    OPEN_PALM = "open_palm"
    SEEK_POINTER = "seek_pointer"
    VOLUME_POINTER = "volume_pointer"
    BRIGHTNESS_POINTER = "brightness_pointer"
    OTHER = "other"


def _point(hand: fr.HandObservation, index: int) -> Point:
    lm = hand.landmarks[index]
    return (lm.x, lm.y)


def _dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def extract_keypoints(hand: fr.HandObservation) -> KeyPoints:
    """Pick the 2D wrist, thumb tip, index tip, and middle tip."""
    return KeyPoints(
        wrist=_point(hand, fr.WRIST),
        thumb_tip=_point(hand, fr.THUMB_TIP),
        index_tip=_point(hand, fr.INDEX_TIP),
        middle_tip=_point(hand, fr.MIDDLE_TIP),
    )


def finger_extended(
    hand: fr.HandObservation,
    finger: str,
    finger_ratio: float = FINGER_EXTEND_RATIO,
    thumb_ratio: float = THUMB_EXTEND_RATIO,
) -> bool:
    """Distance-ratio extension test for one finger.

    index/middle/ring/pinky: extended iff dist(tip, wrist) is strictly
    greater than finger_ratio * dist(PIP, wrist).  The thumb has no useful
    wrist ratio, so it is measured against the middle MCP: extended iff
    dist(thumb tip, middle MCP) > thumb_ratio * dist(thumb IP, middle MCP).

    Raises DegenerateHand when the reference distance collapses below 1e-6.
    """
    try:
        tip_idx, pip_idx = _FINGERS[finger]
    except KeyError:
        raise ValueError(f"unknown finger {finger!r}") from None
    if finger == "thumb":
        anchor = _point(hand, fr.MIDDLE_MCP)
        ratio = thumb_ratio
    else:
        anchor = _point(hand, fr.WRIST)
        ratio = finger_ratio
    reference = _dist(_point(hand, pip_idx), anchor)
    if reference < _COLLAPSE_EPS:
        raise DegenerateHand(f"{finger} reference distance collapsed ({reference})")
    return _dist(_point(hand, tip_idx), anchor) > ratio * reference


def finger_flags(
    hand: fr.HandObservation,
    finger_ratio: float = FINGER_EXTEND_RATIO,
    thumb_ratio: float = THUMB_EXTEND_RATIO,
) -> FingerFlags:
    """Extension flags for all five fingers."""
    return FingerFlags(
        *(finger_extended(hand, name, finger_ratio, thumb_ratio) for name in _FINGERS)
    )


def classify_config(flags: FingerFlags) -> PointerConfig:
    """Total map from flag combinations to pointer configuration classes.

    Open palm is all five extended.  The three pointer classes fold ring
    and pinky and differ in thumb/middle:

        (F, T, F, F, F) -> seek pointer (index only, thumb hidden)
        (T, T, T, F, F) -> volume pointer (thumb + index + middle)
        (T, T, F, F, F) -> brightness pointer (thumb + index)

    Anything else is OTHER.
    """
    combo = flags.as_tuple()
    if combo == (True, True, True, True, True):
        return PointerConfig.OPEN_PALM
    if combo == (False, True, False, False, False):
        return PointerConfig.SEEK_POINTER
    if combo == (True, True, True, False, False):
        return PointerConfig.VOLUME_POINTER
    if combo == (True, True, False, False, False):
        return PointerConfig.BRIGHTNESS_POINTER
    return PointerConfig.OTHER
