"""Directed baseline segment and clamped point projection.

The left hand's wrist-to-middle-fingertip segment acts as an on-body bar:
its origin is value 0, its tip is value 1, and a pointer's control value
is the clamped parameter of its orthogonal projection onto the segment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from gesplayer.errors import SegmentTooShort

Point = tuple[float, float]

# Below this length, value quantization from landmark jitter exceeds ~10%.
DEFAULT_MIN_SEGMENT_LEN = 0.05


@dataclass(frozen=True)
class BaselineSegment:
    origin: Point
    tip: Point
    length: float


@dataclass(frozen=True)
class Projection:
    t: float
    dist: float


def make_segment(
    origin: Point, tip: Point, min_segment_len: float = DEFAULT_MIN_SEGMENT_LEN
) -> BaselineSegment:
    """Build the directed bar segment; length below the minimum is rejected
    (happens when the left hand is edge-on or its landmarks collapse)."""
    length = math.hypot(tip[0] - origin[0], tip[1] - origin[1])
    if length < min_segment_len:
        raise SegmentTooShort(f"segment length {length} < {min_segment_len}")
    return BaselineSegment(origin=origin, tip=tip, length=length)


def project_clamped(p: Point, seg: BaselineSegment) -> Projection:
    """Closest point of the segment to p, as (clamped parameter, distance).

    t = clamp(dot(p - origin, tip - origin) / length^2, 0, 1); dist is the
    Euclidean distance from p to origin + t * (tip - origin).
    """
    dx = seg.tip[0] - seg.origin[0]
    dy = seg.tip[1] - seg.origin[1]
    px = p[0] - seg.origin[0]
    py = p[1] - seg.origin[1]
    t = (px * dx + py * dy) / (seg.length * seg.length)
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    cx = seg.origin[0] + t * dx
    cy = seg.origin[1] + t * dy
    dist = math.hypot(p[0] - cx, p[1] - cy)
    return Projection(t=t, dist=dist)
