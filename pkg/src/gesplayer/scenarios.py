"""Deterministic synthetic trace generator.

Each scenario renders a frame stream in the wire format from a handful of
parameters and a seed.  Traces are meant to be portable across
implementations, so randomness is fully pinned down:

  * PRNG: SplitMix64 (the 64-bit mixing generator with increment
    0x9E3779B97F4A7C15), seeded directly with the scenario seed.
  * Uniform doubles take the top 53 bits of one output word.
  * Gaussians use the Marsaglia polar method with the usual rejection
    loop; the second value of each pair is cached and consumed next.
  * Draw order: frames in time order; within a frame, hands in emitted
    order (left before right); within a hand, landmarks 0..20; within a
    landmark, x then y then z.  Noise draws happen only when
    noise_sigma > 0.

Synthetic hands place each finger chain on a ray from the wrist, with tip
distances chosen far from the extension thresholds so that flags survive
the noise levels the scenarios use.  The landmarks that define control
geometry (bar endpoints, pointer fingertip) are written exactly, so
noiseless traces hit bar values exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Iterator

from gesplayer import frames as fr
from gesplayer.errors import InvalidScenario

SCENARIO_NAMES = (
    "seek-sweep",
    "volume-set",
    "brightness-set",
    "idle-noise",
    "false-trigger",
    "hysteresis-oscillation",
)

# Fixed stage layout for the interactive scenarios: the left palm arms the
# trigger alone first, and every trace ends with empty frames long enough
# to outlast the dropout grace so engaged gestures end in-band.
ARM_MS = 400
TAIL_MS = 300

# Left-hand bar used by all interactive scenarios: horizontal, length 0.4.
BAR_ORIGIN = (0.3, 0.6)
BAR_TIP = (0.7, 0.6)

LEFT_SCORE = 0.98
RIGHT_SCORE = 0.97

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 PRNG plus a polar-method Gaussian source."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64
        self._cached_gauss: float | None = None

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform in [0, 1) with 53-bit resolution."""
        return (self.next_u64() >> 11) * 2.0**-53

    def gauss(self) -> float:
        if self._cached_gauss is not None:
            value, self._cached_gauss = self._cached_gauss, None
            return value
        while True:
            u = 2.0 * self.uniform() - 1.0
            v = 2.0 * self.uniform() - 1.0
            s = u * u + v * v
            if 0.0 < s < 1.0:
                break
        m = math.sqrt(-2.0 * math.log(s) / s)
        self._cached_gauss = v * m
        return u * m


@dataclass(frozen=True)
class Scenario:
    name: str
    duration_ms: int = 2000
    fps: float = 30.0
    noise_sigma: float = 0.0
    seed: int = 0
    # seek-sweep pointer path endpoints, as bar fractions
    sweep_from: float = 0.0
    sweep_to: float = 1.0
    # bar fraction held by volume-set / brightness-set
    level: float = 0.75

    def __post_init__(self) -> None:
        if self.name not in SCENARIO_NAMES:
            raise InvalidScenario(
                f"unknown scenario {self.name!r}; expected one of {SCENARIO_NAMES}"
            )
        if self.fps <= 0:
            raise ValueError("fps must be positive")
        if self.duration_ms <= 0:
            raise ValueError("duration_ms must be positive")
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be >= 0")


Point = tuple[float, float]

# Per-finger ray angles relative to the hand axis, degrees.  Tip distance
# factors sit at ratio 2.0 (extended) or 0.5 (folded) against the PIP at
# 0.6 * size, comfortably clear of the 1.10 threshold.
_FINGER_ANGLES = {"index": -20.0, "middle": 0.0, "ring": 20.0, "pinky": 40.0}
_FINGER_CHAINS = {
    "index": (fr.INDEX_MCP, fr.INDEX_PIP, 7, fr.INDEX_TIP),
    "middle": (fr.MIDDLE_MCP, fr.MIDDLE_PIP, 11, fr.MIDDLE_TIP),
    "ring": (13, fr.RING_PIP, 15, fr.RING_TIP),
    "pinky": (17, fr.PINKY_PIP, 19, fr.PINKY_TIP),
}
_THUMB_ANGLE = -55.0
_TIP_FACTOR_EXTENDED = 1.2  # of hand size; PIP sits at 0.6 -> ratio 2.0
_TIP_FACTOR_FOLDED = 0.3  # ratio 0.5
_THUMB_TIP_EXTENDED = 1.0
_THUMB_TIP_FOLDED = 0.35


def _rotate(v: Point, degrees: float) -> Point:
    rad = math.radians(degrees)
    c, s = math.cos(rad), math.sin(rad)
    return (v[0] * c - v[1] * s, v[0] * s + v[1] * c)


def build_hand(
    wrist: Point,
    axis: Point,
    size: float,
    extended: dict[str, bool],
    overrides: dict[int, Point] | None = None,
) -> list[Point]:
    """Lay out 21 2D landmarks for a synthetic hand.

    axis is the unit direction from the wrist toward the middle finger;
    overrides pin specific landmark indices to exact coordinates.
    """
    pts: list[Point] = [(0.0, 0.0)] * fr.LANDMARKS_PER_HAND
    pts[fr.WRIST] = wrist

    def along(direction: Point, factor: float) -> Point:
        return (
            wrist[0] + direction[0] * size * factor,
            wrist[1] + direction[1] * size * factor,
        )

    thumb_dir = _rotate(axis, _THUMB_ANGLE)
    thumb_tip = _THUMB_TIP_EXTENDED if extended["thumb"] else _THUMB_TIP_FOLDED
    for idx, factor in zip((1, 2, 3), (0.25, 0.45, 0.6)):
        pts[idx] = along(thumb_dir, factor)
    pts[fr.THUMB_TIP] = along(thumb_dir, thumb_tip)

    for name, (mcp, pip, dip, tip) in _FINGER_CHAINS.items():
        direction = _rotate(axis, _FINGER_ANGLES[name])
        tip_factor = _TIP_FACTOR_EXTENDED if extended[name] else _TIP_FACTOR_FOLDED
        pts[mcp] = along(direction, 0.45)
        pts[pip] = along(direction, 0.6)
        pts[dip] = along(direction, (0.6 + tip_factor) / 2.0)
        pts[tip] = along(direction, tip_factor)

    if overrides:
        for idx, point in overrides.items():
            pts[idx] = point
    return pts


_OPEN_PALM = {"thumb": True, "index": True, "middle": True, "ring": True, "pinky": True}
_SEEK_HAND = {"thumb": False, "index": True, "middle": False, "ring": False, "pinky": False}
_VOLUME_HAND = {"thumb": True, "index": True, "middle": True, "ring": False, "pinky": False}
_BRIGHTNESS_HAND = {"thumb": True, "index": True, "middle": False, "ring": False, "pinky": False}
_OTHER_HAND = {"thumb": False, "index": True, "middle": True, "ring": False, "pinky": False}

_HAND_SIZE = 1.0 / 3.0  # middle tip at 1.2 * size = 0.4 from the wrist


def _left_bar_hand() -> list[Point]:
    # middle tip pinned exactly to the bar tip: the sweep target must
    # project to exactly 1.0 on noiseless traces
    return build_hand(
        BAR_ORIGIN, (1.0, 0.0), _HAND_SIZE, _OPEN_PALM, {fr.MIDDLE_TIP: BAR_TIP}
    )


def _right_pointer_hand(pose: dict[str, bool], tip_index: int, tip: Point) -> list[Point]:
    # hang the hand below its pinned fingertip, fingers pointing up
    wrist = (tip[0], tip[1] + 1.2 * _HAND_SIZE)
    return build_hand(wrist, (0.0, -1.0), _HAND_SIZE, pose, {tip_index: tip})


def bar_point(t: float) -> Point:
    """Point at bar fraction t (may extend past the tip for t > 1)."""
    return (
        BAR_ORIGIN[0] + t * (BAR_TIP[0] - BAR_ORIGIN[0]),
        BAR_ORIGIN[1] + t * (BAR_TIP[1] - BAR_ORIGIN[1]),
    )


def _hand_record(
    handedness: str, score: float, pts: list[Point], sigma: float, rng: SplitMix64
) -> dict:
    landmarks = []
    for x, y in pts:
        z = 0.0
        if sigma > 0.0:
            x += sigma * rng.gauss()
            y += sigma * rng.gauss()
            z += sigma * rng.gauss()
        landmarks.append([x, y, z])
    return {"handedness": handedness, "score": score, "landmarks": landmarks}


_BAR_LEN = 0.4

# Pointer overshoot past the bar tip on noisy sweeps, in noise units: with
# the unclamped target this far beyond 1.0, clamping pins nearly every raw
# sample at exactly 1.0, so the smoothed tail converges to the endpoint.
_SWEEP_OVERSHOOT_SIGMAS = 8.0


def _seek_sweep_path(s: Scenario) -> Callable[[int], float | None]:
    sweep_start = ARM_MS
    active_end = s.duration_ms - TAIL_MS
    sweep_end = sweep_start + 0.6 * (active_end - sweep_start)
    target = s.sweep_to
    if s.noise_sigma > 0.0 and s.sweep_from != s.sweep_to:
        if s.sweep_to == 1.0:
            target += _SWEEP_OVERSHOOT_SIGMAS * s.noise_sigma / _BAR_LEN
        elif s.sweep_to == 0.0:
            target -= _SWEEP_OVERSHOOT_SIGMAS * s.noise_sigma / _BAR_LEN

    def path(t: int) -> float | None:
        if t < sweep_start or t >= active_end:
            return None
        if t >= sweep_end:
            return target
        u = (t - sweep_start) / (sweep_end - sweep_start)
        return s.sweep_from + u * (target - s.sweep_from)

    return path


def _frame_times(s: Scenario) -> list[int]:
    count = round(s.duration_ms * s.fps / 1000.0)
    return [round(k * 1000.0 / s.fps) for k in range(count)]


def _gen_pointer_scenario(
    s: Scenario, pose: dict[str, bool], tip_index: int, pointer_at: Callable[[int], Point | None]
) -> Iterator[dict]:
    rng = SplitMix64(s.seed)
    active_end = s.duration_ms - TAIL_MS
    for t in _frame_times(s):
        hands = []
        if t < active_end:
            hands.append(
                _hand_record("Left", LEFT_SCORE, _left_bar_hand(), s.noise_sigma, rng)
            )
            tip = pointer_at(t)
            if tip is not None:
                hands.append(
                    _hand_record(
                        "Right",
                        RIGHT_SCORE,
                        _right_pointer_hand(pose, tip_index, tip),
                        s.noise_sigma,
                        rng,
                    )
                )
        yield {"t_ms": t, "hands": hands}


def _gen_seek_sweep(s: Scenario) -> Iterator[dict]:
    path = _seek_sweep_path(s)

    def pointer_at(t: int) -> Point | None:
        value = path(t)
        return None if value is None else bar_point(value)

    return _gen_pointer_scenario(s, _SEEK_HAND, fr.INDEX_TIP, pointer_at)


def _gen_level_hold(s: Scenario, pose: dict[str, bool], tip_index: int) -> Iterator[dict]:
    def pointer_at(t: int) -> Point | None:
        return bar_point(s.level) if t >= ARM_MS else None

    return _gen_pointer_scenario(s, pose, tip_index, pointer_at)


def _gen_volume_set(s: Scenario) -> Iterator[dict]:
    return _gen_level_hold(s, _VOLUME_HAND, fr.MIDDLE_TIP)


def _gen_brightness_set(s: Scenario) -> Iterator[dict]:
    return _gen_level_hold(s, _BRIGHTNESS_HAND, fr.INDEX_TIP)


def _gen_hysteresis_oscillation(s: Scenario) -> Iterator[dict]:
    # one dip well below the touch threshold, then a 2 Hz oscillation held
    # strictly inside the (begin, release) band at ratios 0.08 / 0.16
    dip_end = ARM_MS + 300
    begin_dist = 0.2 * 0.08 * _BAR_LEN
    band_mid = 0.12 * _BAR_LEN
    band_amp = 0.03 * _BAR_LEN

    def pointer_at(t: int) -> Point | None:
        if t < ARM_MS:
            return None
        if t < dip_end:
            d = begin_dist
        else:
            d = band_mid + band_amp * math.sin(2.0 * math.pi * 2.0 * (t - dip_end) / 1000.0)
        x, y = bar_point(0.5)
        return (x, y - d)

    return _gen_pointer_scenario(s, _SEEK_HAND, fr.INDEX_TIP, pointer_at)


def _gen_idle_noise(s: Scenario) -> Iterator[dict]:
    # both hands visible but never a left open palm, wandering slowly
    rng = SplitMix64(s.seed)
    for t in _frame_times(s):
        drift = 0.04 * math.sin(2.0 * math.pi * t / 3000.0)
        left = build_hand((0.3 + drift, 0.6), (1.0, 0.0), _HAND_SIZE, _SEEK_HAND)
        right = build_hand((0.7, 0.7 - drift), (0.0, -1.0), _HAND_SIZE, _OTHER_HAND)
        yield {
            "t_ms": t,
            "hands": [
                _hand_record("Left", LEFT_SCORE, left, s.noise_sigma, rng),
                _hand_record("Right", RIGHT_SCORE, right, s.noise_sigma, rng),
            ],
        }


def _gen_false_trigger(s: Scenario) -> Iterator[dict]:
    # the trigger pose on the wrong hand: a right open palm, no left hand
    rng = SplitMix64(s.seed)
    for t in _frame_times(s):
        drift = 0.03 * math.sin(2.0 * math.pi * t / 2500.0)
        right = build_hand((0.5 + drift, 0.8), (0.0, -1.0), _HAND_SIZE, _OPEN_PALM)
        yield {
            "t_ms": t,
            "hands": [_hand_record("Right", RIGHT_SCORE, right, s.noise_sigma, rng)],
        }


_GENERATORS: dict[str, Callable[[Scenario], Iterator[dict]]] = {
    "seek-sweep": _gen_seek_sweep,
    "volume-set": _gen_volume_set,
    "brightness-set": _gen_brightness_set,
    "idle-noise": _gen_idle_noise,
    "false-trigger": _gen_false_trigger,
    "hysteresis-oscillation": _gen_hysteresis_oscillation,
}


def generate_trace(scenario: Scenario) -> Iterator[str]:
    """Yield wire-format frame lines, a deterministic function of the
    scenario parameters and seed."""
    try:
        gen = _GENERATORS[scenario.name]
    except KeyError:
        raise InvalidScenario(f"unknown scenario {scenario.name!r}") from None
    for record in gen(scenario):
        yield json.dumps(record)


def trace_text(scenario: Scenario) -> str:
    """Whole trace as newline-terminated text."""
    lines = list(generate_trace(scenario))
    return "\n".join(lines) + ("\n" if lines else "")
