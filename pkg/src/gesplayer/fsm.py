"""Trigger -> baseline -> interaction gesture state machine.

The machine consumes validated landmark frames one at a time and emits
gesture events whose values are smoothed, clamped bar positions.  Roles
are fixed: the left hand is the bar, the right hand is the pointer.

Per-frame rules, in evaluation order:

  * Idle -> Armed once the left hand has held an open palm continuously
    for trigger_hold_ms, measured purely from frame timestamps.
  * While armed, the wrist-to-middle-fingertip segment is recomputed from
    every frame (the bar tracks the hand live).
  * Armed -> Engaged(seek) when a right seek pointer touches the bar
    (projection distance below touch_begin_ratio * length); the touch
    releases through hysteresis at touch_release_ratio * length.
  * Armed -> Engaged(volume|brightness) when the matching right-hand
    configuration holds its fingertip within engage_max_dist_ratio of the
    bar; it ends when the configuration or gate is lost for longer than
    dropout_grace_ms.
  * Any state falls back to Idle when the left hand (or a valid segment)
    is gone for longer than dropout_grace_ms; an engaged gesture emits a
    final End carrying the last smoothed value first.

All thresholds are proportional to the segment length, never absolute, so
the whole pipeline is invariant under similarity transforms of the
landmarks.  step() is a pure function of (state, frame, config): replaying
a frame sequence reproduces the event sequence exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from gesplayer import features
from gesplayer import frames as fr
from gesplayer import geometry
from gesplayer.config import FsmConfig
from gesplayer.control import ControlKind, EventPhase, GestureEvent, Smoother, smooth
from gesplayer.errors import DegenerateHand, SegmentTooShort


class Phase(Enum):
    IDLE = "idle"
    ARMED = "armed"
    ENGAGED = "engaged"


class Touch(Enum):
    OUT = "out"
    IN = "in"


_POINTER_KINDS = {
    features.PointerConfig.SEEK_POINTER: ControlKind.SEEK,
    features.PointerConfig.VOLUME_POINTER: ControlKind.VOLUME,
    features.PointerConfig.BRIGHTNESS_POINTER: ControlKind.BRIGHTNESS,
}


@dataclass(frozen=True)
class GestureState:
    phase: Phase = Phase.IDLE
    engaged_kind: ControlKind | None = None
    armed_since_ms: int | None = None
    last_left_seen_ms: int | None = None
    last_right_seen_ms: int | None = None
    # start of the current uninterrupted left open-palm run, and how long
    # it has lasted so far (both reset by any break in the pose)
    palm_since_ms: int | None = None
    hold_accum_ms: int = 0
    touch: Touch = Touch.OUT
    # last frame on which the active engagement condition fully held
    engage_ok_ms: int | None = None
    smoother: Smoother = field(default_factory=Smoother)
    last_frame_t_ms: int | None = None


def touch_hysteresis(
    dist: float, seg_len: float, prev: Touch, cfg: FsmConfig
) -> Touch:
    """Two-threshold touch state: enter below touch_begin_ratio * length,
    leave above touch_release_ratio * length, hold in between."""
    if prev is Touch.OUT:
        return Touch.IN if dist < cfg.touch_begin_ratio * seg_len else Touch.OUT
    return Touch.OUT if dist > cfg.touch_release_ratio * seg_len else Touch.IN


def _hand(frame: fr.LandmarkFrame, side: fr.Handedness) -> fr.HandObservation | None:
    for hand in frame.hands:
        if hand.handedness is side:
            return hand
    return None


def _flags(hand: fr.HandObservation, cfg: FsmConfig) -> features.FingerFlags | None:
    try:
        return features.finger_flags(
            hand, cfg.finger_extend_ratio, cfg.thumb_extend_ratio
        )
    except DegenerateHand:
        return None


def _segment(
    hand: fr.HandObservation, cfg: FsmConfig
) -> geometry.BaselineSegment | None:
    kp = features.extract_keypoints(hand)
    try:
        return geometry.make_segment(kp.wrist, kp.middle_tip, cfg.min_segment_len)
    except SegmentTooShort:
        return None


def _pointer_point(
    hand: fr.HandObservation, kind: ControlKind, cfg: FsmConfig
) -> tuple[float, float]:
    kp = features.extract_keypoints(hand)
    if kind is ControlKind.VOLUME and cfg.volume_pointer == "middle":
        return kp.middle_tip
    return kp.index_tip


def step(
    state: GestureState, frame: fr.LandmarkFrame, cfg: FsmConfig
) -> tuple[GestureState, list[GestureEvent]]:
    """Advance the machine by one accepted frame."""
    t = frame.t_ms
    events: list[GestureEvent] = []

    left = _hand(frame, fr.Handedness.LEFT)
    right = _hand(frame, fr.Handedness.RIGHT)
    seg = _segment(left, cfg) if left is not None else None
    left_ok = seg is not None

    last_left_seen = t if left_ok else state.last_left_seen_ms
    last_right_seen = t if right is not None else state.last_right_seen_ms

    left_flags = _flags(left, cfg) if left is not None else None
    left_palm = (
        left_ok
        and left_flags is not None
        and features.classify_config(left_flags) is features.PointerConfig.OPEN_PALM
    )
    if left_palm:
        palm_since = state.palm_since_ms if state.palm_since_ms is not None else t
        hold_accum = t - palm_since
    else:
        palm_since = None
        hold_accum = 0

    right_config: features.PointerConfig | None = None
    if right is not None:
        right_flags = _flags(right, cfg)
        if right_flags is not None:
            right_config = features.classify_config(right_flags)

    left_lost = not left_ok and (
        last_left_seen is None or t - last_left_seen > cfg.dropout_grace_ms
    )

    next_state = replace(
        state,
        last_left_seen_ms=last_left_seen,
        last_right_seen_ms=last_right_seen,
        palm_since_ms=palm_since,
        hold_accum_ms=hold_accum,
        last_frame_t_ms=t,
    )

    if state.phase is Phase.IDLE:
        if left_palm and hold_accum >= cfg.trigger_hold_ms:
            next_state = replace(
                next_state,
                phase=Phase.ARMED,
                armed_since_ms=t,
                palm_since_ms=None,
                hold_accum_ms=0,
            )
        return next_state, events

    if state.phase is Phase.ARMED:
        if left_lost:
            return _to_idle(next_state), events
        kind = _POINTER_KINDS.get(right_config) if right_config is not None else None
        if not left_ok or right is None or kind is None:
            return next_state, events
        proj = geometry.project_clamped(_pointer_point(right, kind, cfg), seg)
        if kind is ControlKind.SEEK:
            if touch_hysteresis(proj.dist, seg.length, Touch.OUT, cfg) is Touch.OUT:
                return next_state, events
        elif not proj.dist < cfg.engage_max_dist_ratio * seg.length:
            return next_state, events
        smoother, value = smooth(state.smoother.reset(), proj.t, 0.0)
        events.append(GestureEvent(kind, EventPhase.BEGIN, value, t))
        events.append(GestureEvent(kind, EventPhase.UPDATE, value, t))
        next_state = replace(
            next_state,
            phase=Phase.ENGAGED,
            engaged_kind=kind,
            touch=Touch.IN if kind is ControlKind.SEEK else Touch.OUT,
            engage_ok_ms=t,
            smoother=smoother,
        )
        return next_state, events

    # Engaged: the left-hand dropout rule outranks everything else.
    kind = state.engaged_kind
    assert kind is not None and state.engage_ok_ms is not None
    if left_lost:
        events.append(_end_event(state, kind, t))
        return _to_idle(next_state), events

    condition_ok = (
        left_ok
        and right is not None
        and _POINTER_KINDS.get(right_config) is kind
    )
    proj = (
        geometry.project_clamped(_pointer_point(right, kind, cfg), seg)
        if condition_ok
        else None
    )
    if condition_ok and kind is not ControlKind.SEEK:
        condition_ok = proj.dist <= cfg.engage_max_dist_ratio * seg.length

    if condition_ok:
        if kind is ControlKind.SEEK:
            touch = touch_hysteresis(proj.dist, seg.length, state.touch, cfg)
            if touch is Touch.OUT:
                # untouching finishes the adjustment
                events.append(_end_event(state, kind, t))
                return _to_armed(next_state), events
        # engage_ok_ms is the last smoothed sample, so dt spans coast gaps
        smoother, value = smooth(state.smoother, proj.t, t - state.engage_ok_ms)
        events.append(GestureEvent(kind, EventPhase.UPDATE, value, t))
        next_state = replace(next_state, engage_ok_ms=t, smoother=smoother)
        return next_state, events

    # pointer configuration, gate, or tracking lost: coast within the grace
    if t - state.engage_ok_ms > cfg.dropout_grace_ms:
        events.append(_end_event(state, kind, t))
        return _to_armed(next_state), events
    return next_state, events


def _end_event(state: GestureState, kind: ControlKind, t: int) -> GestureEvent:
    assert state.smoother.last_value is not None
    return GestureEvent(kind, EventPhase.END, state.smoother.last_value, t)


def _to_armed(state: GestureState) -> GestureState:
    return replace(
        state,
        phase=Phase.ARMED,
        engaged_kind=None,
        touch=Touch.OUT,
        engage_ok_ms=None,
    )


def _to_idle(state: GestureState) -> GestureState:
    return replace(
        state,
        phase=Phase.IDLE,
        engaged_kind=None,
        armed_since_ms=None,
        touch=Touch.OUT,
        engage_ok_ms=None,
        palm_since_ms=None,
        hold_accum_ms=0,
        smoother=state.smoother.reset(),
    )
