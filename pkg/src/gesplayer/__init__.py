"""Tracker-agnostic gesture engine turning 21-point hand-landmark streams
into video player commands (seek, volume, brightness)."""

from gesplayer.config import FsmConfig, load_config
from gesplayer.control import (
    ControlCommand,
    ControlKind,
    EventPhase,
    GestureEvent,
    PlayerModel,
    Smoother,
)
from gesplayer.frames import (
    HandObservation,
    Handedness,
    Landmark,
    LandmarkFrame,
    parse_frame,
    serialize_frame,
    validate_sequence,
)
from gesplayer.fsm import GestureState, step
from gesplayer.pipeline import Session, replay
from gesplayer.scenarios import SCENARIO_NAMES, Scenario, generate_trace

__all__ = [
    "ControlCommand",
    "ControlKind",
    "EventPhase",
    "FsmConfig",
    "GestureEvent",
    "GestureState",
    "HandObservation",
    "Handedness",
    "Landmark",
    "LandmarkFrame",
    "PlayerModel",
    "SCENARIO_NAMES",
    "Scenario",
    "Session",
    "Smoother",
    "generate_trace",
    "load_config",
    "parse_frame",
    "replay",
    "serialize_frame",
    "step",
    "validate_sequence",
]

__version__ = "0.1.0"
