"""Value smoothing, gesture events, wire commands, and the virtual player.

The command wire format is one JSON line per command:

    {"t_ms": 2040, "kind": "seek", "phase": "update", "value": 0.42}

and after each applied command the service emits a player snapshot:

    {"t_ms": 2040, "position": 0.42, "volume": 0.8, "brightness": 1.0, "playing": true}

Commands carry absolute values: the baseline segment defines an absolute
0..1 scale, so retransmitting a command is idempotent.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable

from gesplayer.errors import ValueOutOfRange

DEFAULT_SMOOTHING_TAU_MS = 100.0


class ControlKind(Enum):
    SEEK = "seek"
    VOLUME = "volume"
    BRIGHTNESS = "brightness"


class EventPhase(Enum):
    BEGIN = "begin"
    UPDATE = "update"
    END = "end"


@dataclass(frozen=True)
class GestureEvent:
    kind: ControlKind
    phase: EventPhase
    value: float
    t_ms: int


@dataclass(frozen=True)
class ControlCommand:
    t_ms: int
    kind: ControlKind
    phase: EventPhase
    value: float


@dataclass(frozen=True)
class PlayerModel:
    position: float = 0.0
    volume: float = 0.5
    brightness: float = 1.0
    playing: bool = True


@dataclass(frozen=True)
class Smoother:
    """Exponential moving average with a time constant instead of a fixed
    per-frame weight, so smoothing strength is frame-rate independent."""

    tau_ms: float = DEFAULT_SMOOTHING_TAU_MS
    last_value: float | None = None

    def reset(self) -> "Smoother":
        return Smoother(tau_ms=self.tau_ms)


def smooth(s: Smoother, raw: float, dt_ms: float) -> tuple[Smoother, float]:
    """Advance the smoother by one sample.

    Per-frame weight alpha = 1 - exp(-dt_ms / tau); the first sample after
    a reset passes through unchanged.  Output stays inside [0, 1] whenever
    inputs do (convex combination).
    """
    if s.last_value is None:
        out = raw
    else:
        if dt_ms <= 0:
            raise ValueError("dt_ms must be positive")
        alpha = 1.0 - math.exp(-dt_ms / s.tau_ms)
        out = s.last_value + alpha * (raw - s.last_value)
    return replace(s, last_value=out), out


def events_to_commands(events: Iterable[GestureEvent]) -> list[ControlCommand]:
    """1:1 order-preserving mapping from gesture events to wire commands."""
    return [
        ControlCommand(t_ms=e.t_ms, kind=e.kind, phase=e.phase, value=e.value)
        for e in events
    ]


def apply_command(player: PlayerModel, cmd: ControlCommand) -> PlayerModel:
    """Write the command value into its one player field.

    The phase never alters the write: begin, update, and end all carry
    authoritative absolute values.
    """
    if not 0.0 <= cmd.value <= 1.0:
        raise ValueOutOfRange(f"command value outside [0, 1]: {cmd.value}")
    if cmd.kind is ControlKind.SEEK:
        return replace(player, position=cmd.value)
    if cmd.kind is ControlKind.VOLUME:
        return replace(player, volume=cmd.value)
    return replace(player, brightness=cmd.value)


def command_to_wire(cmd: ControlCommand) -> str:
    return json.dumps(
        {
            "t_ms": cmd.t_ms,
            "kind": cmd.kind.value,
            "phase": cmd.phase.value,
            "value": cmd.value,
        }
    )


def snapshot_to_wire(t_ms: int, player: PlayerModel) -> str:
    return json.dumps(
        {
            "t_ms": t_ms,
            "position": player.position,
            "volume": player.volume,
            "brightness": player.brightness,
            "playing": player.playing,
        }
    )
