"""Per-session pipeline: parse -> validate -> step -> smooth -> commands.

A Session owns one gesture state, one smoother, and one virtual player,
and must consume its frames sequentially.  Distinct sessions share
nothing and can run concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterable

from gesplayer import frames as fr
from gesplayer.config import FsmConfig
from gesplayer.control import (
    ControlCommand,
    EventPhase,
    GestureEvent,
    PlayerModel,
    Smoother,
    apply_command,
    command_to_wire,
    events_to_commands,
    snapshot_to_wire,
)
from gesplayer.errors import GesplayerError
from gesplayer.fsm import GestureState, Phase, step


@dataclass(frozen=True)
class Diagnostic:
    error: str
    line: int

    def to_wire(self) -> str:
        return json.dumps({"error": self.error, "line": self.line})


@dataclass
class StepOutput:
    commands: list[ControlCommand] = field(default_factory=list)
    snapshots: list[tuple[int, PlayerModel]] = field(default_factory=list)
    diagnostic: Diagnostic | None = None

    def wire_records(self) -> list[str]:
        """Outbound records for a streaming connection: each command is
        followed by the snapshot it produced; diagnostics stand alone."""
        if self.diagnostic is not None:
            return [self.diagnostic.to_wire()]
        records = []
        for cmd, (t_ms, player) in zip(self.commands, self.snapshots):
            records.append(command_to_wire(cmd))
            records.append(snapshot_to_wire(t_ms, player))
        return records


class Session:
    """One independent pipeline instance bound to one stream of frames."""

    def __init__(
        self,
        cfg: FsmConfig | None = None,
        player: PlayerModel | None = None,
        session_id: str = "session",
    ) -> None:
        self.id = session_id
        self.cfg = cfg if cfg is not None else FsmConfig()
        self.player = player if player is not None else PlayerModel()
        self.state = GestureState(smoother=Smoother(tau_ms=self.cfg.smoothing_tau_ms))
        self.last_t_ms: int | None = None
        self.line_no = 0

    def process_line(self, line: bytes | str) -> StepOutput:
        """Run one wire line through the pipeline.

        Malformed or out-of-order lines are reported as a diagnostic and
        skipped; the session state is untouched.  Blank lines count for
        line numbering but produce nothing.
        """
        self.line_no += 1
        text = line.decode("utf-8", errors="replace") if isinstance(line, (bytes, bytearray)) else line
        if not text.strip():
            return StepOutput()
        try:
            frame = fr.parse_frame(line)
            frame = fr.validate_sequence(self.last_t_ms, frame)
        except GesplayerError as exc:
            return StepOutput(diagnostic=Diagnostic(type(exc).__name__, self.line_no))
        self.last_t_ms = frame.t_ms
        self.state, events = step(self.state, frame, self.cfg)
        return self._apply_events(events)

    def finalize(self) -> StepOutput:
        """Close the session: a still-engaged gesture ends with its last
        smoothed value at the last accepted timestamp."""
        if self.state.phase is not Phase.ENGAGED:
            return StepOutput()
        assert self.state.engaged_kind is not None
        assert self.state.smoother.last_value is not None
        assert self.state.last_frame_t_ms is not None
        end = GestureEvent(
            kind=self.state.engaged_kind,
            phase=EventPhase.END,
            value=self.state.smoother.last_value,
            t_ms=self.state.last_frame_t_ms,
        )
        out = self._apply_events([end])
        self.state = GestureState(smoother=self.state.smoother.reset())
        return out

    def _apply_events(self, events: list[GestureEvent]) -> StepOutput:
        out = StepOutput(commands=events_to_commands(events))
        for cmd in out.commands:
            self.player = apply_command(self.player, cmd)
            out.snapshots.append((cmd.t_ms, self.player))
        return out


def replay(
    trace: Iterable[bytes | str],
    cfg: FsmConfig | None = None,
    diagnostics: IO[str] | None = None,
) -> tuple[list[str], PlayerModel]:
    """Run a frame stream offline and return (command log, final player).

    The log is the list of command wire lines, byte-deterministic for a
    given (trace, cfg).  Malformed lines go to the diagnostics stream with
    their line numbers and are skipped; they never abort the run.
    """
    session = Session(cfg)
    log: list[str] = []
    for line in trace:
        out = session.process_line(line)
        if out.diagnostic is not None and diagnostics is not None:
            diagnostics.write(out.diagnostic.to_wire() + "\n")
        log.extend(command_to_wire(cmd) for cmd in out.commands)
    log.extend(command_to_wire(cmd) for cmd in session.finalize().commands)
    return log, session.player
