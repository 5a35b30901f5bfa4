// Pure UI state: the engine is the single source of truth, so this module
// only folds inbound records into what the page should show.

import {
  CommandRecord,
  EngineRecord,
  SnapshotRecord,
  isCommand,
  isSnapshot,
} from "./protocol.js";

export const OVERLAY_FADE_MS = 500;

export type ConnectionStatus = "connecting" | "open" | "closed";

export interface ActiveGesture {
  kind: CommandRecord["kind"];
  value: number;
  /** wall-clock receive time of the End command, null while engaged */
  endedAtMs: number | null;
}

export interface UiState {
  connection: ConnectionStatus;
  snapshot: SnapshotRecord | null;
  gesture: ActiveGesture | null;
}

export function initialState(): UiState {
  return { connection: "connecting", snapshot: null, gesture: null };
}

export function setConnection(state: UiState, connection: ConnectionStatus): UiState {
  return { ...state, connection };
}

/** Fold one inbound record; nowMs is the receive time used for fade-out. */
export function applyRecord(state: UiState, record: EngineRecord, nowMs: number): UiState {
  if (isSnapshot(record)) {
    return { ...state, snapshot: record };
  }
  if (isCommand(record)) {
    if (record.phase === "end") {
      const gesture: ActiveGesture = {
        kind: record.kind,
        value: record.value,
        endedAtMs: nowMs,
      };
      return { ...state, gesture };
    }
    return {
      ...state,
      gesture: { kind: record.kind, value: record.value, endedAtMs: null },
    };
  }
  return state; // diagnostics change nothing visible
}

/** Bar overlay opacity: solid while engaged, fading for 500 ms after End. */
export function overlayOpacity(state: UiState, nowMs: number): number {
  const g = state.gesture;
  if (g === null) return 0;
  if (g.endedAtMs === null) return 1;
  const elapsed = nowMs - g.endedAtMs;
  if (elapsed >= OVERLAY_FADE_MS) return 0;
  return 1 - elapsed / OVERLAY_FADE_MS;
}

export function overlayVisible(state: UiState, nowMs: number): boolean {
  return overlayOpacity(state, nowMs) > 0;
}

/** Brightness is simulated with a dimming layer: opacity 1 - value. */
export function dimmingOpacity(state: UiState): number {
  if (state.snapshot === null) return 0;
  return 1 - state.snapshot.brightness;
}

/** Seek fraction to media time: value 0.5 on a 100 s video is 50 s. */
export function seekTimeSeconds(value: number, durationSeconds: number): number {
  if (!Number.isFinite(durationSeconds) || durationSeconds <= 0) return 0;
  return value * durationSeconds;
}
