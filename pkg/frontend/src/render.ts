// DOM bindings: apply engine records to the video element and overlays.
// Seek scrubs live (playback keeps running during a drag).

import { CommandRecord, EngineRecord, isCommand, isSnapshot } from "./protocol.js";
import {
  UiState,
  dimmingOpacity,
  overlayOpacity,
  seekTimeSeconds,
} from "./state.js";

export interface PlayerElements {
  video: HTMLVideoElement;
  dimmer: HTMLElement;
  bar: HTMLElement;
  barFill: HTMLElement;
  barLabel: HTMLElement;
  status: HTMLElement;
}

const KIND_LABEL: Record<CommandRecord["kind"], string> = {
  seek: "seek",
  volume: "volume",
  brightness: "brightness",
};

export function applyRecordToVideo(els: PlayerElements, record: EngineRecord): void {
  if (isCommand(record)) {
    if (record.kind === "seek") {
      els.video.currentTime = seekTimeSeconds(record.value, els.video.duration);
    } else if (record.kind === "volume") {
      els.video.volume = record.value;
    }
    // brightness is handled through the snapshot-driven dimmer
    return;
  }
  if (isSnapshot(record)) {
    els.video.volume = record.volume;
  }
}

export function renderState(els: PlayerElements, state: UiState, nowMs: number): void {
  els.dimmer.style.opacity = String(dimmingOpacity(state));
  const opacity = overlayOpacity(state, nowMs);
  els.bar.style.opacity = String(opacity);
  els.bar.style.visibility = opacity > 0 ? "visible" : "hidden";
  if (state.gesture !== null) {
    els.barFill.style.width = `${(state.gesture.value * 100).toFixed(1)}%`;
    els.barLabel.textContent = `${KIND_LABEL[state.gesture.kind]} ${(state.gesture.value * 100).toFixed(0)}%`;
  }
  els.status.textContent = state.connection === "open" ? "" : state.connection;
  els.status.style.display = state.connection === "open" ? "none" : "block";
}

export function showBanner(els: PlayerElements, message: string): void {
  els.status.textContent = message;
  els.status.style.display = "block";
}
