// Page wiring.  Query parameters: host, port (engine endpoint), mirror
// (selfie preview, default on), video (media URL).

import { EngineClient } from "./client.js";
import { encodeFrame, MonotonicClock } from "./protocol.js";
import { applyRecordToVideo, PlayerElements, renderState, showBanner } from "./render.js";
import { applyRecord, initialState, setConnection, UiState } from "./state.js";
import { HandTracker } from "./tracker.js";

function getElements(): PlayerElements {
  const byId = (id: string) => {
    const el = document.getElementById(id);
    if (el === null) throw new Error(`missing element #${id}`);
    return el;
  };
  return {
    video: byId("player") as HTMLVideoElement,
    dimmer: byId("dimmer"),
    bar: byId("gesture-bar"),
    barFill: byId("gesture-bar-fill"),
    barLabel: byId("gesture-bar-label"),
    status: byId("status"),
  };
}

function main(): void {
  const params = new URLSearchParams(window.location.search);
  const host = params.get("host") ?? window.location.hostname ?? "127.0.0.1";
  const port = params.get("port") ?? "8787";
  const mirror = (params.get("mirror") ?? "1") !== "0";
  const videoUrl = params.get("video");

  const els = getElements();
  if (videoUrl !== null) els.video.src = videoUrl;

  const preview = document.getElementById("preview") as HTMLVideoElement;
  // selfie view flips only the preview; landmark coordinates go out as-is
  preview.style.transform = mirror ? "scaleX(-1)" : "none";

  let state: UiState = initialState();
  const repaint = () => renderState(els, state, performance.now());

  const client = new EngineClient(`ws://${host}:${port}`, {
    onRecord: (record) => {
      state = applyRecord(state, record, performance.now());
      applyRecordToVideo(els, record);
      repaint();
    },
    onStatus: (status) => {
      state = setConnection(state, status);
      repaint();
    },
  });
  client.start();

  const clock = new MonotonicClock();
  const tracker = new HandTracker(preview, (frame) => {
    const t = clock.next(frame.mediaTimeMs);
    if (t === null) return; // dropped until monotonicity is restored
    client.offerFrame(encodeFrame(t, frame.hands));
  });

  tracker.start().catch(() => {
    showBanner(els, "camera permission denied - gestures unavailable");
  });

  // keep the overlay fade animating between inbound records
  setInterval(repaint, 100);
}

main();
