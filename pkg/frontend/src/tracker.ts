// MediaPipe Hands adapter.  The library and its camera helper load from
// the CDN in index.html; handedness labels are forwarded verbatim and
// coordinates are never mirrored here (only the preview flips).

import { TrackedHand } from "./protocol.js";

declare const Hands: any;
declare const Camera: any;

export interface TrackerFrame {
  mediaTimeMs: number;
  hands: TrackedHand[];
}

export class HandTracker {
  private readonly camera: any;

  constructor(
    video: HTMLVideoElement,
    onFrame: (frame: TrackerFrame) => void,
    maxFps = 30,
  ) {
    const hands = new Hands({
      locateFile: (file: string) =>
        `https://cdn.jsdelivr.net/npm/@mediapipe/hands/${file}`,
    });
    hands.setOptions({
      maxNumHands: 2,
      modelComplexity: 1,
      minDetectionConfidence: 0.5,
      minTrackingConfidence: 0.5,
    });
    hands.onResults((results: any) => {
      const tracked: TrackedHand[] = [];
      const landmarks = results.multiHandLandmarks ?? [];
      const labels = results.multiHandedness ?? [];
      for (let i = 0; i < landmarks.length && i < labels.length; i++) {
        const label = labels[i]?.label;
        if (label !== "Left" && label !== "Right") continue;
        tracked.push({
          handedness: label,
          score: labels[i]?.score ?? 0,
          landmarks: landmarks[i].map((p: any) => ({ x: p.x, y: p.y, z: p.z ?? 0 })),
        });
      }
      // empty-hands frames still flow: the engine times dropouts from them
      onFrame({ mediaTimeMs: video.currentTime * 1000, hands: tracked });
    });

    let lastSentMs = 0;
    this.camera = new Camera(video, {
      onFrame: async () => {
        const nowMs = performance.now();
        if (nowMs - lastSentMs < 1000 / maxFps) return;
        lastSentMs = nowMs;
        await hands.send({ image: video });
      },
      width: 640,
      height: 480,
    });
  }

  start(): Promise<void> {
    return this.camera.start();
  }
}
