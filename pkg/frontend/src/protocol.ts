// Wire formats shared with the engine, plus the frame encoder.
//
// One JSON record per WebSocket message.  Outbound frames must satisfy the
// engine's parser: integer strictly-increasing t_ms, "Left"/"Right"
// handedness, score in [0,1], exactly 21 [x,y,z] landmarks with x,y inside
// [-0.5, 1.5].

export const LANDMARKS_PER_HAND = 21;
const COORD_MIN = -0.5;
const COORD_MAX = 1.5;

export interface LandmarkPoint {
  x: number;
  y: number;
  z?: number;
}

export interface TrackedHand {
  handedness: "Left" | "Right";
  score: number;
  landmarks: LandmarkPoint[];
}

export interface CommandRecord {
  t_ms: number;
  kind: "seek" | "volume" | "brightness";
  phase: "begin" | "update" | "end";
  value: number;
}

export interface SnapshotRecord {
  t_ms: number;
  position: number;
  volume: number;
  brightness: number;
  playing: boolean;
}

export interface DiagnosticRecord {
  error: string;
  line: number;
}

export type EngineRecord = CommandRecord | SnapshotRecord | DiagnosticRecord;

function clampCoord(v: number): number {
  if (!Number.isFinite(v)) return 0;
  return Math.min(COORD_MAX, Math.max(COORD_MIN, v));
}

function clamp01(v: number): number {
  if (!Number.isFinite(v)) return 0;
  return Math.min(1, Math.max(0, v));
}

/** Render one frame record. Landmark coordinates are forwarded unmirrored
 * and clamped into the engine's accepted window; throws if a hand does not
 * carry exactly 21 landmarks. */
export function encodeFrame(tMs: number, hands: TrackedHand[]): string {
  const record = {
    t_ms: Math.round(tMs),
    hands: hands.map((hand) => {
      if (hand.landmarks.length !== LANDMARKS_PER_HAND) {
        throw new Error(
          `hand has ${hand.landmarks.length} landmarks, expected ${LANDMARKS_PER_HAND}`,
        );
      }
      return {
        handedness: hand.handedness,
        score: clamp01(hand.score),
        landmarks: hand.landmarks.map((p) => [
          clampCoord(p.x),
          clampCoord(p.y),
          Number.isFinite(p.z ?? 0) ? (p.z ?? 0) : 0,
        ]),
      };
    }),
  };
  return JSON.stringify(record);
}

export function isCommand(r: unknown): r is CommandRecord {
  return typeof r === "object" && r !== null && "kind" in r && "phase" in r;
}

export function isSnapshot(r: unknown): r is SnapshotRecord {
  return typeof r === "object" && r !== null && "position" in r && "brightness" in r;
}

export function isDiagnostic(r: unknown): r is DiagnosticRecord {
  return typeof r === "object" && r !== null && "error" in r;
}

export function parseRecord(text: string): EngineRecord | null {
  let obj: unknown;
  try {
    obj = JSON.parse(text);
  } catch {
    return null;
  }
  if (isCommand(obj) || isSnapshot(obj) || isDiagnostic(obj)) return obj;
  return null;
}

/** Session timestamps: integer milliseconds, strictly increasing.  Media
 * timestamps that stall or jump backwards (tab suspend/resume) are dropped
 * until monotonicity is restored. */
export class MonotonicClock {
  private last: number | null = null;

  next(mediaTimeMs: number): number | null {
    const t = Math.round(mediaTimeMs);
    if (!Number.isFinite(t)) return null;
    if (this.last !== null && t <= this.last) return null;
    this.last = t;
    return t;
  }

  reset(): void {
    this.last = null;
  }
}
