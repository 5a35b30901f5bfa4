// Outbound backpressure: a single-slot frame queue (drop-oldest) and a
// send pacer targeting <= 30 fps on the wire.

export class FrameQueue {
  private slot: string | null = null;
  private droppedCount = 0;

  offer(record: string): void {
    if (this.slot !== null) this.droppedCount++;
    this.slot = record;
  }

  take(): string | null {
    const record = this.slot;
    this.slot = null;
    return record;
  }

  get dropped(): number {
    return this.droppedCount;
  }
}

export class SendPacer {
  private lastSendMs: number | null = null;

  constructor(private readonly minIntervalMs: number = 1000 / 30) {}

  /** True when a send is allowed now; marks the send time when it is. */
  ready(nowMs: number): boolean {
    if (this.lastSendMs !== null && nowMs - this.lastSendMs < this.minIntervalMs) {
      return false;
    }
    this.lastSendMs = nowMs;
    return true;
  }
}
