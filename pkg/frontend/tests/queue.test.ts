import { describe, expect, it } from "vitest";

import { FrameQueue, SendPacer } from "../src/queue.js";

describe("FrameQueue", () => {
  it("keeps only the newest frame under backpressure", () => {
    const q = new FrameQueue();
    q.offer("a");
    q.offer("b");
    q.offer("c");
    expect(q.take()).toBe("c");
    expect(q.take()).toBeNull();
    expect(q.dropped).toBe(2);
  });

  it("take clears the slot", () => {
    const q = new FrameQueue();
    q.offer("x");
    expect(q.take()).toBe("x");
    q.offer("y");
    expect(q.take()).toBe("y");
    expect(q.dropped).toBe(0);
  });
});

describe("SendPacer", () => {
  it("allows at most one send per interval", () => {
    const pacer = new SendPacer(1000 / 30);
    expect(pacer.ready(0)).toBe(true);
    expect(pacer.ready(10)).toBe(false);
    expect(pacer.ready(30)).toBe(false);
    expect(pacer.ready(34)).toBe(true);
    expect(pacer.ready(40)).toBe(false);
  });

  it("caps a fast feed near the target rate", () => {
    const pacer = new SendPacer(1000 / 30);
    let sends = 0;
    for (let t = 0; t < 1000; t += 5) {
      if (pacer.ready(t)) sends++;
    }
    expect(sends).toBeGreaterThanOrEqual(28);
    expect(sends).toBeLessThanOrEqual(30);
  });
});
