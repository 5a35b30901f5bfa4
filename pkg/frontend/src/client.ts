// Engine connection: frames out (paced, drop-oldest), records in.
// Reconnects with a fresh server-side session after a dropped connection.

import { EngineRecord, parseRecord } from "./protocol.js";
import { FrameQueue, SendPacer } from "./queue.js";

export interface EngineSocket {
  send(data: string): void;
  close(): void;
}

export interface SocketHandlers {
  onOpen(): void;
  onMessage(data: string): void;
  onClose(): void;
}

export type SocketFactory = (url: string, handlers: SocketHandlers) => EngineSocket;

const browserSocketFactory: SocketFactory = (url, handlers) => {
  const ws = new WebSocket(url);
  ws.onopen = () => handlers.onOpen();
  ws.onmessage = (event) => handlers.onMessage(String(event.data));
  ws.onclose = () => handlers.onClose();
  ws.onerror = () => ws.close();
  return { send: (data) => ws.send(data), close: () => ws.close() };
};

export interface EngineClientOptions {
  onRecord: (record: EngineRecord) => void;
  onStatus?: (status: "connecting" | "open" | "closed") => void;
  reconnectDelayMs?: number;
  socketFactory?: SocketFactory;
  now?: () => number;
  schedule?: (fn: () => void, delayMs: number) => void;
}

export class EngineClient {
  private readonly queue = new FrameQueue();
  private readonly pacer = new SendPacer();
  private socket: EngineSocket | null = null;
  private open = false;
  private stopped = false;
  private readonly reconnectDelayMs: number;
  private readonly socketFactory: SocketFactory;
  private readonly now: () => number;
  private readonly schedule: (fn: () => void, delayMs: number) => void;

  constructor(
    private readonly url: string,
    private readonly opts: EngineClientOptions,
  ) {
    this.reconnectDelayMs = opts.reconnectDelayMs ?? 1000;
    this.socketFactory = opts.socketFactory ?? browserSocketFactory;
    this.now = opts.now ?? (() => performance.now());
    this.schedule = opts.schedule ?? ((fn, ms) => setTimeout(fn, ms));
  }

  start(): void {
    this.stopped = false;
    this.connect();
  }

  stop(): void {
    this.stopped = true;
    this.socket?.close();
    this.socket = null;
    this.open = false;
  }

  get isOpen(): boolean {
    return this.open;
  }

  /** Queue one outbound frame record; sends at most one in flight and at
   * most ~30 per second, dropping stale frames under backpressure. */
  offerFrame(record: string): void {
    this.queue.offer(record);
    this.flush();
  }

  private flush(): void {
    if (!this.open || this.socket === null) return;
    if (!this.pacer.ready(this.now())) return;
    const record = this.queue.take();
    if (record !== null) this.socket.send(record);
  }

  private connect(): void {
    this.opts.onStatus?.("connecting");
    this.socket = this.socketFactory(this.url, {
      onOpen: () => {
        this.open = true;
        this.opts.onStatus?.("open");
      },
      onMessage: (data) => {
        const record = parseRecord(data);
        if (record !== null) this.opts.onRecord(record);
      },
      onClose: () => {
        this.open = false;
        this.socket = null;
        this.opts.onStatus?.("closed");
        if (!this.stopped) {
          // fresh session on the server once we get back in
          this.schedule(() => {
            if (!this.stopped) this.connect();
          }, this.reconnectDelayMs);
        }
      },
    });
  }
}
