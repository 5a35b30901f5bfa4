"""Streaming service: one WebSocket connection is one isolated session.

Inbound text messages are frame records in the wire format, one record
per message.  Outbound messages are command records, player snapshots,
and diagnostic records (`{"error": ..., "line": N}`); command records are
distinguishable by their "kind" field, so command logs stay clean.

An empty message asks the server to finalize the session: any engaged
gesture ends, the final records are sent, and the server closes the
connection.  Dropping the connection also ends the session, but whatever
a final End would have carried is lost with it.
"""

from __future__ import annotations

import logging
import threading

from websockets.exceptions import ConnectionClosed
from websockets.sync.server import Server, ServerConnection, serve as ws_serve

from gesplayer.config import FsmConfig
from gesplayer.pipeline import Session

log = logging.getLogger(__name__)


def _handle_connection(ws: ServerConnection, cfg: FsmConfig) -> None:
    session = Session(cfg, session_id=str(ws.id))
    try:
        for message in ws:
            if isinstance(message, bytes):
                message = message.decode("utf-8", errors="replace")
            if not message.strip():
                break
            out = session.process_line(message)
            for record in out.wire_records():
                ws.send(record)
        for record in session.finalize().wire_records():
            ws.send(record)
        ws.close()
    except ConnectionClosed:
        log.debug("session %s: connection closed by peer", session.id)


class EngineServer:
    """Embeddable server handle; serves each connection on its own thread."""

    def __init__(
        self, port: int = 0, cfg: FsmConfig | None = None, host: str = "127.0.0.1"
    ) -> None:
        self.cfg = cfg if cfg is not None else FsmConfig()
        self._server: Server = ws_serve(
            lambda ws: _handle_connection(ws, self.cfg), host, port
        )
        self.host = host
        self.port = self._server.socket.getsockname()[1]
        self._thread: threading.Thread | None = None

    def start(self) -> "EngineServer":
        self._thread = threading.Thread(
            target=self._server.serve_forever, name="gesplayer-server", daemon=True
        )
        self._thread.start()
        return self

    def serve_forever(self) -> None:
        self._server.serve_forever()

    def stop(self) -> None:
        self._server.shutdown()
        if self._thread is not None:
            self._thread.join(timeout=5)

    def __enter__(self) -> "EngineServer":
        return self.start()

    def __exit__(self, *exc_info: object) -> None:
        self.stop()


def run_server(port: int, cfg: FsmConfig | None = None, host: str = "0.0.0.0") -> None:
    """Blocking entry point used by the CLI."""
    server = EngineServer(port=port, cfg=cfg, host=host)
    print(f"listening on ws://{host}:{server.port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.stop()
