"""Line-protocol endpoint for live tap sessions.

Clients send ``TAP <onset_ms>``, ``END <ms>``, ``MODE strict|relaxed``,
``TEMPO <unit_ms>`` and ``RESET``; after END the decoded text comes back
as ``TEXT <...>`` or ``ERR <name>``.  In relaxed mode every completed
letter triggers a ``PARTIAL <text>`` so a client can give live feedback.
Each connection owns its session; the table is shared read-only.
"""

from __future__ import annotations

import socketserver

from .core import TapTable, canonical_german_table, from_groups
from .errors import TapError
from .timing import (
    GROUP_GAP_RATIO,
    LETTER_GAP_RATIO,
    TapSession,
    _segment_letters,
    decode_session,
)


class SessionProtocol:
    """Protocol state machine for one client, independent of transport."""

    def __init__(self, table: TapTable | None = None):
        self.table = table or canonical_german_table()
        self.mode = "relaxed"
        self.unit_ms: float | None = None
        self.onsets: list[float] = []
        self._partials_sent = 0

    def handle(self, line: str) -> list[str]:
        """Responses (possibly none) for one incoming protocol line."""
        parts = line.strip().split()
        if not parts:
            return []
        verb, args = parts[0].upper(), parts[1:]
        try:
            if verb == "TAP" and len(args) == 1:
                return self._tap(float(args[0]))
            if verb == "END" and len(args) == 1:
                return self._end(float(args[0]))
            if verb == "MODE" and len(args) == 1 and args[0].lower() in ("strict", "relaxed"):
                self.mode = args[0].lower()
                return []
            if verb == "TEMPO" and len(args) == 1:
                unit = float(args[0])
                if unit <= 0:
                    return ["ERR protocol-error"]
                self.unit_ms = unit
                return []
            if verb == "RESET":
                self.onsets = []
                self._partials_sent = 0
                return []
        except ValueError:
            return ["ERR protocol-error"]
        return ["ERR protocol-error"]

    def _tap(self, onset: float) -> list[str]:
        if onset < 0 or (self.onsets and onset <= self.onsets[-1]):
            return ["ERR protocol-error"]
        self.onsets.append(onset)
        if self.mode != "relaxed":
            return []
        partial = self._partial_text()
        if partial is not None:
            return [f"PARTIAL {partial}"]
        return []

    def _partial_text(self) -> str | None:
        """Decoded text of all letters already closed by a letter gap,
        or None while nothing new is complete."""
        if len(self.onsets) < 2:
            return None
        try:
            session = TapSession.from_onsets(self.onsets, self.onsets[-1], self.unit_ms)
            letters = _segment_letters(session, GROUP_GAP_RATIO, LETTER_GAP_RATIO)
            complete = letters[:-1]  # the last letter is still open
            if len(complete) <= self._partials_sent:
                return None
            out = []
            for pattern, space_after in complete:
                out.append(self.table.symbol_for_payload(from_groups(pattern)))
                if space_after:
                    out.append(" ")
            self._partials_sent = len(complete)
            return "".join(out)
        except TapError:
            return None

    def _end(self, end_ms: float) -> list[str]:
        onsets, self.onsets, self._partials_sent = self.onsets, [], 0
        if not onsets:
            return ["TEXT "]
        if end_ms < onsets[-1]:
            return ["ERR protocol-error"]
        try:
            session = TapSession.from_onsets(onsets, end_ms, self.unit_ms)
            text = decode_session(session, self.table, mode=self.mode)
        except TapError as err:
            return [f"ERR {err.name}"]
        return [f"TEXT {text}"]


class _Handler(socketserver.StreamRequestHandler):
    def handle(self) -> None:
        protocol = SessionProtocol(self.server.table)  # type: ignore[attr-defined]
        for raw in self.rfile:
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError:
                self.wfile.write(b"ERR protocol-error\n")
                self.wfile.flush()
                continue
            responses = protocol.handle(line)
            for response in responses:
                self.wfile.write((response + "\n").encode("utf-8"))
            self.wfile.flush()


class TapServer(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, port: int = 0, table: TapTable | None = None):
        super().__init__(("127.0.0.1", port), _Handler)
        self.table = table or canonical_german_table()

    @property
    def port(self) -> int:
        return self.server_address[1]


def serve(port: int, table: TapTable | None = None) -> None:
    """Run the endpoint until interrupted; prints the bound port first."""
    with TapServer(port, table) as server:
        print(f"LISTENING {server.port}", flush=True)
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            pass
