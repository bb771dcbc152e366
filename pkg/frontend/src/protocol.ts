// Client side of the tapcode serve line protocol.  The transport is
// pluggable (TCP in Node, WebSocket via the bridge in the browser); the
// client never decodes anything itself - decoded letters only ever come
// back from the server.

export interface LineTransport {
  send(line: string): void;
  onLine(handler: (line: string) => void): void;
  onClose(handler: () => void): void;
  close(): void;
}

export type ServerEvent =
  | { kind: "partial"; text: string }
  | { kind: "text"; text: string }
  | { kind: "error"; name: string };

export function parseServerLine(line: string): ServerEvent | null {
  if (line.startsWith("PARTIAL ")) return { kind: "partial", text: line.slice(8) };
  if (line.startsWith("TEXT")) return { kind: "text", text: line.slice(5) };
  if (line.startsWith("ERR ")) return { kind: "error", name: line.slice(4) };
  return null;
}

export type Mode = "strict" | "relaxed";

/**
 * One live tapping session.  Taps are buffered while the connection is
 * down and replayed after a reconnect, which starts with RESET so the
 * server state matches ours again.
 */
export class SessionClient {
  private transport: LineTransport | null = null;
  private taps: number[] = [];
  private mode: Mode = "relaxed";
  private tempoMs: number | null = null;
  private handlers: Array<(ev: ServerEvent) => void> = [];
  private lostHandlers: Array<() => void> = [];

  get connected(): boolean {
    return this.transport !== null;
  }

  get pendingTaps(): readonly number[] {
    return this.taps;
  }

  onEvent(handler: (ev: ServerEvent) => void): void {
    this.handlers.push(handler);
  }

  onConnectionLost(handler: () => void): void {
    this.lostHandlers.push(handler);
  }

  attach(transport: LineTransport): void {
    this.transport = transport;
    transport.onLine((line) => {
      const ev = parseServerLine(line);
      if (ev) for (const h of this.handlers) h(ev);
    });
    transport.onClose(() => {
      this.transport = null;
      for (const h of this.lostHandlers) h();
    });
    // resynchronize: fresh server session, then replay what we hold
    transport.send("RESET");
    if (this.mode !== "relaxed") transport.send(`MODE ${this.mode}`);
    if (this.tempoMs !== null) transport.send(`TEMPO ${this.tempoMs}`);
    for (const t of this.taps) transport.send(`TAP ${t}`);
  }

  setMode(mode: Mode): void {
    this.mode = mode;
    this.transport?.send(`MODE ${mode}`);
  }

  setTempo(unitMs: number): void {
    this.tempoMs = unitMs;
    this.transport?.send(`TEMPO ${unitMs}`);
  }

  tap(onsetMs: number): void {
    this.taps.push(onsetMs);
    this.transport?.send(`TAP ${onsetMs}`);
  }

  end(endMs: number): void {
    this.taps = [];
    this.transport?.send(`END ${endMs}`);
  }

  reset(): void {
    this.taps = [];
    this.transport?.send("RESET");
  }

  close(): void {
    this.transport?.close();
    this.transport = null;
  }
}
