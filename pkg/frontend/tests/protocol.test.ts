import { describe, expect, it } from "vitest";

import { parseServerLine, SessionClient, type LineTransport, type ServerEvent } from "../src/protocol.js";

class FakeTransport implements LineTransport {
  sent: string[] = [];
  private lineHandlers: Array<(line: string) => void> = [];
  private closeHandlers: Array<() => void> = [];

  send(line: string): void {
    this.sent.push(line);
  }
  onLine(h: (line: string) => void): void {
    this.lineHandlers.push(h);
  }
  onClose(h: () => void): void {
    this.closeHandlers.push(h);
  }
  close(): void {}

  pushLine(line: string): void {
    for (const h of this.lineHandlers) h(line);
  }
  drop(): void {
    for (const h of this.closeHandlers) h();
  }
}

describe("parseServerLine", () => {
  it("parses the three response kinds", () => {
    expect(parseServerLine("PARTIAL en")).toEqual({ kind: "partial", text: "en" });
    expect(parseServerLine("TEXT ende")).toEqual({ kind: "text", text: "ende" });
    expect(parseServerLine("TEXT ")).toEqual({ kind: "text", text: "" });
    expect(parseServerLine("ERR unknown-pattern")).toEqual({
      kind: "error",
      name: "unknown-pattern",
    });
  });

  it("ignores anything else", () => {
    expect(parseServerLine("LISTENING 7333")).toBeNull();
  });
});

describe("SessionClient", () => {
  it("resets the server session on attach and forwards messages", () => {
    const client = new SessionClient();
    const t = new FakeTransport();
    client.attach(t);
    client.setMode("strict");
    client.setTempo(150);
    client.tap(0);
    client.tap(600);
    client.end(1200);
    expect(t.sent).toEqual(["RESET", "MODE strict", "TEMPO 150", "TAP 0", "TAP 600", "END 1200"]);
  });

  it("delivers parsed events", () => {
    const client = new SessionClient();
    const t = new FakeTransport();
    const seen: ServerEvent[] = [];
    client.onEvent((ev) => seen.push(ev));
    client.attach(t);
    t.pushLine("PARTIAL e");
    t.pushLine("TEXT ende");
    expect(seen).toEqual([
      { kind: "partial", text: "e" },
      { kind: "text", text: "ende" },
    ]);
  });

  it("buffers taps while disconnected and replays them after reconnect", () => {
    const client = new SessionClient();
    client.setMode("relaxed");
    client.setTempo(120);
    const first = new FakeTransport();
    let lost = 0;
    client.onConnectionLost(() => lost++);
    client.attach(first);
    client.tap(0);
    first.drop();
    expect(lost).toBe(1);
    expect(client.connected).toBe(false);

    client.tap(600); // buffered, nowhere to go yet
    const second = new FakeTransport();
    client.attach(second);
    // reconnect resets the server session, restores settings, replays taps
    expect(second.sent).toEqual(["RESET", "TEMPO 120", "TAP 0", "TAP 600"]);
  });

  it("clears the tap buffer on end", () => {
    const client = new SessionClient();
    const t = new FakeTransport();
    client.attach(t);
    client.tap(0);
    client.end(500);
    expect(client.pendingTaps).toEqual([]);
  });
});
