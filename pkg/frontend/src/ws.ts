// Browser transport: WebSocket carrying one protocol line per message
// (the bridge in bridge.ts forwards them to the TCP endpoint).

import type { LineTransport } from "./protocol.js";

export function connectWebSocket(url: string): Promise<LineTransport> {
  return new Promise((resolve, reject) => {
    const ws = new WebSocket(url);
    const lineHandlers: Array<(line: string) => void> = [];
    const closeHandlers: Array<() => void> = [];

    ws.onopen = () =>
      resolve({
        send: (line) => ws.send(line),
        onLine: (h) => lineHandlers.push(h),
        onClose: (h) => closeHandlers.push(h),
        close: () => ws.close(),
      });
    ws.onerror = () => reject(new Error(`cannot reach ${url}`));
    ws.onmessage = (msg) => {
      for (const line of String(msg.data).split("\n")) {
        if (line) for (const h of lineHandlers) h(line);
      }
    };
    ws.onclose = () => {
      for (const h of closeHandlers) h();
    };
  });
}
