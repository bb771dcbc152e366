// Node transport: raw TCP to the tapcode serve endpoint.

import net from "node:net";

import type { LineTransport } from "./protocol.js";

export function connectTcp(host: string, port: number): Promise<LineTransport> {
  return new Promise((resolve, reject) => {
    const socket = net.createConnection({ host, port });
    const lineHandlers: Array<(line: string) => void> = [];
    const closeHandlers: Array<() => void> = [];
    let buffer = "";

    socket.once("error", reject);
    socket.on("connect", () => {
      socket.removeListener("error", reject);
      socket.on("error", () => socket.destroy());
      resolve({
        send: (line) => socket.write(line + "\n"),
        onLine: (h) => lineHandlers.push(h),
        onClose: (h) => closeHandlers.push(h),
        close: () => socket.end(),
      });
    });
    socket.on("data", (chunk) => {
      buffer += chunk.toString("utf-8");
      let idx;
      while ((idx = buffer.indexOf("\n")) >= 0) {
        const line = buffer.slice(0, idx);
        buffer = buffer.slice(idx + 1);
        for (const h of lineHandlers) h(line);
      }
    });
    socket.on("close", () => {
      for (const h of closeHandlers) h();
    });
  });
}
