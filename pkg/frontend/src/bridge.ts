// WebSocket <-> TCP bridge so the browser can reach the serve endpoint.
// Each WebSocket connection gets its own TCP connection (sessions are
// per-connection on the server side).
//
//   node dist/bridge.js [ws-port] [tcp-host] [tcp-port]

import net from "node:net";

import { WebSocketServer, type WebSocket } from "ws";

export function startBridge(wsPort: number, tcpHost: string, tcpPort: number): WebSocketServer {
  const server = new WebSocketServer({ port: wsPort });
  server.on("connection", (ws: WebSocket) => {
    const tcp = net.createConnection({ host: tcpHost, port: tcpPort });
    let buffer = "";
    ws.on("message", (data) => tcp.write(data.toString() + "\n"));
    tcp.on("data", (chunk) => {
      buffer += chunk.toString("utf-8");
      let idx;
      while ((idx = buffer.indexOf("\n")) >= 0) {
        ws.send(buffer.slice(0, idx));
        buffer = buffer.slice(idx + 1);
      }
    });
    ws.on("close", () => tcp.end());
    tcp.on("close", () => ws.close());
    tcp.on("error", () => ws.close());
  });
  return server;
}

const isMain = process.argv[1]?.endsWith("bridge.js");
if (isMain) {
  const wsPort = Number(process.argv[2] ?? 7444);
  const tcpHost = process.argv[3] ?? "127.0.0.1";
  const tcpPort = Number(process.argv[4] ?? 7333);
  startBridge(wsPort, tcpHost, tcpPort);
  console.log(`bridging ws://localhost:${wsPort} <-> tcp ${tcpHost}:${tcpPort}`);
}
