// Browser entry point: tap with the spacebar or pointer, watch the live
// group pattern, the server's decoded letters and your score.
//
// Needs `tapcode serve` plus the ws bridge (see README), and table.txt
// generated from `tapcode table`.

import { Drill } from "./drill.js";
import { livePattern, LETTER_GAP_RATIO } from "./grouping.js";
import { Metronome } from "./metronome.js";
import { SessionClient } from "./protocol.js";
import { parseTableExport } from "./table.js";
import { connectWebSocket } from "./ws.js";

const $ = (id: string) => document.getElementById(id)!;

const state = {
  client: new SessionClient(),
  drill: null as Drill | null,
  unitMs: 150,
  sessionStart: null as number | null,
  lastTap: null as number | null,
  taps: [] as number[],
  endTimer: null as ReturnType<typeof setTimeout> | null,
  metronome: null as Metronome | null,
};

function now(): number {
  return performance.now();
}

function render(): void {
  const drill = state.drill;
  $("pattern").textContent = livePattern(state.taps, state.unitMs) || "–";
  if (!drill) return;
  const view = drill.view();
  $("target").innerHTML = view.target
    .split("")
    .map((ch, i) => {
      const cls =
        i < view.results.length ? view.results[i] : i === view.position ? "cursor" : "";
      return `<span class="${cls}">${ch === " " ? "␣" : ch}</span>`;
    })
    .join("");
  $("hint").textContent = view.nextPattern ? `next: ${view.nextPattern}` : "";
  const s = view.stats;
  $("stats").textContent =
    `${s.lettersAttempted}/${view.target.length} letters · ` +
    `${Math.round(s.accuracy * 100)} % · ${s.wordsPerMinute.toFixed(1)} wpm`;
  if (view.complete) $("banner").textContent = "drill complete";
}

function scheduleAutoEnd(): void {
  if (state.endTimer) clearTimeout(state.endTimer);
  // three letter gaps of silence finish the session
  state.endTimer = setTimeout(finishSession, 3 * LETTER_GAP_RATIO * state.unitMs);
}

function finishSession(): void {
  if (state.sessionStart === null || state.lastTap === null) return;
  state.client.end(state.lastTap - state.sessionStart + 4 * state.unitMs);
  state.sessionStart = null;
  state.lastTap = null;
  state.taps = [];
  render();
}

function tap(): void {
  const t = now();
  if (state.sessionStart === null) state.sessionStart = t;
  const onset = t - state.sessionStart;
  state.lastTap = t;
  state.taps.push(onset);
  state.client.tap(Math.round(onset));
  scheduleAutoEnd();
  render();
}

async function startDrill(): Promise<void> {
  const target = ($("text") as HTMLInputElement).value || "ende";
  const mode = ($("mode") as HTMLSelectElement).value as "strict" | "relaxed";
  state.unitMs = Number(($("tempo") as HTMLInputElement).value) || 150;

  const tableText = await fetch("table.txt").then((r) => r.text());
  state.drill = new Drill(target, parseTableExport(tableText), {
    mode,
    unitMs: state.unitMs,
  });
  state.drill.start(now());
  state.taps = [];
  state.sessionStart = null;

  try {
    state.client.close();
    state.client = new SessionClient();
    state.client.onEvent((ev) => {
      if (ev.kind === "error") {
        $("banner").textContent = `server error: ${ev.name}`;
        return;
      }
      state.drill?.handleEvent(ev, now());
      $("decoded").textContent = ev.text;
      render();
    });
    state.client.onConnectionLost(() => {
      $("banner").textContent = "connection lost - taps buffered, reconnecting ...";
      setTimeout(reconnect, 1000);
    });
    state.client.attach(await connectWebSocket(`ws://${location.hostname}:7444`));
    state.client.setMode(mode);
    state.client.setTempo(state.unitMs);
    $("banner").textContent = `drill started (${mode})`;
  } catch {
    $("banner").textContent = "cannot reach the bridge on :7444";
  }
  render();
}

async function reconnect(): Promise<void> {
  try {
    state.client.attach(await connectWebSocket(`ws://${location.hostname}:7444`));
    $("banner").textContent = "reconnected";
  } catch {
    setTimeout(reconnect, 1000);
  }
}

function toggleMetronome(): void {
  state.metronome = state.metronome ?? new Metronome(state.unitMs);
  state.metronome.setUnit(state.unitMs);
  if (state.metronome.running) {
    state.metronome.stop();
    $("metronome").textContent = "metronome: off";
  } else {
    state.metronome.start();
    $("metronome").textContent = "metronome: on";
  }
}

$("start").addEventListener("click", () => void startDrill());
$("metronome").addEventListener("click", toggleMetronome);
$("pad").addEventListener("pointerdown", (ev) => {
  ev.preventDefault();
  tap();
});
document.addEventListener("keydown", (ev) => {
  if (ev.code === "Space" && !ev.repeat) {
    ev.preventDefault();
    tap();
  }
});
