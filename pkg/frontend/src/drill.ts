// Practice drill: compare server-decoded letters against a target text,
// score them and keep running stats.  The drill never decodes taps; it
// only consumes PARTIAL/TEXT events.

import type { ServerEvent } from "./protocol.js";
import { expectedGroups, type TableEntry } from "./table.js";

export type LetterResult = "correct" | "wrong";
export type DrillMode = "strict" | "relaxed";

export interface SessionStats {
  lettersAttempted: number;
  accuracy: number;
  wordsPerMinute: number;
}

export interface DrillView {
  target: string;
  position: number;
  results: readonly LetterResult[];
  complete: boolean;
  /** Tap-group hint for the next target letter, e.g. "2" for n. */
  nextPattern: string | null;
  stats: SessionStats;
}

export class Drill {
  readonly target: string;
  readonly mode: DrillMode;
  readonly unitMs: number;
  private table: Map<string, TableEntry>;
  private results: LetterResult[] = [];
  private decoded = "";
  private startedAt: number | null = null;
  private lastFeedbackAt: number | null = null;

  constructor(
    target: string,
    table: Map<string, TableEntry>,
    opts: { mode?: DrillMode; unitMs?: number } = {},
  ) {
    if (!target) throw new Error("drill needs a target text");
    this.target = target.toLowerCase();
    this.table = table;
    this.mode = opts.mode ?? "relaxed";
    this.unitMs = opts.unitMs ?? 150;
  }

  start(nowMs: number): void {
    this.startedAt = nowMs;
  }

  get position(): number {
    return this.results.length;
  }

  get complete(): boolean {
    return this.results.length >= this.target.length;
  }

  /** Score one decoded letter against the target at the cursor. */
  feedback(letter: string, nowMs: number): LetterResult | null {
    if (this.complete) return null;
    if (this.startedAt === null) this.startedAt = nowMs;
    const expected = this.target[this.results.length]!;
    const result: LetterResult = letter === expected ? "correct" : "wrong";
    this.results.push(result);
    this.lastFeedbackAt = nowMs;
    return result;
  }

  /** Feed a protocol event; new letters beyond what we already saw get scored. */
  handleEvent(ev: ServerEvent, nowMs: number): void {
    if (ev.kind === "error") return;
    const text = ev.text;
    // PARTIAL grows monotonically; TEXT is the final, authoritative text
    const fresh = text.startsWith(this.decoded) ? text.slice(this.decoded.length) : text;
    for (const letter of fresh) this.feedback(letter, nowMs);
    this.decoded = ev.kind === "text" ? "" : text;
  }

  view(): DrillView {
    const next = this.complete ? null : this.target[this.results.length]!;
    return {
      target: this.target,
      position: this.results.length,
      results: [...this.results],
      complete: this.complete,
      nextPattern: next === null ? null : expectedGroups(this.table, next),
      stats: this.stats(),
    };
  }

  stats(): SessionStats {
    const attempted = this.results.length;
    const correct = this.results.filter((r) => r === "correct").length;
    const accuracy = attempted === 0 ? 0 : correct / attempted;
    let wpm = 0;
    if (this.startedAt !== null && this.lastFeedbackAt !== null && attempted > 0) {
      const minutes = (this.lastFeedbackAt - this.startedAt) / 60000;
      // a word is five letters plus a space, as in the speed estimate
      if (minutes > 0) wpm = attempted / minutes / 6;
    }
    return { lettersAttempted: attempted, accuracy, wordsPerMinute: wpm };
  }
}
