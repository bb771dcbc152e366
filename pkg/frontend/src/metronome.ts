// Click track for strict-mode practice.  Purely auditory: toggling it
// never touches tap timestamps.

export class Metronome {
  private ctx: AudioContext | null = null;
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(private unitMs: number) {}

  get running(): boolean {
    return this.timer !== null;
  }

  setUnit(unitMs: number): void {
    this.unitMs = unitMs;
    if (this.running) {
      this.stop();
      this.start();
    }
  }

  start(): void {
    if (this.timer) return;
    this.ctx = this.ctx ?? new AudioContext();
    this.timer = setInterval(() => this.tick(), this.unitMs);
  }

  stop(): void {
    if (this.timer) clearInterval(this.timer);
    this.timer = null;
  }

  private tick(): void {
    if (!this.ctx) return;
    const osc = this.ctx.createOscillator();
    const gain = this.ctx.createGain();
    osc.frequency.value = 1200;
    gain.gain.setValueAtTime(0.12, this.ctx.currentTime);
    gain.gain.exponentialRampToValueAtTime(0.0001, this.ctx.currentTime + 0.03);
    osc.connect(gain).connect(this.ctx.destination);
    osc.start();
    osc.stop(this.ctx.currentTime + 0.035);
  }
}
