/** DOM/canvas renderer. Reads only from ViewState; all behavior lives on
 *  the server. */

import { boxToCanvas } from "./mapPointer.js";
import type { ViewState } from "./viewState.js";
import type { EffectPayload } from "./wire.js";

const MODES = ["Media", "Temperature", "Fan", "Navigation"] as const;
const RADIAL: Array<[string, string]> = [
  ["W", "Media"],
  ["N", "Temperature"],
  ["S", "Fan"],
  ["E", "Navigation"],
];

export interface AudioSink {
  ding(): void;
  speak(label: string): void;
}

/** WebAudio ding plus speech synthesis; both optional in headless runs. */
export function defaultAudioSink(): AudioSink {
  let ctx: AudioContext | null = null;
  return {
    ding() {
      ctx = ctx ?? new AudioContext();
      const osc = ctx.createOscillator();
      const gain = ctx.createGain();
      osc.frequency.value = 880;
      gain.gain.setValueAtTime(0.2, ctx.currentTime);
      gain.gain.exponentialRampToValueAtTime(1e-4, ctx.currentTime + 0.25);
      osc.connect(gain).connect(ctx.destination);
      osc.start();
      osc.stop(ctx.currentTime + 0.25);
    },
    speak(label: string) {
      if ("speechSynthesis" in window) {
        window.speechSynthesis.speak(new SpeechSynthesisUtterance(label));
      }
    },
  };
}

export class Renderer {
  private audioSeen = 0;

  constructor(
    private readonly root: HTMLElement,
    private readonly canvas: HTMLCanvasElement,
    private readonly audio: AudioSink,
  ) {}

  render(view: ViewState): void {
    this.renderPanels(view);
    this.renderModal(view);
    this.renderRadial(view);
    this.renderFeeds(view);
    this.renderTrail(view);
    this.playNewAudio(view);
    this.root.classList.toggle("disconnected", view.status !== "connected");
  }

  private renderPanels(view: ViewState): void {
    const snap = view.snapshot;
    for (const mode of MODES) {
      const panel = this.root.querySelector<HTMLElement>(`#panel-${mode}`);
      if (!panel) continue;
      const focused = snap?.mode === mode;
      panel.style.opacity = focused ? "1.0" : "0.35";
      panel.classList.toggle("focused", focused);
    }
    if (!snap) return;
    this.setText("#media-status", snap.media.playing ? "playing" : "paused");
    this.setText("#media-track", `track ${snap.media.track_index}`);
    this.setText("#media-volume", `vol ${snap.media.volume.toFixed(0)}`);
    this.setText("#temp-value", `${snap.temperature.toFixed(1)} °C`);
    this.setText("#fan-value", `level ${snap.fan}`);
    this.setText("#zoom-value", `zoom ${snap.nav_zoom}`);
  }

  private renderModal(view: ViewState): void {
    const overlay = this.root.querySelector<HTMLElement>("#modal-overlay");
    if (!overlay) return;
    const modal = view.snapshot?.modal ?? null;
    overlay.hidden = modal === null;
    if (modal !== null) {
      this.setText("#modal-title", modal);
    }
  }

  private renderRadial(view: ViewState): void {
    const overlay = this.root.querySelector<HTMLElement>("#radial-overlay");
    if (!overlay) return;
    const highlight = view.snapshot?.radial_highlight ?? null;
    overlay.hidden = highlight === null;
    for (const [dir, label] of RADIAL) {
      const cell = overlay.querySelector<HTMLElement>(`#radial-${dir}`);
      if (!cell) continue;
      cell.textContent = `${dir}: ${label}`;
      cell.classList.toggle("highlight", highlight === dir);
    }
  }

  private renderFeeds(view: ViewState): void {
    const fmt = (lines: string[]) => lines.slice(-8).join("\n");
    this.setText(
      "#event-feed",
      fmt(view.events.map((e) => `${e.payload.t.toFixed(2)} ${e.payload.kind}`)),
    );
    this.setText(
      "#effect-feed",
      fmt(view.effects.map((e) => describeEffect(e.payload))),
    );
    this.setText("#error-line", view.lastError ?? "");
  }

  private renderTrail(view: ViewState): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    const vp = { width: this.canvas.width, height: this.canvas.height };
    ctx.clearRect(0, 0, vp.width, vp.height);
    ctx.fillStyle = "#4fd1c5";
    for (const focal of view.trail) {
      const { px, py } = boxToCanvas(focal.pos[0], focal.pos[2], vp);
      const r = 1.5 + 3 * focal.intensity;
      ctx.globalAlpha = 0.3 + 0.7 * focal.intensity;
      ctx.beginPath();
      ctx.arc(px, py, r, 0, 2 * Math.PI);
      ctx.fill();
    }
    ctx.globalAlpha = 1;
  }

  private playNewAudio(view: ViewState): void {
    for (const entry of view.effects) {
      if (entry.seq < this.audioSeen) continue;
      this.audioSeen = entry.seq + 1;
      if (entry.payload.kind === "AudioDing") this.audio.ding();
      if (entry.payload.kind === "AudioSpeech" && entry.payload.label) {
        this.audio.speak(entry.payload.label);
      }
    }
  }

  private setText(selector: string, text: string): void {
    const el = this.root.querySelector<HTMLElement>(selector);
    if (el) el.textContent = text;
  }
}

function describeEffect(effect: EffectPayload): string {
  const extra = effect.label ?? effect.action ?? effect.sensation ?? effect.focused_region ?? "";
  return extra ? `${effect.kind} ${extra}` : effect.kind;
}
