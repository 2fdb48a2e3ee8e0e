/** Virtual hand input device.
 *
 *  Maps pointer and keyboard state into VirtualControl messages at up to
 *  100 Hz. Pinch (P) and grab (G) ramp 0 to 1 over 100 ms while held so
 *  the server-side hysteresis thresholds are crossed the way a real hand
 *  would cross them. Space and T replay canned tap and twist kinematic
 *  profiles, since a mouse cannot produce the accelerations those
 *  gestures need.
 */

import { profiles, type Profile } from "./profiles.js";
import { mapPointer, BOX_Y_MIN, BOX_Y_MAX, type Viewport } from "./mapPointer.js";
import type { ClientMsg, NavMethod, VirtualControlMsg } from "./wire.js";

export const EMIT_INTERVAL_MS = 10;
export const RAMP_MS = 100;

const OPEN_HAND = [true, true, true, true, true];

function clamp01(v: number): number {
  return Math.min(1, Math.max(0, v));
}

export class VirtualHand {
  private x = 0;
  private y = 0;
  private z = 0.25;
  private pinch = 0;
  private grab = 0;
  private pinchHeld = false;
  private grabHeld = false;
  private fingers: boolean[] = [...OPEN_HAND];
  private navMethod: NavMethod = "FingerPose";
  private lastEmitMs = -Infinity;
  private lastTickMs: number | null = null;
  private profile: Profile | null = null;
  private profileIndex = 0;
  private profileBase = { x: 0, y: 0, z: 0.25 };

  constructor(private readonly emit: (msg: ClientMsg) => void) {}

  pointerMove(px: number, py: number, viewport: Viewport): void {
    const mapped = mapPointer(px, py, viewport);
    this.x = mapped.x;
    this.z = mapped.z;
  }

  /** Scroll moves the hand along the depth axis, 1 cm per notch. */
  wheel(notches: number): void {
    this.y = Math.min(BOX_Y_MAX, Math.max(BOX_Y_MIN, this.y + 0.01 * notches));
  }

  keyDown(key: string): void {
    switch (key.toLowerCase()) {
      case "p":
        this.pinchHeld = true;
        break;
      case "g":
        this.grabHeld = true;
        break;
      case "1":
      case "2":
      case "3":
      case "4": {
        const count = Number(key);
        this.fingers = [false, ...[0, 1, 2, 3].map((i) => i < count)];
        break;
      }
      case "t":
        this.startProfile("twist");
        break;
      case " ":
        this.startProfile("tap");
        break;
      case "c":
        this.emit({ type: "Trigger", stimulus: "IncomingCall" });
        break;
      case "r":
        this.emit({ type: "Trigger", stimulus: "RouteSuggestion" });
        break;
      case "h":
        this.emit({ type: "Trigger", stimulus: "CallerHangup" });
        break;
      case "m":
        this.navMethod = this.navMethod === "FingerPose" ? "Radial3D" : "FingerPose";
        this.emit({ type: "SetNavMethod", method: this.navMethod });
        break;
    }
  }

  keyUp(key: string): void {
    switch (key.toLowerCase()) {
      case "p":
        this.pinchHeld = false;
        break;
      case "g":
        this.grabHeld = false;
        break;
      case "1":
      case "2":
      case "3":
      case "4":
        this.fingers = [...OPEN_HAND];
        break;
    }
  }

  get currentNavMethod(): NavMethod {
    return this.navMethod;
  }

  get profilePlaying(): boolean {
    return this.profile !== null;
  }

  private startProfile(name: "tap" | "twist"): void {
    if (this.profile) return;
    this.profile = profiles[name];
    this.profileIndex = 0;
    this.profileBase = { x: this.x, y: this.y, z: this.z };
  }

  /** Advance ramps and emit at most one VirtualControl. Call from
   *  requestAnimationFrame or a timer; emission is capped at 100 Hz
   *  regardless of call rate. */
  tick(nowMs: number): void {
    const dt = this.lastTickMs === null ? 0 : (nowMs - this.lastTickMs) / RAMP_MS;
    this.lastTickMs = nowMs;
    this.pinch = clamp01(this.pinch + (this.pinchHeld ? dt : -dt));
    this.grab = clamp01(this.grab + (this.grabHeld ? dt : -dt));

    if (nowMs - this.lastEmitMs < EMIT_INTERVAL_MS) return;
    this.lastEmitMs = nowMs;

    let msg: VirtualControlMsg;
    if (this.profile) {
      const frame = this.profile.frames[this.profileIndex++];
      msg = {
        type: "VirtualControl",
        x: this.profileBase.x + frame.dx,
        y: this.profileBase.y + frame.dy,
        z: this.profileBase.z + frame.dz,
        pinch: frame.pinch,
        grab: frame.grab,
        fingers: frame.fingers,
        normal: frame.normal,
      };
      if (this.profileIndex >= this.profile.frames.length) {
        this.profile = null;
      }
    } else {
      msg = {
        type: "VirtualControl",
        x: this.x,
        y: this.y,
        z: this.z,
        pinch: this.pinch,
        grab: this.grab,
        fingers: [...this.fingers],
        normal: [0, 0, -1],
      };
    }
    this.emit(msg);
  }
}
