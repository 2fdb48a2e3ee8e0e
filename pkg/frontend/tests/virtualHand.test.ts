import { describe, expect, it } from "vitest";

import {
  BOX_X_MAX,
  BOX_X_MIN,
  BOX_Y_MAX,
  BOX_Y_MIN,
  BOX_Z_MAX,
  BOX_Z_MIN,
} from "../src/mapPointer.js";
import { profiles } from "../src/profiles.js";
import { VirtualHand, EMIT_INTERVAL_MS, RAMP_MS } from "../src/virtualHand.js";
import type { ClientMsg, VirtualControlMsg } from "../src/wire.js";

const VP = { width: 800, height: 600 };

function collector(): { hand: VirtualHand; sent: ClientMsg[] } {
  const sent: ClientMsg[] = [];
  return { hand: new VirtualHand((msg) => sent.push(msg)), sent };
}

function controls(sent: ClientMsg[]): VirtualControlMsg[] {
  return sent.filter((m): m is VirtualControlMsg => m.type === "VirtualControl");
}

describe("VirtualHand", () => {
  it("caps emission at one control per 10 ms", () => {
    const { hand, sent } = collector();
    for (let ms = 0; ms <= 100; ms++) hand.tick(ms);
    expect(controls(sent).length).toBe(Math.floor(100 / EMIT_INTERVAL_MS) + 1);
  });

  it("ramps pinch from 0 to 1 over 100 ms while held", () => {
    const { hand, sent } = collector();
    hand.tick(0);
    hand.keyDown("p");
    hand.tick(RAMP_MS / 2);
    hand.tick(RAMP_MS);
    const msgs = controls(sent);
    expect(msgs[0].pinch).toBe(0);
    expect(msgs[1].pinch).toBeCloseTo(0.5, 9);
    expect(msgs[2].pinch).toBe(1);
    hand.keyUp("p");
    hand.tick(2 * RAMP_MS);
    expect(controls(sent)[3].pinch).toBe(0);
  });

  it("keeps every emitted value inside the hand frame ranges", () => {
    const { hand, sent } = collector();
    hand.pointerMove(-500, 9000, VP);
    hand.keyDown("g");
    for (let i = 0; i < 40; i++) hand.wheel(-1);
    for (let ms = 0; ms <= 300; ms += 10) hand.tick(ms);
    hand.keyDown(" ");
    for (let ms = 310; ms <= 1300; ms += 10) hand.tick(ms);
    for (const msg of controls(sent)) {
      expect(msg.x).toBeGreaterThanOrEqual(BOX_X_MIN);
      expect(msg.x).toBeLessThanOrEqual(BOX_X_MAX);
      expect(msg.y).toBeGreaterThanOrEqual(BOX_Y_MIN);
      expect(msg.y).toBeLessThanOrEqual(BOX_Y_MAX);
      expect(msg.pinch).toBeGreaterThanOrEqual(0);
      expect(msg.pinch).toBeLessThanOrEqual(1);
      expect(msg.grab).toBeGreaterThanOrEqual(0);
      expect(msg.grab).toBeLessThanOrEqual(1);
      expect(msg.fingers).toHaveLength(5);
    }
  });

  it("number keys fold the thumb and extend that many fingers", () => {
    const { hand, sent } = collector();
    hand.keyDown("3");
    hand.tick(0);
    expect(controls(sent)[0].fingers).toEqual([false, true, true, true, false]);
    hand.keyUp("3");
    hand.tick(10);
    expect(controls(sent)[1].fingers).toEqual([true, true, true, true, true]);
  });

  it("replays the canned tap profile exactly, anchored at the hand", () => {
    const { hand, sent } = collector();
    hand.pointerMove(600, 150, VP);
    hand.tick(0);
    const base = controls(sent)[0];
    hand.keyDown(" ");
    const frames = profiles.tap.frames;
    for (let i = 1; i <= frames.length; i++) hand.tick(i * 10);
    const replayed = controls(sent).slice(1);
    expect(replayed.length).toBe(frames.length);
    expect(hand.profilePlaying).toBe(false);
    frames.forEach((frame, i) => {
      expect(replayed[i].x).toBeCloseTo(base.x + frame.dx, 9);
      expect(replayed[i].z).toBeCloseTo(base.z + frame.dz, 9);
    });
    // The dip stays inside the box from any legal start height.
    const minDz = Math.min(...frames.map((f) => f.dz));
    expect(BOX_Z_MIN + 0.2 + minDz).toBeGreaterThan(BOX_Z_MIN);
    expect(BOX_Z_MAX + Math.max(...frames.map((f) => f.dz))).toBeLessThanOrEqual(
      BOX_Z_MAX,
    );
  });

  it("twist profile rolls the palm normal through the flip band", () => {
    const nz = profiles.twist.frames.map((f) => f.normal[2]);
    expect(Math.min(...nz)).toBeLessThan(-0.7);
    expect(Math.max(...nz)).toBeGreaterThan(0.7);
    expect(nz[nz.length - 1]).toBeLessThan(-0.7);
  });

  it("M toggles the nav method and announces it", () => {
    const { hand, sent } = collector();
    expect(hand.currentNavMethod).toBe("FingerPose");
    hand.keyDown("m");
    expect(sent).toContainEqual({ type: "SetNavMethod", method: "Radial3D" });
    hand.keyDown("m");
    expect(hand.currentNavMethod).toBe("FingerPose");
  });

  it("C and R trigger the keyboard stimuli", () => {
    const { hand, sent } = collector();
    hand.keyDown("c");
    hand.keyDown("r");
    expect(sent).toContainEqual({ type: "Trigger", stimulus: "IncomingCall" });
    expect(sent).toContainEqual({ type: "Trigger", stimulus: "RouteSuggestion" });
  });
});
