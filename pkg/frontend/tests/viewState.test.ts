import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { FEED_LIMIT, TRAIL_SECONDS, ViewState } from "../src/viewState.js";
import type { ServerMsg } from "../src/wire.js";

const TRANSCRIPT = fileURLToPath(
  new URL("../../assets/golden/wire_transcript.txt", import.meta.url),
);

function serverLines(): ServerMsg[] {
  return readFileSync(TRANSCRIPT, "utf8")
    .split("\n")
    .filter((line) => line.startsWith("< "))
    .map((line) => JSON.parse(line.slice(2)) as ServerMsg);
}

describe("ViewState", () => {
  it("folds the golden transcript into the expected final view", () => {
    const view = new ViewState();
    for (const msg of serverLines()) view.apply(msg);
    expect(view.snapshot).not.toBeNull();
    expect(view.snapshot!.mode).toBe("Media");
    expect(view.snapshot!.modal).toBeNull();
    expect(view.events.some((e) => e.payload.kind === "Tap")).toBe(true);
    expect(
      view.effects.some(
        (e) => e.payload.kind === "PhoneAction" && e.payload.action === "answer",
      ),
    ).toBe(true);
    expect(view.lastError).toContain("parse");
  });

  it("is a pure fold: replaying the same messages gives an identical view", () => {
    const a = new ViewState();
    const b = new ViewState();
    for (const msg of serverLines()) a.apply(msg);
    for (const msg of serverLines()) b.apply(msg);
    expect(JSON.stringify(a)).toBe(JSON.stringify(b));
  });

  it("caps the feeds at the limit", () => {
    const view = new ViewState();
    for (let i = 0; i < 120; i++) {
      view.apply({ type: "Event", event: { t: i, kind: "Tap", pos: [0, 0, 0.25] } });
    }
    expect(view.events.length).toBe(FEED_LIMIT);
    expect(view.events[0].payload.t).toBe(120 - FEED_LIMIT);
    expect(view.events[0].seq).toBe(120 - FEED_LIMIT);
  });

  it("prunes the focal trail to one second of history", () => {
    const view = new ViewState();
    for (let i = 0; i < 300; i++) {
      view.apply({
        type: "Focal",
        focal: { t: i * 0.01, pos: [0, 0, 0.25], intensity: 1, mode: "AM" },
      });
    }
    const last = view.trail[view.trail.length - 1].t;
    expect(view.trail.every((f) => last - f.t <= TRAIL_SECONDS)).toBe(true);
    expect(view.trail.length).toBeGreaterThan(90);
  });

  it("tracks connection status", () => {
    const view = new ViewState();
    expect(view.status).toBe("connecting");
    view.setConnected(true);
    expect(view.status).toBe("connected");
    view.setConnected(false);
    expect(view.status).toBe("disconnected");
  });
});
