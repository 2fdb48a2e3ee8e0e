import { describe, expect, it } from "vitest";

import { boxToCanvas, mapPointer } from "../src/mapPointer.js";

const VP = { width: 800, height: 600 };

describe("mapPointer", () => {
  it("maps the canvas center to the box center", () => {
    const { x, z } = mapPointer(400, 300, VP);
    expect(x).toBeCloseTo(0.0, 12);
    expect(z).toBeCloseTo(0.25, 12);
  });

  it("maps the left edge to the box wall", () => {
    expect(mapPointer(0, 300, VP).x).toBeCloseTo(-0.15, 12);
  });

  it("maps the top edge to the box ceiling", () => {
    expect(mapPointer(400, 0, VP).z).toBeCloseTo(0.45, 12);
  });

  it("clamps points beyond the edges", () => {
    expect(mapPointer(900, 300, VP).x).toBe(0.15);
    expect(mapPointer(-50, 300, VP).x).toBe(-0.15);
    expect(mapPointer(400, 700, VP).z).toBe(0.05);
  });

  it("rejects a zero viewport", () => {
    expect(() => mapPointer(0, 0, { width: 0, height: 600 })).toThrow();
  });

  it("round-trips through boxToCanvas", () => {
    for (const [px, py] of [[0, 0], [123, 456], [800, 600], [400, 300]]) {
      const { x, z } = mapPointer(px, py, VP);
      const back = boxToCanvas(x, z, VP);
      expect(back.px).toBeCloseTo(px, 9);
      expect(back.py).toBeCloseTo(py, 9);
    }
  });
});
