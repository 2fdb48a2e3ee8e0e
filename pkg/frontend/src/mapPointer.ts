/** Pointer-to-interaction-box mapping. */

export const BOX_X_MIN = -0.15;
export const BOX_X_MAX = 0.15;
export const BOX_Y_MIN = -0.15;
export const BOX_Y_MAX = 0.15;
export const BOX_Z_MIN = 0.05;
export const BOX_Z_MAX = 0.45;

export interface Viewport {
  width: number;
  height: number;
}

function clamp(v: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, v));
}

/** Affine map of canvas pixels onto the box cross-section. Screen y grows
 *  downward, so the canvas top maps to the box ceiling (z max). Points
 *  outside the canvas clamp to the nearest wall. */
export function mapPointer(
  px: number,
  py: number,
  viewport: Viewport,
): { x: number; z: number } {
  if (viewport.width <= 0 || viewport.height <= 0) {
    throw new Error("viewport must be nonzero");
  }
  const fx = px / viewport.width;
  const fy = py / viewport.height;
  const x = clamp(BOX_X_MIN + fx * (BOX_X_MAX - BOX_X_MIN), BOX_X_MIN, BOX_X_MAX);
  const z = clamp(BOX_Z_MAX - fy * (BOX_Z_MAX - BOX_Z_MIN), BOX_Z_MIN, BOX_Z_MAX);
  return { x, z };
}

/** Inverse of mapPointer for drawing the hand cursor and haptic trail. */
export function boxToCanvas(
  x: number,
  z: number,
  viewport: Viewport,
): { px: number; py: number } {
  const fx = (x - BOX_X_MIN) / (BOX_X_MAX - BOX_X_MIN);
  const fy = (BOX_Z_MAX - z) / (BOX_Z_MAX - BOX_Z_MIN);
  return { px: fx * viewport.width, py: fy * viewport.height };
}
