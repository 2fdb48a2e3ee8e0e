"""Regenerate frontend/src/profiles.ts from the gesture synthesizer.

The cockpit replays these canned tap and twist kinematics because a mouse
cannot produce the accelerations the recognizer requires.
"""

import json
from pathlib import Path

from midair_ivis.hand_stream import synth_gesture

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "frontend" / "src" / "profiles.ts"

HEADER = '''/** Canned kinematic profiles for gestures a mouse cannot perform.
 *  Offsets are relative to the hand position when playback starts.
 *  Regenerate with scripts/make_profiles.py in the repository root.
 */

export interface ProfileFrame {
  t: number;
  dx: number;
  dy: number;
  dz: number;
  normal: number[];
  pinch: number;
  grab: number;
  fingers: boolean[];
}

export interface Profile {
  rate: number;
  frames: ProfileFrame[];
}

'''


def profile(kind):
    traj = synth_gesture(kind)
    base = traj.frames[0].palm_pos
    t0 = traj.frames[0].t
    frames = []
    for f in traj.frames:
        frames.append({
            "t": round(f.t - t0, 6),
            "dx": round(f.palm_pos[0] - base[0], 9),
            "dy": round(f.palm_pos[1] - base[1], 9),
            "dz": round(f.palm_pos[2] - base[2], 9),
            "normal": [round(c, 9) for c in f.palm_normal],
            "pinch": round(f.pinch_strength, 9),
            "grab": round(f.grab_strength, 9),
            "fingers": list(f.fingers_extended),
        })
    return {"rate": traj.nominal_rate, "frames": frames}


def main() -> None:
    data = {"tap": profile("tap"), "twist": profile("twist")}
    body = json.dumps(data, indent=2)
    OUT.write_text(HEADER
                   + 'export const profiles: Record<"tap" | "twist", Profile> = '
                   + body + ";\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
