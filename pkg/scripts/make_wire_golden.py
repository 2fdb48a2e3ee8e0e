"""Regenerate the golden bridge transcript at assets/golden/wire_transcript.txt.

The transcript exercises every wire message type through a single session:
hello, nav-method switch, a call triggered and answered by a virtual-hand
tap, an explicit frame, and a parse error. Deterministic because the
session clock is logical.
"""

import json
from pathlib import Path

from midair_ivis.bridge_service import Session
from midair_ivis.hand_stream import synth_gesture

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "assets" / "golden" / "wire_transcript.txt"


def client_messages():
    yield {"type": "Hello", "nav_method": "FingerPose"}
    yield {"type": "SetNavMethod", "method": "Radial3D"}
    yield {"type": "SetNavMethod", "method": "FingerPose"}
    yield {"type": "Trigger", "stimulus": "IncomingCall"}
    # Virtual-hand tap profile answering the call.
    for frame in synth_gesture("tap").frames:
        yield {"type": "VirtualControl",
               "x": frame.palm_pos[0], "y": frame.palm_pos[1],
               "z": frame.palm_pos[2]}
    yield {"type": "Frame",
           "frame": {"t": 2.0, "palm_pos": [0.0, 0.0, 0.25],
                     "palm_normal": [0.0, 0.0, -1.0], "pinch_strength": 0.0,
                     "grab_strength": 0.0,
                     "fingers_extended": [True] * 5, "confidence": 1.0,
                     "hand_present": True}}
    yield {"type": "Trigger", "stimulus": "CallerHangup"}
    yield {"type": "Nonsense"}


def main() -> None:
    session = Session()
    lines = []
    for msg in client_messages():
        lines.append("> " + json.dumps(msg, sort_keys=True))
        for reply in session.handle_message(msg):
            lines.append("< " + json.dumps(reply, sort_keys=True))
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT} ({len(lines)} lines)")


if __name__ == "__main__":
    main()
