"""Haptic sensation library rendered as focal-point timelines.

Every sensation is a single-focus path. Circle-family sensations repeat at
70 Hz in the palm plane; scan sensations sweep a short line across the hand.
Intensity is a normalized [0, 1] drive command, not a physical pressure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from .hand_stream import HandFrame, Vec3

CIRCLE_RATE_HZ = 70.0         # path traversal (repetition) rate
DEFAULT_SAMPLE_RATE = 4000.0  # >= 57 points per 70 Hz revolution

CIRCLE_TAP_DURATION = 0.5
DOUBLE_TAP_WINDOWS = ((0.0, 0.3), (0.4, 0.7))
OPEN_CLOSE_DURATION = 0.7
SCAN_DURATION = 0.4
SCAN_LENGTH = 0.08
ANCHOR_POS: Vec3 = (0.0, 0.0, 0.20)
ANCHOR_INTENSITY = 0.2


class SensationKind(str, Enum):
    CIRCLE_TAP = "CircleTap"
    DOUBLE_TAP = "DoubleTap"
    SCAN_LINE = "ScanLine"
    FINGER_SCAN = "FingerScan"
    OPEN_CIRCLE = "OpenCircle"
    CLOSE_CIRCLE = "CloseCircle"
    VALUE_CIRCLE = "ValueCircle"
    ANCHOR_CIRCLE = "AnchorCircle"


class EnvelopeMode(str, Enum):
    AM_200HZ = "AM-200Hz"
    STM = "STM"


_FINITE_DURATIONS = {
    SensationKind.CIRCLE_TAP: CIRCLE_TAP_DURATION,
    SensationKind.DOUBLE_TAP: DOUBLE_TAP_WINDOWS[1][1],
    SensationKind.SCAN_LINE: SCAN_DURATION,
    SensationKind.FINGER_SCAN: SCAN_DURATION,
    SensationKind.OPEN_CIRCLE: OPEN_CLOSE_DURATION,
    SensationKind.CLOSE_CIRCLE: OPEN_CLOSE_DURATION,
}


@dataclass(frozen=True)
class Sensation:
    kind: SensationKind
    direction: str = "right"          # ScanLine sweep direction
    level: float = 0.0                # ValueCircle coupling in [0, 1]
    envelope_mode: EnvelopeMode = EnvelopeMode.STM

    @property
    def duration(self) -> Optional[float]:
        """Active duration in seconds, or None for continuous sensations."""
        return _FINITE_DURATIONS.get(self.kind)

    @property
    def world_fixed(self) -> bool:
        return self.kind is SensationKind.ANCHOR_CIRCLE


@dataclass(frozen=True)
class FocalSample:
    t: float
    pos: Vec3
    intensity: float
    envelope_mode: EnvelopeMode


def value_circle_params(level: float) -> Tuple[float, float]:
    """Radius and intensity of the value-coupled circle, both monotone in level."""
    if not 0.0 <= level <= 1.0:
        raise ValueError(f"level {level} outside [0, 1]")
    return 0.01 + 0.02 * level, 0.3 + 0.7 * level


def _palm_basis(hand: HandFrame) -> Tuple[Vec3, Vec3]:
    """Orthonormal (u, v) spanning the plane normal to palm_normal.

    u is the world x axis projected into the plane (falls back to y when the
    normal is nearly x), v = n x u, so a palm-up hand gets u=x, v=y.
    """
    n = hand.palm_normal
    seed = (1.0, 0.0, 0.0) if abs(n[0]) < 0.9 else (0.0, 1.0, 0.0)
    dot = sum(seed[i] * n[i] for i in range(3))
    u = tuple(seed[i] - dot * n[i] for i in range(3))
    mag = math.sqrt(sum(c * c for c in u))
    u = tuple(c / mag for c in u)
    v = (n[1] * u[2] - n[2] * u[1],
         n[2] * u[0] - n[0] * u[2],
         n[0] * u[1] - n[1] * u[0])
    return u, v  # type: ignore[return-value]


def _circle_point(center: Vec3, u: Vec3, v: Vec3, radius: float, t: float) -> Vec3:
    theta = 2.0 * math.pi * CIRCLE_RATE_HZ * t
    c, s = math.cos(theta), math.sin(theta)
    return tuple(center[i] + radius * (c * u[i] + s * v[i]) for i in range(3))  # type: ignore[return-value]


def sample_focus(s: Sensation, t: float, hand: HandFrame,
                 sample_rate: float = DEFAULT_SAMPLE_RATE) -> Optional[FocalSample]:
    """Focal sample of sensation `s` at time `t` since trigger, or None when inactive."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if sample_rate < 1000.0:
        raise ValueError("sample_rate must be >= 1000 Hz")

    kind = s.kind
    dur = s.duration
    if dur is not None and t > dur:
        return None

    intensity = 1.0
    if kind is SensationKind.ANCHOR_CIRCLE:
        u, v = (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)
        pos = _circle_point(ANCHOR_POS, u, v, 0.02, t)
        return FocalSample(t=t, pos=pos, intensity=ANCHOR_INTENSITY,
                           envelope_mode=s.envelope_mode)

    u, v = _palm_basis(hand)
    center = hand.palm_pos

    if kind is SensationKind.CIRCLE_TAP:
        pos = _circle_point(center, u, v, 0.02, t)
    elif kind is SensationKind.DOUBLE_TAP:
        if not any(a <= t <= b for a, b in DOUBLE_TAP_WINDOWS):
            return None
        pos = _circle_point(center, u, v, 0.02, t)
    elif kind is SensationKind.OPEN_CIRCLE:
        r = 0.01 + (0.02 / OPEN_CLOSE_DURATION) * t
        pos = _circle_point(center, u, v, r, t)
    elif kind is SensationKind.CLOSE_CIRCLE:
        r = 0.03 - (0.02 / OPEN_CLOSE_DURATION) * t
        pos = _circle_point(center, u, v, r, t)
    elif kind is SensationKind.VALUE_CIRCLE:
        r, intensity = value_circle_params(s.level)
        pos = _circle_point(center, u, v, 0.02, t)
    elif kind in (SensationKind.SCAN_LINE, SensationKind.FINGER_SCAN):
        # Sweep position advances across the hand while the focus oscillates
        # along the line (perpendicular to the sweep) at the circle rate.
        half = SCAN_LENGTH / 2.0
        sweep = -half + SCAN_LENGTH * (t / SCAN_DURATION)
        if kind is SensationKind.SCAN_LINE and s.direction == "left":
            sweep = -sweep
        osc = half * math.sin(2.0 * math.pi * CIRCLE_RATE_HZ * t)
        if kind is SensationKind.FINGER_SCAN:
            # line lies across the finger bases, offset forward of the palm center
            base = tuple(center[i] + 0.04 * v[i] for i in range(3))
            pos = tuple(base[i] + sweep * u[i] + osc * v[i] for i in range(3))
        else:
            pos = tuple(center[i] + sweep * u[i] + osc * v[i] for i in range(3))
    else:
        raise ValueError(f"unknown sensation kind: {kind}")

    return FocalSample(t=t, pos=pos, intensity=intensity,  # type: ignore[arg-type]
                       envelope_mode=s.envelope_mode)


def sample_timeline(s: Sensation, hand: HandFrame, duration: Optional[float] = None,
                    sample_rate: float = DEFAULT_SAMPLE_RATE) -> List[FocalSample]:
    """Uniformly sampled timeline over [0, duration]; skips inactive windows."""
    if duration is None:
        duration = s.duration
        if duration is None:
            raise ValueError("continuous sensation needs an explicit duration")
    n = int(round(duration * sample_rate))
    out: List[FocalSample] = []
    for i in range(n + 1):
        sample = sample_focus(s, i / sample_rate, hand, sample_rate)
        if sample is not None:
            out.append(sample)
    return out


def write_timeline(samples: Iterable[FocalSample]) -> str:
    """Export as line-delimited `t x y z intensity mode` text."""
    lines = ["# t x y z intensity mode"]
    for s in samples:
        lines.append(f"{s.t!r} {s.pos[0]!r} {s.pos[1]!r} {s.pos[2]!r} "
                     f"{s.intensity!r} {s.envelope_mode.value}")
    return "\n".join(lines) + "\n"


def parse_timeline(text: str) -> List[FocalSample]:
    out: List[FocalSample] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        t, x, y, z, inten, mode = line.split()
        out.append(FocalSample(t=float(t), pos=(float(x), float(y), float(z)),
                               intensity=float(inten),
                               envelope_mode=EnvelopeMode(mode)))
    return out
