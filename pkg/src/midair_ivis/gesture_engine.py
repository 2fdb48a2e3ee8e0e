"""Stateful gesture recognizer: HandFrame streams in, GestureEvents out.

Discrete detections are gated to an interaction box above the array and
followed by a 2 s cross-kind refractory window. Pinch phase events form a
continuous family and are exempt from that window so value clutching works.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Deque, List, Optional, Tuple

from .hand_stream import HandFrame, KinematicTrack, Trajectory, Vec3, derive_kinematics


@dataclass(frozen=True)
class InteractionBox:
    """Gesture acceptance volume: 30 x 30 cm footprint, 5-45 cm above the array."""

    x_range: Tuple[float, float] = (-0.15, 0.15)
    y_range: Tuple[float, float] = (-0.15, 0.15)
    z_range: Tuple[float, float] = (0.05, 0.45)

    def contains(self, p: Vec3) -> bool:
        return (self.x_range[0] <= p[0] <= self.x_range[1]
                and self.y_range[0] <= p[1] <= self.y_range[1]
                and self.z_range[0] <= p[2] <= self.z_range[1])


def contains(box: InteractionBox, p: Vec3) -> bool:
    return box.contains(p)


@dataclass(frozen=True)
class RecognizerConfig:
    swipe_min_disp: float = 0.10
    swipe_min_speed: float = 0.6
    swipe_window: float = 0.5
    tap_min_acc: float = 10.0
    tap_min_speed: float = 0.3
    twist_window: float = 1.5
    twist_normal_thresh: float = 0.7
    pinch_on: float = 0.8
    pinch_off: float = 0.5
    grab_on: float = 0.9
    grab_off: float = 0.3
    grab_release_window: float = 1.0
    pose_dwell: float = 0.5
    radial_threshold: float = 0.08
    radial_deadzone: float = 0.04
    debounce: float = 2.0

    def __post_init__(self) -> None:
        if not self.pinch_off < self.pinch_on:
            raise ValueError("pinch_off must be < pinch_on")
        if not self.grab_off < self.grab_on:
            raise ValueError("grab_off must be < grab_on")
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"{f.name} must be positive")

    def to_text(self) -> str:
        return "\n".join(f"{f.name}={getattr(self, f.name)!r}" for f in fields(self)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RecognizerConfig":
        """Load from flat key=value lines; unknown keys are rejected."""
        known = {f.name for f in fields(cls)}
        kwargs = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in known:
                raise ValueError(f"line {lineno}: unknown config key {key!r}")
            kwargs[key] = float(value)
        return cls(**kwargs)


class Kind(str, Enum):
    SWIPE = "Swipe"
    TWIST = "Twist"
    TAP = "Tap"
    PINCH_ENGAGE = "PinchEngage"
    PINCH_MOVE = "PinchMove"
    PINCH_RELEASE = "PinchRelease"
    GRAB_RELEASE = "GrabRelease"
    FINGER_POSE = "FingerPose"


# Kinds that participate in box gating and the cross-kind refractory window.
DEBOUNCED_KINDS = frozenset({Kind.SWIPE, Kind.TWIST, Kind.TAP,
                             Kind.GRAB_RELEASE, Kind.FINGER_POSE})


@dataclass(frozen=True)
class GestureEvent:
    t: float
    kind: Kind
    pos: Vec3
    direction: Optional[str] = None       # Swipe: "left" | "right"
    delta: Optional[Vec3] = None          # PinchMove: (dx, dy, dz) since engage
    count: Optional[int] = None           # FingerPose: 1..4


def classify_finger_count(frame: HandFrame) -> Optional[int]:
    """Extended non-thumb finger count 1..4, or None when the pose is invalid.

    Thumb extended or zero extended fingers invalidates the pose, so an open
    resting palm never selects a menu item.
    """
    if not frame.hand_present:
        return None
    thumb, *others = frame.fingers_extended
    if thumb:
        return None
    count = sum(others)
    return count if 1 <= count <= 4 else None


def radial_direction(disp: Vec3, deadzone: float = 0.04) -> Optional[str]:
    """Dominant horizontal direction of a displacement: W/N/S/E or None.

    None inside the deadzone. -x is W, +x is E, +y is N, -y is S.
    """
    dx, dy = disp[0], disp[1]
    if math.hypot(dx, dy) < deadzone:
        return None
    if abs(dx) >= abs(dy):
        return "E" if dx > 0 else "W"
    return "N" if dy > 0 else "S"


class StreamOrderError(ValueError):
    """Frames handed to the recognizer out of time order."""


@dataclass
class Recognizer:
    """Per-stream stateful fold; one instance per input stream."""

    config: RecognizerConfig = field(default_factory=RecognizerConfig)
    box: InteractionBox = field(default_factory=InteractionBox)

    _last_t: Optional[float] = field(default=None, repr=False)
    _x_hist: Deque[Tuple[float, float, float]] = field(default_factory=deque, repr=False)
    _twist_state: str = field(default="idle", repr=False)
    _twist_t_down: float = field(default=0.0, repr=False)
    _tap_armed: bool = field(default=True, repr=False)
    _pinch_engaged: bool = field(default=False, repr=False)
    _pinch_origin: Optional[Vec3] = field(default=None, repr=False)
    _prev_pinch: float = field(default=0.0, repr=False)
    _grab_t_on: Optional[float] = field(default=None, repr=False)
    _prev_grab: float = field(default=0.0, repr=False)
    _pose_count: Optional[int] = field(default=None, repr=False)
    _pose_since: float = field(default=0.0, repr=False)
    _pose_fired: bool = field(default=False, repr=False)
    _last_discrete: Optional[Tuple[float, Kind]] = field(default=None, repr=False)

    def step(self, frame: HandFrame, vel: Vec3, acc: Vec3) -> List[GestureEvent]:
        if self._last_t is not None and frame.t <= self._last_t:
            raise StreamOrderError(
                f"frame at t={frame.t} after t={self._last_t}")
        self._last_t = frame.t
        cfg = self.config
        t = frame.t
        events: List[GestureEvent] = []

        def emit_discrete(kind: Kind, **kw) -> None:
            if not self.box.contains(frame.palm_pos):
                return
            if self._last_discrete is not None:
                t0, k0 = self._last_discrete
                if kind != k0 and t - t0 < cfg.debounce:
                    return
            events.append(GestureEvent(t=t, kind=kind, pos=frame.palm_pos, **kw))
            self._last_discrete = (t, kind)

        if not frame.hand_present:
            self._reset_motion_state()
            return events

        # --- swipe: trailing-window lateral displacement + peak speed
        self._x_hist.append((t, frame.palm_pos[0], vel[0]))
        while self._x_hist and self._x_hist[0][0] < t - cfg.swipe_window:
            self._x_hist.popleft()
        disp = frame.palm_pos[0] - self._x_hist[0][1]
        if abs(disp) >= cfg.swipe_min_disp:
            sign = 1.0 if disp > 0 else -1.0
            peak = max((sign * vx for _, _, vx in self._x_hist), default=0.0)
            if peak >= cfg.swipe_min_speed:
                emit_discrete(Kind.SWIPE,
                              direction="right" if disp > 0 else "left")
                self._x_hist.clear()
                self._x_hist.append((t, frame.palm_pos[0], vel[0]))

        # --- twist: palm normal flips down -> up -> down within the window
        nz = frame.palm_normal[2]
        if self._twist_state == "idle":
            if nz < -cfg.twist_normal_thresh:
                self._twist_state = "down"
                self._twist_t_down = t
        elif self._twist_state == "down":
            if nz < -cfg.twist_normal_thresh:
                self._twist_t_down = t
            elif nz > cfg.twist_normal_thresh:
                self._twist_state = "up"
        elif self._twist_state == "up":
            if t - self._twist_t_down > cfg.twist_window:
                self._twist_state = "idle"
            elif nz < -cfg.twist_normal_thresh:
                emit_discrete(Kind.TWIST)
                self._twist_state = "down"
                self._twist_t_down = t

        # --- tap: downward acceleration spike while moving down (edge trigger)
        tapping = acc[2] <= -cfg.tap_min_acc and vel[2] <= -cfg.tap_min_speed
        if tapping and self._tap_armed:
            emit_discrete(Kind.TAP)
        self._tap_armed = not tapping

        # --- pinch with hysteresis; moves are continuous while engaged
        p = frame.pinch_strength
        if not self._pinch_engaged and self._prev_pinch < cfg.pinch_on <= p:
            if self.box.contains(frame.palm_pos):
                self._pinch_engaged = True
                self._pinch_origin = frame.palm_pos
                events.append(GestureEvent(t=t, kind=Kind.PINCH_ENGAGE,
                                           pos=frame.palm_pos))
        elif self._pinch_engaged:
            if p <= cfg.pinch_off:
                self._pinch_engaged = False
                self._pinch_origin = None
                events.append(GestureEvent(t=t, kind=Kind.PINCH_RELEASE,
                                           pos=frame.palm_pos))
            else:
                o = self._pinch_origin
                delta = (frame.palm_pos[0] - o[0], frame.palm_pos[1] - o[1],
                         frame.palm_pos[2] - o[2])
                events.append(GestureEvent(t=t, kind=Kind.PINCH_MOVE,
                                           pos=frame.palm_pos, delta=delta))
        self._prev_pinch = p

        # --- grab-release: strong grab then quick release
        g = frame.grab_strength
        if self._prev_grab < cfg.grab_on <= g:
            self._grab_t_on = t
        if self._grab_t_on is not None and g <= cfg.grab_off:
            if t - self._grab_t_on <= cfg.grab_release_window:
                emit_discrete(Kind.GRAB_RELEASE)
            self._grab_t_on = None
        self._prev_grab = g

        # --- finger pose: stable non-thumb count held for the dwell time
        count = classify_finger_count(frame)
        if count != self._pose_count:
            self._pose_count = count
            self._pose_since = t
            self._pose_fired = False
        elif (count is not None and not self._pose_fired
              and t - self._pose_since >= cfg.pose_dwell):
            emit_discrete(Kind.FINGER_POSE, count=count)
            self._pose_fired = True

        return events

    def _reset_motion_state(self) -> None:
        self._x_hist.clear()
        self._twist_state = "idle"
        self._tap_armed = True
        if self._pinch_engaged:
            self._pinch_engaged = False
            self._pinch_origin = None
        self._grab_t_on = None
        self._pose_count = None
        self._pose_fired = False


def recognize(traj: Trajectory, config: Optional[RecognizerConfig] = None,
              box: Optional[InteractionBox] = None,
              kin: Optional[KinematicTrack] = None) -> List[GestureEvent]:
    """Run a fresh recognizer over a whole trajectory."""
    rec = Recognizer(config=config or RecognizerConfig(),
                     box=box or InteractionBox())
    if kin is None:
        kin = derive_kinematics(traj) if len(traj) else None
    events: List[GestureEvent] = []
    for i, frame in enumerate(traj.frames):
        events.extend(rec.step(frame, kin.palm_vel[i], kin.palm_acc[i]))
    return events
