"""Hand-tracking frame model, trajectory I/O, kinematics, and synthetic gestures.

Coordinate frame: origin at the array-surface center, x lateral-right,
y depth-forward, z vertical-up. Frames nominally arrive at 100 Hz.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from typing import Iterable, List, Sequence, Tuple

Vec3 = Tuple[float, float, float]

DEFAULT_RATE_HZ = 100.0


class TrajectoryError(ValueError):
    """Raised for malformed trajectory data (parse or invariant failures)."""


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


@dataclass(frozen=True)
class HandFrame:
    """One tracked-hand sample.

    palm_normal must be unit length when the hand is present; pinch/grab
    strengths and confidence live in [0, 1]; fingers_extended is ordered
    thumb, index, middle, ring, little.
    """

    t: float
    hand_present: bool
    palm_pos: Vec3
    palm_normal: Vec3
    pinch_strength: float
    grab_strength: float
    fingers_extended: Tuple[bool, bool, bool, bool, bool]
    confidence: float

    def __post_init__(self) -> None:
        if not _finite(self.t, *self.palm_pos, *self.palm_normal,
                       self.pinch_strength, self.grab_strength, self.confidence):
            raise TrajectoryError(f"non-finite field in frame at t={self.t!r}")
        for name, v in (("pinch_strength", self.pinch_strength),
                        ("grab_strength", self.grab_strength),
                        ("confidence", self.confidence)):
            if not 0.0 <= v <= 1.0:
                raise TrajectoryError(f"range: {name}={v} outside [0, 1] at t={self.t}")
        if self.hand_present:
            norm = math.sqrt(sum(c * c for c in self.palm_normal))
            if abs(norm - 1.0) > 1e-6:
                raise TrajectoryError(f"palm_normal not unit length (|n|={norm}) at t={self.t}")
        if len(self.fingers_extended) != 5:
            raise TrajectoryError("fingers_extended must have 5 flags")


@dataclass(frozen=True)
class Trajectory:
    """Time-ordered sequence of HandFrames."""

    frames: Tuple[HandFrame, ...]
    nominal_rate: float = DEFAULT_RATE_HZ

    def __post_init__(self) -> None:
        if self.nominal_rate <= 0:
            raise TrajectoryError("nominal_rate must be positive")
        for a, b in zip(self.frames, self.frames[1:]):
            if b.t <= a.t:
                raise TrajectoryError(
                    f"non-monotone timestamp: t={b.t} follows t={a.t}")

    def __len__(self) -> int:
        return len(self.frames)


@dataclass(frozen=True)
class KinematicTrack:
    """Per-frame palm velocity and acceleration (central differences)."""

    palm_vel: Tuple[Vec3, ...]
    palm_acc: Tuple[Vec3, ...]

    def __len__(self) -> int:
        return len(self.palm_vel)


# Fixed field order of the line format; see README for the file contract.
_FIELDS = "t hand_present px py pz nx ny nz pinch grab f0 f1 f2 f3 f4 conf"


def format_frame(f: HandFrame) -> str:
    """Render one frame as a whitespace-separated record (round-trip exact)."""
    parts = [repr(f.t), "1" if f.hand_present else "0"]
    parts += [repr(v) for v in f.palm_pos]
    parts += [repr(v) for v in f.palm_normal]
    parts += [repr(f.pinch_strength), repr(f.grab_strength)]
    parts += ["1" if x else "0" for x in f.fingers_extended]
    parts.append(repr(f.confidence))
    return " ".join(parts)


def write_trajectory(traj: Trajectory) -> str:
    lines = [f"# {_FIELDS}", f"# nominal_rate {traj.nominal_rate!r}"]
    lines += [format_frame(f) for f in traj.frames]
    return "\n".join(lines) + "\n"


def parse_trajectory(text: str) -> Trajectory:
    """Parse line-delimited frames; the whole input is rejected on any bad line."""
    frames: List[HandFrame] = []
    rate = DEFAULT_RATE_HZ
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tokens = line[1:].split()
            if len(tokens) == 2 and tokens[0] == "nominal_rate":
                rate = float(tokens[1])
            continue
        tokens = line.split()
        if len(tokens) != 16:
            raise TrajectoryError(f"line {lineno}: expected 16 fields, got {len(tokens)}")
        try:
            vals = [float(x) for x in tokens]
        except ValueError as exc:
            raise TrajectoryError(f"line {lineno}: {exc}") from exc
        try:
            frame = HandFrame(
                t=vals[0],
                hand_present=bool(int(vals[1])),
                palm_pos=(vals[2], vals[3], vals[4]),
                palm_normal=(vals[5], vals[6], vals[7]),
                pinch_strength=vals[8],
                grab_strength=vals[9],
                fingers_extended=tuple(bool(int(v)) for v in vals[10:15]),
                confidence=vals[15],
            )
        except TrajectoryError as exc:
            raise TrajectoryError(f"line {lineno}: {exc}") from exc
        frames.append(frame)
    try:
        return Trajectory(frames=tuple(frames), nominal_rate=rate)
    except TrajectoryError as exc:
        raise TrajectoryError(f"non-monotone timestamp: {exc}") from exc


def derive_kinematics(traj: Trajectory) -> KinematicTrack:
    """Central-difference velocity/acceleration; one-sided at the ends.

    A single-frame trajectory yields zeros (streaming startup case).
    """
    n = len(traj)
    if n == 0:
        raise TrajectoryError("empty trajectory")
    zero: Vec3 = (0.0, 0.0, 0.0)
    if n == 1:
        return KinematicTrack(palm_vel=(zero,), palm_acc=(zero,))

    ts = [f.t for f in traj.frames]
    ps = [f.palm_pos for f in traj.frames]

    def diff(series: Sequence[Vec3], i: int) -> Vec3:
        if i == 0:
            j, k = 0, 1
        elif i == n - 1:
            j, k = n - 2, n - 1
        else:
            j, k = i - 1, i + 1
        dt = ts[k] - ts[j]
        return tuple((series[k][a] - series[j][a]) / dt for a in range(3))  # type: ignore[return-value]

    vel = tuple(diff(ps, i) for i in range(n))
    acc = tuple(diff(vel, i) for i in range(n))
    return KinematicTrack(palm_vel=vel, palm_acc=acc)


# ---------------------------------------------------------------------------
# Synthetic gesture generation (oracle inputs for the recognizer)

SYNTH_KINDS = (
    "swipe_left", "swipe_right", "twist", "tap",
    "pinch", "grab_release", "finger_pose", "idle",
)

_PALM_DOWN: Vec3 = (0.0, 0.0, -1.0)
_PALM_UP: Vec3 = (0.0, 0.0, 1.0)
_OPEN_HAND = (True, True, True, True, True)
_FIST = (False, False, False, False, False)

# Recognizer default thresholds the generator scales against; kept in sync
# with gesture_engine.RecognizerConfig defaults.
_SWIPE_MIN_DISP = 0.10
_SWIPE_MIN_SPEED = 0.6
_TAP_MIN_ACC = 10.0
_TAP_MIN_SPEED = 0.3
_POSE_DWELL = 0.5


def _smoothstep(s: float) -> float:
    return 3.0 * s * s - 2.0 * s * s * s


def _frames_from_samples(samples: Iterable[dict], rate: float) -> Trajectory:
    frames = tuple(HandFrame(**s) for s in samples)
    return Trajectory(frames=frames, nominal_rate=rate)


def _base_sample(t: float, pos: Vec3, normal: Vec3 = _PALM_DOWN,
                 pinch: float = 0.0, grab: float = 0.0,
                 fingers=_OPEN_HAND, conf: float = 1.0) -> dict:
    return dict(t=t, hand_present=True, palm_pos=pos, palm_normal=normal,
                pinch_strength=pinch, grab_strength=grab,
                fingers_extended=fingers, confidence=conf)


def synth_gesture(kind: str, start: float = 0.0,
                  base_pos: Vec3 = (0.0, 0.0, 0.25),
                  scale: float = 1.5, rate: float = DEFAULT_RATE_HZ,
                  pose_count: int = 2, seed: int = 0,
                  lead: float = 0.3, tail: float = 0.3,
                  duration: float = 1.0) -> Trajectory:
    """Generate a canonical trajectory that triggers exactly one `kind` event.

    `scale` multiplies the recognizer thresholds the motion is sized against
    (default 1.5x). `duration` only applies to idle.
    """
    if kind not in SYNTH_KINDS:
        raise ValueError(f"unknown gesture kind: {kind}")
    dt = 1.0 / rate
    samples: List[dict] = []

    def hold(t0: float, span: float, **kw) -> float:
        t = t0
        while t < t0 + span - 1e-12:
            samples.append(_base_sample(t, base_pos, **kw))
            t += dt
        return t

    if kind == "idle":
        rng = random.Random(seed)
        t = start
        while t < start + duration:
            jitter = tuple(base_pos[a] + rng.uniform(-5e-4, 5e-4) for a in range(3))
            samples.append(_base_sample(t, jitter))
            t += dt
        return _frames_from_samples(samples, rate)

    t = hold(start, lead)
    t0 = t

    if kind in ("swipe_left", "swipe_right"):
        sign = 1.0 if kind == "swipe_right" else -1.0
        disp = scale * _SWIPE_MIN_DISP
        peak = scale * _SWIPE_MIN_SPEED
        span = 1.5 * disp / peak  # smoothstep peak speed = 1.5 * mean
        while t < t0 + span:
            s = (t - t0) / span
            x = base_pos[0] + sign * disp * _smoothstep(s)
            samples.append(_base_sample(t, (x, base_pos[1], base_pos[2])))
            t += dt
        end_pos = (base_pos[0] + sign * disp, base_pos[1], base_pos[2])
        while t < t0 + span + tail:
            samples.append(_base_sample(t, end_pos))
            t += dt
    elif kind == "tap":
        # Cosine dip: both |vz| and |az| exceed their thresholds around T/8.
        vz_target = 1.5 * scale * _TAP_MIN_SPEED
        az_target = 1.1 * scale * _TAP_MIN_ACC
        span = 2.0 * math.pi * vz_target / az_target
        amp = vz_target * span / (0.7071 * math.pi)
        while t < t0 + span:
            ph = 2.0 * math.pi * (t - t0) / span
            z = base_pos[2] - 0.5 * amp * (1.0 - math.cos(ph))
            samples.append(_base_sample(t, (base_pos[0], base_pos[1], z)))
            t += dt
        t = hold(t, tail)
    elif kind == "twist":
        span = 1.0 / max(scale, 1.0)  # faster twist stays within the window
        while t < t0 + span:
            # full flip down -> up -> down over span
            u = (t - t0) / span
            angle = math.pi * (1.0 - abs(2.0 * u - 1.0))
            normal = (0.0, math.sin(angle - math.pi), math.cos(angle - math.pi))
            samples.append(_base_sample(t, base_pos, normal=normal))
            t += dt
        t = hold(t, tail)
    elif kind == "pinch":
        ramp, hold_span, rise = 0.2, 0.3, 0.10
        while t < t0 + ramp:
            p = (t - t0) / ramp
            samples.append(_base_sample(t, base_pos, pinch=min(1.0, p)))
            t += dt
        t1 = t
        while t < t1 + hold_span:
            s = (t - t1) / hold_span
            z = base_pos[2] + rise * _smoothstep(s)
            samples.append(_base_sample(t, (base_pos[0], base_pos[1], z), pinch=1.0))
            t += dt
        top = (base_pos[0], base_pos[1], base_pos[2] + rise)
        t2 = t
        while t < t2 + ramp:
            p = 1.0 - (t - t2) / ramp
            samples.append(_base_sample(t, top, pinch=max(0.0, p)))
            t += dt
        while t < t2 + ramp + tail:
            samples.append(_base_sample(t, top))
            t += dt
    elif kind == "grab_release":
        ramp, hold_span = 0.15, 0.2
        while t < t0 + ramp:
            g = min(1.0, (t - t0) / ramp)
            samples.append(_base_sample(t, base_pos, grab=g, fingers=_FIST))
            t += dt
        t1 = t
        while t < t1 + hold_span:
            samples.append(_base_sample(t, base_pos, grab=1.0, fingers=_FIST))
            t += dt
        t2 = t
        while t < t2 + ramp:
            g = max(0.0, 1.0 - (t - t2) / ramp)
            samples.append(_base_sample(t, base_pos, grab=g, fingers=_FIST))
            t += dt
        t = hold(t, tail)
    elif kind == "finger_pose":
        if not 1 <= pose_count <= 4:
            raise ValueError("pose_count must be in 1..4")
        fingers = (False,) + tuple(i < pose_count for i in range(4))
        span = scale * _POSE_DWELL
        t = hold(t, span + 0.1, fingers=fingers)

    return _frames_from_samples(samples, rate)


def concat(*trajs: Trajectory) -> Trajectory:
    """Concatenate trajectories (timestamps must already be disjoint and ordered)."""
    frames: Tuple[HandFrame, ...] = tuple(f for tr in trajs for f in tr.frames)
    rate = trajs[0].nominal_rate if trajs else DEFAULT_RATE_HZ
    return Trajectory(frames=frames, nominal_rate=rate)


def translate(traj: Trajectory, offset: Vec3) -> Trajectory:
    """Rigidly translate every palm position by `offset`."""
    frames = tuple(
        replace(f, palm_pos=tuple(f.palm_pos[a] + offset[a] for a in range(3)))
        for f in traj.frames)
    return Trajectory(frames=frames, nominal_rate=traj.nominal_rate)
