"""Simulated ultrasonic phased array: focusing solver, field evaluation, envelopes.

Monopole 1/r propagation, no directivity or absorption; intensity is linear
|p|. Defaults model a 16x16 grid of 40 kHz emitters at 10 mm pitch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .haptic_patterns import EnvelopeMode, FocalSample

Vec3 = Tuple[float, float, float]

AM_RATE_HZ = 200.0


@dataclass(frozen=True)
class TransducerArray:
    elements: np.ndarray              # (n, 3) positions, meters
    carrier_freq: float = 40000.0
    amplitudes: Optional[np.ndarray] = None  # (n,) source strengths, default 1
    speed_of_sound: float = 343.0

    def __post_init__(self) -> None:
        el = np.asarray(self.elements, dtype=float)
        if el.ndim != 2 or el.shape[1] != 3 or el.shape[0] < 1:
            raise ValueError("elements must be a non-empty (n, 3) array")
        object.__setattr__(self, "elements", el)
        if self.carrier_freq <= 0:
            raise ValueError("carrier_freq must be positive")
        amps = self.amplitudes
        amps = np.ones(len(el)) if amps is None else np.asarray(amps, dtype=float)
        if amps.shape != (len(el),):
            raise ValueError("amplitudes must match element count")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def wavenumber(self) -> float:
        return 2.0 * math.pi * self.carrier_freq / self.speed_of_sound

    @property
    def wavelength(self) -> float:
        return self.speed_of_sound / self.carrier_freq


def grid_array(nx: int = 16, ny: int = 16, pitch: float = 0.01,
               **kwargs) -> TransducerArray:
    """Centered rectangular emitter grid on the z=0 plane."""
    xs = (np.arange(nx) - (nx - 1) / 2.0) * pitch
    ys = (np.arange(ny) - (ny - 1) / 2.0) * pitch
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    el = np.column_stack([gx.ravel(), gy.ravel(), np.zeros(nx * ny)])
    return TransducerArray(elements=el, **kwargs)


@dataclass(frozen=True)
class PhaseSolution:
    phases: np.ndarray  # (n,) radians in [0, 2*pi)

    def __post_init__(self) -> None:
        ph = np.asarray(self.phases, dtype=float)
        if np.any(ph < 0) or np.any(ph >= 2.0 * math.pi):
            raise ValueError("phases must lie in [0, 2*pi)")
        object.__setattr__(self, "phases", ph)


def _distances(array: TransducerArray, points: np.ndarray) -> np.ndarray:
    """(m, n) distances from each query point to each element."""
    diff = points[:, None, :] - array.elements[None, :, :]
    return np.sqrt(np.sum(diff * diff, axis=2))


def solve_focus(array: TransducerArray, focal: Vec3) -> PhaseSolution:
    """Time-of-flight phases so all wavefronts arrive at `focal` in phase.

    phi_i = (-k * r_i) mod 2*pi with r_i the element-to-focus distance.
    """
    r = _distances(array, np.asarray([focal], dtype=float))[0]
    if np.any(r == 0.0):
        raise ValueError("focal point coincides with an element")
    phases = np.mod(-array.wavenumber * r, 2.0 * math.pi)
    return PhaseSolution(phases=phases)


def pressure_at(array: TransducerArray, phases: PhaseSolution,
                q: Vec3) -> complex:
    """Complex pressure amplitude at `q`: sum of (A_i/r_i) e^{i(k r_i + phi_i)}."""
    return pressure_at_many(array, phases, np.asarray([q], dtype=float))[0]


def pressure_at_many(array: TransducerArray, phases: PhaseSolution,
                     points: np.ndarray) -> np.ndarray:
    points = np.asarray(points, dtype=float)
    r = _distances(array, points)
    if np.any(r == 0.0):
        raise ValueError("query point coincides with an element")
    k = array.wavenumber
    return np.sum((array.amplitudes / r)
                  * np.exp(1j * (k * r + phases.phases)), axis=1)


def coherent_sum(array: TransducerArray, focal: Vec3) -> float:
    """Independent oracle for the focused magnitude: sum of A_i / r_i."""
    r = _distances(array, np.asarray([focal], dtype=float))[0]
    return float(np.sum(array.amplitudes / r))


@dataclass(frozen=True)
class PlaneSpec:
    """Axis-aligned sampling rectangle: `axis` held at `value`.

    u/v are the remaining two axes in (x, y, z) order.
    """

    axis: str                       # "x" | "y" | "z"
    value: float
    u_range: Tuple[float, float]
    v_range: Tuple[float, float]
    nu: int
    nv: int

    def __post_init__(self) -> None:
        if self.axis not in ("x", "y", "z"):
            raise ValueError("axis must be x, y or z")
        if self.nu < 2 or self.nv < 2:
            raise ValueError("resolution must be at least 2x2")
        if not (self.u_range[0] < self.u_range[1]
                and self.v_range[0] < self.v_range[1]):
            raise ValueError("degenerate plane")

    def axes(self) -> Tuple[int, int, int]:
        fixed = "xyz".index(self.axis)
        u, v = [a for a in range(3) if a != fixed]
        return fixed, u, v

    def points(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        fixed, ua, va = self.axes()
        us = np.linspace(*self.u_range, self.nu)
        vs = np.linspace(*self.v_range, self.nv)
        gu, gv = np.meshgrid(us, vs, indexing="ij")
        pts = np.empty((self.nu * self.nv, 3))
        pts[:, fixed] = self.value
        pts[:, ua] = gu.ravel()
        pts[:, va] = gv.ravel()
        return us, vs, pts


@dataclass(frozen=True)
class FieldGrid:
    us: np.ndarray
    vs: np.ndarray
    magnitude: np.ndarray           # (nu, nv) |p|, row-major over u
    argmax_pos: Vec3


def field_grid(array: TransducerArray, phases: PhaseSolution,
               plane: PlaneSpec) -> FieldGrid:
    """|p| sampled over the plane, plus the location of the sampled maximum."""
    us, vs, pts = plane.points()
    mag = np.abs(pressure_at_many(array, phases, pts)).reshape(plane.nu, plane.nv)
    iu, iv = np.unravel_index(np.argmax(mag), mag.shape)
    fixed, ua, va = plane.axes()
    pos = [0.0, 0.0, 0.0]
    pos[fixed] = plane.value
    pos[ua] = float(us[iu])
    pos[va] = float(vs[iv])
    return FieldGrid(us=us, vs=vs, magnitude=mag, argmax_pos=tuple(pos))


def field_csv(grid: FieldGrid) -> str:
    """CSV export: first row u coordinates, first column v coordinates."""
    lines = ["," + ",".join(repr(float(u)) for u in grid.us)]
    for j, v in enumerate(grid.vs):
        row = ",".join(repr(float(m)) for m in grid.magnitude[:, j])
        lines.append(f"{float(v)!r},{row}")
    return "\n".join(lines) + "\n"


def am_envelope(t: float) -> float:
    """200 Hz raised-cosine on/off envelope; 0 at t=0, period 5 ms."""
    return (1.0 - math.cos(2.0 * math.pi * AM_RATE_HZ * t)) / 2.0


def render_timeline(array: TransducerArray,
                    samples: Sequence[FocalSample]) -> List[Tuple[float, PhaseSolution, float]]:
    """One (t, phases, drive) entry per focal sample.

    AM samples get the 200 Hz envelope applied to their intensity; STM relies
    on focus motion, so drive stays at the commanded intensity.
    """
    out: List[Tuple[float, PhaseSolution, float]] = []
    prev_t: Optional[float] = None
    for s in samples:
        if prev_t is not None and s.t < prev_t:
            raise ValueError(f"out-of-order sample at t={s.t}")
        prev_t = s.t
        drive = s.intensity
        if s.envelope_mode is EnvelopeMode.AM_200HZ:
            drive *= am_envelope(s.t)
        out.append((s.t, solve_focus(array, s.pos), drive))
    return out
