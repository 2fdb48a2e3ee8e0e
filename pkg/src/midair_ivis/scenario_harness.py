"""Scenario replay harness: trajectories in, scored events and IVIS outcomes out.

The simulated clock is driven by frame timestamps, never the wall clock, so a
scenario replay is deterministic. Wall time is only sampled to report
per-frame pipeline latency, and those fields are excluded from report
comparison.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import acoustic_field
from .gesture_engine import (GestureEvent, Kind, Recognizer, RecognizerConfig)
from .hand_stream import Trajectory, derive_kinematics, parse_trajectory
from .haptic_patterns import Sensation, SensationKind, sample_focus
from .ivis_core import (Effect, IvisState, NavMethod, Stimulus, dispatch,
                        HapticTrigger, inject)

DEFAULT_SCORE_TOLERANCE = 0.25


class ScenarioError(ValueError):
    """Malformed scenario file or predicate."""


@dataclass(frozen=True)
class Step:
    at: float
    action: str          # play | inject | set_nav_method | expect
    arg: str


@dataclass(frozen=True)
class Scenario:
    name: str
    steps: Tuple[Step, ...]
    seed: int = 0

    def __post_init__(self) -> None:
        for a, b in zip(self.steps, self.steps[1:]):
            if b.at < a.at:
                raise ScenarioError(f"step times decrease at t={b.at}")


def parse_scenario(text: str, name: str = "scenario") -> Scenario:
    """Parse line-delimited `at action args` steps; `#` lines are comments."""
    steps: List[Step] = []
    seed = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split(None, 2)
        if tokens[0] == "seed":
            seed = int(tokens[1])
            continue
        if len(tokens) < 3:
            raise ScenarioError(f"line {lineno}: expected `at action args`")
        try:
            at = float(tokens[0])
        except ValueError as exc:
            raise ScenarioError(f"line {lineno}: bad time {tokens[0]!r}") from exc
        action = tokens[1]
        if action not in ("play", "inject", "set_nav_method", "expect"):
            raise ScenarioError(f"line {lineno}: unknown action {action!r}")
        steps.append(Step(at=at, action=action, arg=tokens[2]))
    return Scenario(name=name, steps=tuple(steps), seed=seed)


@dataclass
class StepOutcome:
    step: Step
    ok: bool
    detail: str = ""


@dataclass
class Report:
    scenario: str
    outcomes: List[StepOutcome] = field(default_factory=list)
    events: List[Tuple[float, GestureEvent]] = field(default_factory=list)
    effects: List[Tuple[float, Effect]] = field(default_factory=list)
    final_state: Optional[IvisState] = None
    frame_count: int = 0
    latency_mean_ms: float = 0.0
    latency_max_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(o.ok for o in self.outcomes)

    def to_text(self, include_timing: bool = False) -> str:
        """Deterministic report text; timing fields are opt-in."""
        lines = [f"scenario {self.scenario}",
                 f"result {'pass' if self.passed else 'fail'}"]
        for o in self.outcomes:
            status = "ok" if o.ok else "FAIL"
            detail = f" {o.detail}" if o.detail else ""
            lines.append(f"step {o.step.at!r} {o.step.action} {o.step.arg} -> {status}{detail}")
        for t, ev in self.events:
            extra = ""
            if ev.direction:
                extra = f" {ev.direction}"
            elif ev.count is not None:
                extra = f" {ev.count}"
            lines.append(f"event {t!r} {ev.kind.value}{extra}")
        for t, eff in self.effects:
            lines.append(f"effect {t!r} {_effect_repr(eff)}")
        if self.final_state is not None:
            lines.append("final-state")
            lines.append(self.final_state.to_text().rstrip("\n"))
        if include_timing:
            lines.append(f"frames {self.frame_count}")
            lines.append(f"latency_mean_ms {self.latency_mean_ms:.3f}")
            lines.append(f"latency_max_ms {self.latency_max_ms:.3f}")
        return "\n".join(lines) + "\n"


def _effect_repr(eff: Effect) -> str:
    parts = [eff.kind]
    for name in ("focused_region", "label", "action"):
        v = getattr(eff, name, None)
        if v:
            parts.append(str(v))
    sensation = getattr(eff, "sensation", None)
    if sensation is not None:
        parts.append(sensation.kind.value)
    return " ".join(parts)


_STATE_FIELDS = ("mode", "nav_method", "media.playing", "media.track_index",
                 "media.volume", "temperature", "fan", "nav_zoom", "modal",
                 "radial_highlight")


def check_predicate(state: IvisState, predicate: str) -> Tuple[bool, str]:
    """Evaluate a `field=value` predicate against a state snapshot."""
    key, sep, want = predicate.partition("=")
    key = key.strip()
    if not sep or key not in _STATE_FIELDS:
        raise ScenarioError(f"malformed predicate {predicate!r}")
    snapshot = dict(line.split("=", 1) for line in state.to_text().splitlines())
    got = snapshot[key]
    want = want.strip()
    try:
        ok = math.isclose(float(got), float(want), rel_tol=0, abs_tol=1e-9)
    except ValueError:
        ok = got == want
    return ok, f"{key}={got}"


@dataclass
class _Session:
    """Full pipeline fold: frames -> events -> IVIS state -> haptic foci."""

    config: RecognizerConfig
    array: acoustic_field.TransducerArray
    recognizer: Recognizer = None  # type: ignore[assignment]
    state: IvisState = field(default_factory=IvisState)
    clock: float = 0.0
    active_haptic: Optional[Tuple[float, Sensation]] = None

    def __post_init__(self) -> None:
        if self.recognizer is None:
            self.recognizer = Recognizer(config=self.config)

    def feed(self, traj: Trajectory, report: Report,
             latencies: List[float]) -> None:
        kin = derive_kinematics(traj)
        for i, frame in enumerate(traj.frames):
            t0 = time.perf_counter()
            events = self.recognizer.step(frame, kin.palm_vel[i], kin.palm_acc[i])
            for ev in events:
                report.events.append((ev.t, ev))
                self.state, effects = dispatch(self.state, ev)
                for eff in effects:
                    report.effects.append((ev.t, eff))
                    if isinstance(eff, HapticTrigger):
                        self.active_haptic = (ev.t, eff.sensation)
            # Haptic + focusing stage of the per-frame pipeline.
            if self.active_haptic is not None:
                since, sensation = self.active_haptic
                sample = sample_focus(sensation, max(0.0, frame.t - since), frame)
                if sample is None:
                    self.active_haptic = None
                else:
                    acoustic_field.solve_focus(self.array, sample.pos)
            latencies.append(time.perf_counter() - t0)
            self.clock = frame.t
            report.frame_count += 1

    def inject(self, stim: Stimulus, report: Report) -> None:
        self.state, effects = inject(self.state, stim)
        for eff in effects:
            report.effects.append((self.clock, eff))


def run(scenario: Scenario, config: Optional[RecognizerConfig] = None,
        base_dir: Optional[Path] = None,
        nav_method: Optional[NavMethod] = None) -> Report:
    """Replay a scenario through the full pipeline and evaluate its Expects."""
    config = config or RecognizerConfig()
    base = base_dir or Path(".")
    report = Report(scenario=scenario.name)
    session = _Session(config=config, array=acoustic_field.grid_array())
    if nav_method is not None:
        session.state = IvisState(nav_method=nav_method)
    latencies: List[float] = []

    for step in scenario.steps:
        session.clock = max(session.clock, step.at)
        if step.action == "play":
            path = base / step.arg
            try:
                traj = parse_trajectory(path.read_text())
            except OSError as exc:
                raise ScenarioError(f"unreadable trajectory {step.arg!r}: {exc}") from exc
            session.feed(traj, report, latencies)
            report.outcomes.append(StepOutcome(step=step, ok=True))
        elif step.action == "inject":
            session.inject(Stimulus(step.arg), report)
            report.outcomes.append(StepOutcome(step=step, ok=True))
        elif step.action == "set_nav_method":
            method = (NavMethod.FINGER_POSE if step.arg in ("finger", "FingerPose")
                      else NavMethod.RADIAL3D)
            session.state = replace(session.state, nav_method=method)
            report.outcomes.append(StepOutcome(step=step, ok=True))
        elif step.action == "expect":
            ok, detail = check_predicate(session.state, step.arg)
            report.outcomes.append(StepOutcome(step=step, ok=ok, detail=detail))

    report.final_state = session.state
    if latencies:
        report.latency_mean_ms = 1000.0 * sum(latencies) / len(latencies)
        report.latency_max_ms = 1000.0 * max(latencies)
    return report


def score(labels: Sequence[Tuple[float, str]],
          events: Sequence[GestureEvent],
          tolerance: float = DEFAULT_SCORE_TOLERANCE) -> Tuple[float, float]:
    """Precision/recall by greedy one-to-one matching within +/- tolerance.

    Empty-denominator cases are defined as 1.0.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be non-negative")
    unmatched = list(range(len(events)))
    matched = 0
    for lt, lkind in labels:
        best = None
        best_dt = tolerance
        for idx in unmatched:
            ev = events[idx]
            dt = abs(ev.t - lt)
            if ev.kind.value == lkind and dt <= best_dt:
                best, best_dt = idx, dt
        if best is not None:
            unmatched.remove(best)
            matched += 1
    precision = matched / len(events) if events else 1.0
    recall = matched / len(labels) if labels else 1.0
    return precision, recall


def parse_labels(text: str) -> List[Tuple[float, str]]:
    """Parse `t kind` label lines."""
    out: List[Tuple[float, str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        t, kind = line.split()
        out.append((float(t), kind))
    return out


def parse_events(text: str) -> List[GestureEvent]:
    """Parse `t kind` event lines into minimal GestureEvents for scoring."""
    out: List[GestureEvent] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        out.append(GestureEvent(t=float(tokens[0]), kind=Kind(tokens[1]),
                                pos=(0.0, 0.0, 0.25)))
    return out
