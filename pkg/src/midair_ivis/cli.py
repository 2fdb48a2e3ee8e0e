"""Command-line entry point.

Subcommands: run, score, synth, field, haptics. Exit codes: 0 pass, 1 fail,
2 usage error (argparse's native convention).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import scenario_harness
from .acoustic_field import PlaneSpec, field_csv, field_grid, grid_array, solve_focus
from .gesture_engine import RecognizerConfig
from .hand_stream import HandFrame, SYNTH_KINDS, synth_gesture, write_trajectory
from .haptic_patterns import (Sensation, SensationKind, sample_timeline,
                              write_timeline)
from .ivis_core import NavMethod


def _load_config(path: str | None) -> RecognizerConfig:
    if path is None:
        return RecognizerConfig()
    return RecognizerConfig.from_text(Path(path).read_text())


def _cmd_run(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    scenario_path = Path(args.scenario)
    scenario = scenario_harness.parse_scenario(
        scenario_path.read_text(), name=scenario_path.stem)
    nav = None
    if args.nav_method:
        nav = (NavMethod.FINGER_POSE if args.nav_method == "finger"
               else NavMethod.RADIAL3D)
    report = scenario_harness.run(scenario, config=config,
                                  base_dir=scenario_path.parent, nav_method=nav)
    text = report.to_text(include_timing=args.timing)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def _cmd_score(args: argparse.Namespace) -> int:
    labels = scenario_harness.parse_labels(Path(args.labels).read_text())
    events = scenario_harness.parse_events(Path(args.events).read_text())
    precision, recall = scenario_harness.score(labels, events, tolerance=args.tol)
    print(f"precision {precision!r}")
    print(f"recall {recall!r}")
    return 0


def _cmd_synth(args: argparse.Namespace) -> int:
    traj = synth_gesture(args.kind, start=args.start, scale=args.scale,
                         pose_count=args.pose_count, seed=args.seed)
    text = write_trajectory(traj)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_field(args: argparse.Namespace) -> int:
    focus = tuple(float(x) for x in args.focus.split(","))
    if len(focus) != 3:
        print("field: --focus must be x,y,z", file=sys.stderr)
        return 2
    axis, _, value = args.plane.partition("=")
    if axis not in ("x", "y", "z") or not value:
        print("field: --plane must look like z=0.2", file=sys.stderr)
        return 2
    array = grid_array()
    phases = solve_focus(array, focus)  # type: ignore[arg-type]
    step = args.res / 1000.0
    half = args.extent / 2.0
    n = max(2, int(round(args.extent / step)) + 1)
    plane = PlaneSpec(axis=axis, value=float(value),
                      u_range=(-half, half), v_range=(-half, half), nu=n, nv=n)
    grid = field_grid(array, phases, plane)
    csv = field_csv(grid)
    if args.out:
        Path(args.out).write_text(csv)
    else:
        sys.stdout.write(csv)
    print(f"# argmax {grid.argmax_pos}", file=sys.stderr)
    return 0


def _cmd_haptics(args: argparse.Namespace) -> int:
    sensation = Sensation(SensationKind(args.sensation),
                          direction=args.direction, level=args.level)
    hand = HandFrame(t=0.0, hand_present=True, palm_pos=(0.0, 0.0, 0.25),
                     palm_normal=(0.0, 0.0, 1.0), pinch_strength=0.0,
                     grab_strength=0.0,
                     fingers_extended=(True,) * 5, confidence=1.0)
    samples = sample_timeline(sensation, hand, duration=args.duration)
    text = write_timeline(samples)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midair-ivis",
        description="Mid-air haptic gesture IVIS simulator")
    parser.add_argument("--print-config", action="store_true",
                        help="print recognizer defaults as key=value and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("run", help="replay a scenario file")
    p.add_argument("scenario")
    p.add_argument("--config")
    p.add_argument("--nav-method", choices=["finger", "radial"])
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true",
                   help="include latency fields in the report")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("score", help="precision/recall of events vs labels")
    p.add_argument("labels")
    p.add_argument("events")
    p.add_argument("--tol", type=float, default=0.25)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("synth", help="generate a synthetic gesture trajectory")
    p.add_argument("kind", choices=SYNTH_KINDS)
    p.add_argument("--out")
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--scale", type=float, default=1.5)
    p.add_argument("--pose-count", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("field", help="export a pressure-field CSV slice")
    p.add_argument("--focus", required=True, help="x,y,z in meters")
    p.add_argument("--plane", required=True, help="e.g. z=0.2")
    p.add_argument("--res", type=float, default=1.0, help="grid step, mm")
    p.add_argument("--extent", type=float, default=0.1, help="plane side, m")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_field)

    p = sub.add_parser("haptics", help="export a haptic focal timeline")
    p.add_argument("sensation", choices=[k.value for k in SensationKind])
    p.add_argument("--direction", choices=["left", "right"], default="right")
    p.add_argument("--level", type=float, default=0.5)
    p.add_argument("--duration", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_haptics)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.print_config:
        sys.stdout.write(RecognizerConfig().to_text())
        return 0
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
