"""Regenerate the golden end-to-end scenario corpus under assets/golden/.

The scenario mirrors the 14 verbally-instructed secondary tasks: mode
switches through all four modes, value adjustments, track skipping, and the
phone/route modal flows. Run from the repo root:

    python3 scripts/make_golden.py
"""

from pathlib import Path

from midair_ivis.hand_stream import synth_gesture, write_trajectory

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "assets" / "golden"

TRAJECTORIES = [
    # (filename, kind, start, kwargs)
    ("01_pose_media.traj", "finger_pose", 0.0, dict(pose_count=1)),
    ("02_tap_play.traj", "tap", 3.0, {}),
    ("03_swipe_next.traj", "swipe_right", 6.0, {}),
    ("04_twist_prev.traj", "twist", 9.0, {}),
    ("05_pinch_volume.traj", "pinch", 12.0, {}),
    ("06_pose_temperature.traj", "finger_pose", 15.0, dict(pose_count=2)),
    ("07_pinch_temperature.traj", "pinch", 18.0, {}),
    ("08_pose_fan.traj", "finger_pose", 21.0, dict(pose_count=3)),
    ("09_pinch_fan.traj", "pinch", 24.0, {}),
    ("10_pose_navigation.traj", "finger_pose", 27.0, dict(pose_count=4)),
    ("11_pinch_zoom.traj", "pinch", 30.0, {}),
    ("12_tap_answer.traj", "tap", 33.5, {}),
    ("13_grab_end_call.traj", "grab_release", 37.0, {}),
    ("14_tap_accept_route.traj", "tap", 40.5, {}),
]

SCENARIO = """\
# Golden 14-task scenario: one task per line group, FingerPose navigation.
0.0 set_nav_method finger
0.0 play 01_pose_media.traj
1.2 expect mode=Media
3.0 play 02_tap_play.traj
3.5 expect media.playing=true
6.0 play 03_swipe_next.traj
6.6 expect media.track_index=1
9.0 play 04_twist_prev.traj
10.0 expect media.track_index=0
12.0 play 05_pinch_volume.traj
13.0 expect media.volume=90.0
15.0 play 06_pose_temperature.traj
16.2 expect mode=Temperature
18.0 play 07_pinch_temperature.traj
19.0 expect temperature=26.0
21.0 play 08_pose_fan.traj
22.2 expect mode=Fan
24.0 play 09_pinch_fan.traj
25.0 expect fan=5
27.0 play 10_pose_navigation.traj
28.2 expect mode=Navigation
30.0 play 11_pinch_zoom.traj
31.0 expect nav_zoom=7
33.0 inject IncomingCall
33.0 expect modal=IncomingCall
33.5 play 12_tap_answer.traj
34.0 expect modal=ActiveCall
37.0 play 13_grab_end_call.traj
38.0 expect modal=none
40.0 inject RouteSuggestion
40.0 expect modal=RouteSuggestion
40.5 play 14_tap_accept_route.traj
41.0 expect modal=none
"""


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, kind, start, kwargs in TRAJECTORIES:
        traj = synth_gesture(kind, start=start, **kwargs)
        (GOLDEN / name).write_text(write_trajectory(traj))
    (GOLDEN / "golden.scenario").write_text(SCENARIO)

    from midair_ivis.gesture_engine import RecognizerConfig
    from midair_ivis.scenario_harness import parse_scenario, run

    scenario = parse_scenario(SCENARIO, name="golden")
    report = run(scenario, config=RecognizerConfig(), base_dir=GOLDEN)
    (GOLDEN / "expected_report.txt").write_text(report.to_text())
    print("pass" if report.passed else "FAIL")
    for o in report.outcomes:
        if not o.ok:
            print("  failed:", o.step, o.detail)


if __name__ == "__main__":
    main()
