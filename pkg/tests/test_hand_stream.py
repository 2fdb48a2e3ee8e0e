import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from midair_ivis import gesture_engine as ge
from midair_ivis.hand_stream import (HandFrame, Trajectory, TrajectoryError,
                                     derive_kinematics, parse_trajectory,
                                     synth_gesture, translate,
                                     write_trajectory)


def frame(t, pos=(0.0, 0.0, 0.25), **kw):
    defaults = dict(hand_present=True, palm_pos=pos,
                    palm_normal=(0.0, 0.0, -1.0), pinch_strength=0.0,
                    grab_strength=0.0, fingers_extended=(True,) * 5,
                    confidence=1.0)
    defaults.update(kw)
    return HandFrame(t=t, **defaults)


def make_traj(positions, dt=0.01):
    return Trajectory(frames=tuple(frame(i * dt, p)
                                   for i, p in enumerate(positions)))


class TestParse:
    def test_minimal_two_records(self):
        text = ("0.0 1 0.0 0.0 0.25 0.0 0.0 -1.0 0.0 0.0 1 1 1 1 1 1.0\n"
                "0.01 1 0.0 0.0 0.25 0.0 0.0 -1.0 0.0 0.0 1 1 1 1 1 1.0\n")
        traj = parse_trajectory(text)
        assert len(traj) == 2
        assert traj.nominal_rate == 100.0

    def test_non_monotone_timestamp_rejected(self):
        text = ("0.02 1 0 0 0.25 0 0 -1.0 0 0 1 1 1 1 1 1\n"
                "0.01 1 0 0 0.25 0 0 -1.0 0 0 1 1 1 1 1 1\n")
        with pytest.raises(TrajectoryError, match="non-monotone timestamp"):
            parse_trajectory(text)

    def test_out_of_range_strength_rejected(self):
        text = "0.0 1 0 0 0.25 0 0 -1.0 1.3 0 1 1 1 1 1 1\n"
        with pytest.raises(TrajectoryError, match="range"):
            parse_trajectory(text)

    def test_nan_rejected(self):
        text = "0.0 1 nan 0 0.25 0 0 -1.0 0 0 1 1 1 1 1 1\n"
        with pytest.raises(TrajectoryError):
            parse_trajectory(text)

    def test_comments_and_blank_lines_ignored(self):
        text = ("# header\n\n"
                "0.0 1 0.0 0.0 0.25 0.0 0.0 -1.0 0.0 0.0 1 1 1 1 1 1.0\n")
        assert len(parse_trajectory(text)) == 1

    @given(st.lists(st.floats(-1.0, 1.0, allow_nan=False), min_size=1, max_size=20))
    @settings(max_examples=50, deadline=None)
    def test_round_trip_bit_exact(self, xs):
        traj = make_traj([(x, x / 3.0, 0.25 + abs(x) / 7.0) for x in xs])
        assert parse_trajectory(write_trajectory(traj)) == traj


class TestKinematics:
    def test_stationary_hand_zero(self):
        kin = derive_kinematics(make_traj([(0.0, 0.0, 0.25)] * 10))
        assert all(v == (0.0, 0.0, 0.0) for v in kin.palm_vel)
        assert all(a == (0.0, 0.0, 0.0) for a in kin.palm_acc)

    def test_linear_ramp_constant_velocity(self):
        # x(t) = 0.5 t over uniform 100 Hz frames -> interior vx = 0.5 exactly
        traj = make_traj([(0.5 * i * 0.01, 0.0, 0.25) for i in range(50)])
        kin = derive_kinematics(traj)
        for vx, _, _ in kin.palm_vel:
            assert vx == pytest.approx(0.5, rel=1e-9)
        for i in range(1, 49):
            assert abs(kin.palm_acc[i][0]) < 1e-9

    def test_single_frame_zeros(self):
        kin = derive_kinematics(make_traj([(0.0, 0.0, 0.25)]))
        assert kin.palm_vel == ((0.0, 0.0, 0.0),)
        assert kin.palm_acc == ((0.0, 0.0, 0.0),)

    def test_empty_trajectory_errors(self):
        with pytest.raises(TrajectoryError, match="empty"):
            derive_kinematics(Trajectory(frames=()))


class TestSynth:
    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="unknown gesture kind"):
            synth_gesture("wave")

    def test_swipe_right_displacement(self):
        traj = synth_gesture("swipe_right")
        xs = [f.palm_pos[0] for f in traj.frames]
        zs = {f.palm_pos[2] for f in traj.frames}
        assert max(xs) - min(xs) == pytest.approx(0.15, abs=1e-6)
        assert len(zs) == 1  # constant z

    def test_tap_peak_downward_acceleration(self):
        traj = synth_gesture("tap")
        kin = derive_kinematics(traj)
        assert min(a[2] for a in kin.palm_acc) <= -15.0

    def test_idle_jitter_below_1mm(self):
        traj = synth_gesture("idle", duration=1.0)
        for f in traj.frames:
            for a in range(3):
                assert abs(f.palm_pos[a] - (0.0, 0.0, 0.25)[a]) < 1e-3
        assert ge.recognize(traj) == []

    @pytest.mark.parametrize("kind,expected", [
        ("swipe_right", ge.Kind.SWIPE),
        ("swipe_left", ge.Kind.SWIPE),
        ("twist", ge.Kind.TWIST),
        ("tap", ge.Kind.TAP),
        ("grab_release", ge.Kind.GRAB_RELEASE),
        ("finger_pose", ge.Kind.FINGER_POSE),
    ])
    def test_cross_check_exactly_one_event(self, kind, expected):
        events = ge.recognize(synth_gesture(kind))
        assert [e.kind for e in events] == [expected]

    def test_cross_check_pinch_sequence(self):
        events = ge.recognize(synth_gesture("pinch"))
        kinds = [e.kind for e in events]
        assert kinds.count(ge.Kind.PINCH_ENGAGE) == 1
        assert kinds.count(ge.Kind.PINCH_RELEASE) == 1
        assert kinds.count(ge.Kind.PINCH_MOVE) >= 1
        assert kinds[0] is ge.Kind.PINCH_ENGAGE
        assert kinds[-1] is ge.Kind.PINCH_RELEASE

    def test_translate_shifts_positions(self):
        traj = synth_gesture("tap")
        moved = translate(traj, (0.01, -0.02, 0.03))
        for a, b in zip(traj.frames, moved.frames):
            assert b.palm_pos == pytest.approx(
                (a.palm_pos[0] + 0.01, a.palm_pos[1] - 0.02, a.palm_pos[2] + 0.03))
