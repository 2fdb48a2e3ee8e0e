import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from midair_ivis.hand_stream import HandFrame
from midair_ivis.haptic_patterns import (ANCHOR_INTENSITY, ANCHOR_POS,
                                         EnvelopeMode, Sensation,
                                         SensationKind, parse_timeline,
                                         sample_focus, sample_timeline,
                                         value_circle_params, write_timeline)


def palm_up_hand(pos=(0.0, 0.0, 0.25)):
    return HandFrame(t=0.0, hand_present=True, palm_pos=pos,
                     palm_normal=(0.0, 0.0, 1.0), pinch_strength=0.0,
                     grab_strength=0.0, fingers_extended=(True,) * 5,
                     confidence=1.0)


HAND = palm_up_hand()


class TestValueCircleParams:
    def test_lower_endpoint(self):
        assert value_circle_params(0.0) == (pytest.approx(0.01), pytest.approx(0.3))

    def test_upper_endpoint(self):
        assert value_circle_params(1.0) == (pytest.approx(0.03), pytest.approx(1.0))

    def test_midpoint(self):
        assert value_circle_params(0.5) == (pytest.approx(0.02), pytest.approx(0.65))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            value_circle_params(1.2)

    @given(st.floats(0.0, 0.999), st.floats(1e-6, 1e-3))
    @settings(max_examples=50, deadline=None)
    def test_strictly_monotone(self, level, eps):
        hi = min(1.0, level + eps)
        r0, i0 = value_circle_params(level)
        r1, i1 = value_circle_params(hi)
        assert r1 > r0 and i1 > i0


class TestSampleFocus:
    def test_open_circle_midpoint_radius(self):
        s = sample_focus(Sensation(SensationKind.OPEN_CIRCLE), 0.35, HAND)
        r = math.dist(s.pos, HAND.palm_pos)
        assert r == pytest.approx(0.02, abs=1e-9)

    def test_circle_tap_quarter_revolution(self):
        # theta = 2*pi*70*(1/280) = pi/2 -> palm + (0, 0.02, 0) for a palm-up hand
        s = sample_focus(Sensation(SensationKind.CIRCLE_TAP), 1.0 / 280.0, HAND)
        assert s.pos == pytest.approx((0.0, 0.02, 0.25), abs=1e-12)

    def test_circle_tap_period(self):
        s0 = sample_focus(Sensation(SensationKind.CIRCLE_TAP), 0.1, HAND)
        s1 = sample_focus(Sensation(SensationKind.CIRCLE_TAP), 0.1 + 1.0 / 70.0, HAND)
        assert s0.pos == pytest.approx(s1.pos, abs=1e-9)

    def test_double_tap_gap_inactive(self):
        s = sample_focus(Sensation(SensationKind.DOUBLE_TAP), 0.35, HAND)
        assert s is None

    def test_double_tap_active_windows(self):
        assert sample_focus(Sensation(SensationKind.DOUBLE_TAP), 0.2, HAND) is not None
        assert sample_focus(Sensation(SensationKind.DOUBLE_TAP), 0.5, HAND) is not None

    def test_finite_durations_expire(self):
        for kind, dur in [(SensationKind.CIRCLE_TAP, 0.5),
                          (SensationKind.DOUBLE_TAP, 0.7),
                          (SensationKind.OPEN_CIRCLE, 0.7),
                          (SensationKind.CLOSE_CIRCLE, 0.7),
                          (SensationKind.SCAN_LINE, 0.4),
                          (SensationKind.FINGER_SCAN, 0.4)]:
            assert sample_focus(Sensation(kind), dur + 1e-6, HAND) is None

    def test_continuous_kinds_never_expire(self):
        assert sample_focus(Sensation(SensationKind.VALUE_CIRCLE, level=0.5),
                            100.0, HAND) is not None
        assert sample_focus(Sensation(SensationKind.ANCHOR_CIRCLE), 100.0, HAND) is not None

    def test_value_circle_intensity_endpoints(self):
        lo = sample_focus(Sensation(SensationKind.VALUE_CIRCLE, level=0.0), 0.0, HAND)
        hi = sample_focus(Sensation(SensationKind.VALUE_CIRCLE, level=1.0), 0.0, HAND)
        assert lo.intensity == pytest.approx(0.3)
        assert hi.intensity == pytest.approx(1.0)

    def test_anchor_circle_world_fixed(self):
        a = sample_focus(Sensation(SensationKind.ANCHOR_CIRCLE), 0.2, HAND)
        b = sample_focus(Sensation(SensationKind.ANCHOR_CIRCLE), 0.2,
                         palm_up_hand(pos=(0.1, 0.1, 0.4)))
        assert a.pos == pytest.approx(b.pos)
        assert math.dist(a.pos, ANCHOR_POS) == pytest.approx(0.02, abs=1e-9)
        assert a.intensity == ANCHOR_INTENSITY

    def test_open_close_mirror(self):
        for t in [0.0, 0.1, 0.2, 0.35, 0.55, 0.7]:
            r_open = math.dist(sample_focus(
                Sensation(SensationKind.OPEN_CIRCLE), t, HAND).pos, HAND.palm_pos)
            r_close = math.dist(sample_focus(
                Sensation(SensationKind.CLOSE_CIRCLE), 0.7 - t, HAND).pos, HAND.palm_pos)
            assert r_open == pytest.approx(r_close, abs=1e-12)

    @given(st.floats(-0.1, 0.1), st.floats(-0.1, 0.1), st.floats(0.1, 0.4),
           st.sampled_from([SensationKind.CIRCLE_TAP, SensationKind.OPEN_CIRCLE,
                            SensationKind.SCAN_LINE, SensationKind.FINGER_SCAN]))
    @settings(max_examples=60, deadline=None)
    def test_hand_anchored_translation(self, x, y, z, kind):
        t = 0.123
        base = sample_focus(Sensation(kind), t, HAND)
        moved = sample_focus(Sensation(kind), t, palm_up_hand(pos=(x, y, z)))
        shifted = (base.pos[0] + x, base.pos[1] + y, base.pos[2] + (z - 0.25))
        assert moved.pos == pytest.approx(shifted, abs=1e-12)

    def test_negative_t_rejected(self):
        with pytest.raises(ValueError):
            sample_focus(Sensation(SensationKind.CIRCLE_TAP), -0.1, HAND)

    def test_low_sample_rate_rejected(self):
        with pytest.raises(ValueError):
            sample_focus(Sensation(SensationKind.CIRCLE_TAP), 0.1, HAND,
                         sample_rate=500.0)

    def test_scan_line_direction_reverses_sweep(self):
        right0 = sample_focus(Sensation(SensationKind.SCAN_LINE, direction="right"),
                              0.0, HAND)
        left0 = sample_focus(Sensation(SensationKind.SCAN_LINE, direction="left"),
                             0.0, HAND)
        assert right0.pos[0] == pytest.approx(-left0.pos[0], abs=1e-12)


class TestTimeline:
    def test_uniform_spacing(self):
        samples = sample_timeline(Sensation(SensationKind.CIRCLE_TAP), HAND,
                                  sample_rate=4000.0)
        dts = {round(b.t - a.t, 12) for a, b in zip(samples, samples[1:])}
        assert dts == {round(1.0 / 4000.0, 12)}

    def test_double_tap_skips_gap(self):
        samples = sample_timeline(Sensation(SensationKind.DOUBLE_TAP), HAND,
                                  sample_rate=1000.0)
        assert not any(0.3 < s.t < 0.4 for s in samples)

    def test_export_round_trip(self):
        samples = sample_timeline(Sensation(SensationKind.OPEN_CIRCLE), HAND,
                                  sample_rate=1000.0)
        parsed = parse_timeline(write_timeline(samples))
        assert parsed == samples

    def test_continuous_requires_duration(self):
        with pytest.raises(ValueError):
            sample_timeline(Sensation(SensationKind.ANCHOR_CIRCLE), HAND)
