import pytest

from midair_ivis.gesture_engine import GestureEvent, Kind
from midair_ivis.haptic_patterns import SensationKind
from midair_ivis.ivis_core import (AudioDing, AudioSpeech, HapticTrigger,
                                   IvisState, Modal, Mode, NavMethod,
                                   PhoneAction, RouteAction, ScreenUpdate,
                                   Stimulus, adjust_value, dispatch, inject)

POS = (0.0, 0.0, 0.25)


def ev(kind, **kw):
    return GestureEvent(t=0.0, kind=kind, pos=POS, **kw)


def haptics(effects):
    return [e.sensation.kind for e in effects if isinstance(e, HapticTrigger)]


def speech(effects):
    return [e.label for e in effects if isinstance(e, AudioSpeech)]


def pinch_sequence(state, deltas):
    """Engage, run a list of PinchMove deltas, release; return final state+effects."""
    all_effects = []
    state, eff = dispatch(state, ev(Kind.PINCH_ENGAGE))
    all_effects += eff
    for d in deltas:
        state, eff = dispatch(state, ev(Kind.PINCH_MOVE, delta=d))
        all_effects += eff
    state, eff = dispatch(state, ev(Kind.PINCH_RELEASE))
    all_effects += eff
    return state, all_effects


class TestAdjustValue:
    def test_volume_gain(self):
        assert adjust_value(Mode.MEDIA, 50.0, 0.05) == 70.0

    def test_fan_upper_clamp(self):
        assert adjust_value(Mode.FAN, 5, 0.10) == 5

    def test_temperature_gain_and_rounding(self):
        assert adjust_value(Mode.TEMPERATURE, 20.0, -0.02) == 19.0

    def test_clamps(self):
        assert adjust_value(Mode.MEDIA, 95.0, 0.5) == 100.0
        assert adjust_value(Mode.TEMPERATURE, 25.0, 1.0) == 26.0
        assert adjust_value(Mode.NAVIGATION, 10, 1.0) == 10

    def test_non_finite_dz(self):
        with pytest.raises(ValueError):
            adjust_value(Mode.MEDIA, 50.0, float("nan"))


class TestMediaMode:
    def test_tap_toggles_playing_with_open_circle(self):
        state = IvisState(media_playing=True)
        state, effects = dispatch(state, ev(Kind.TAP))
        assert state.media_playing is False
        assert SensationKind.OPEN_CIRCLE in haptics(effects)

    def test_swipe_next_track_scanline(self):
        state, effects = dispatch(IvisState(), ev(Kind.SWIPE, direction="right"))
        assert state.track_index == 1
        h = [e.sensation for e in effects if isinstance(e, HapticTrigger)]
        assert h[0].kind is SensationKind.SCAN_LINE
        assert h[0].direction == "right"

    def test_twist_previous_track_floors_at_zero(self):
        state, _ = dispatch(IvisState(track_index=0), ev(Kind.TWIST))
        assert state.track_index == 0
        state, _ = dispatch(IvisState(track_index=3), ev(Kind.TWIST))
        assert state.track_index == 2

    def test_swipe_outside_media_is_noop(self):
        state = IvisState(mode=Mode.TEMPERATURE)
        state2, effects = dispatch(state, ev(Kind.SWIPE, direction="left"))
        assert state2 == state
        assert effects == []

    def test_volume_pinch(self):
        state, effects = pinch_sequence(IvisState(), [(0.0, 0.0, 0.05)])
        assert state.volume == 70.0
        assert SensationKind.VALUE_CIRCLE in haptics(effects)


class TestValueAdjustment:
    def test_temperature_upper_clamp_idempotent(self):
        state = IvisState(mode=Mode.TEMPERATURE, temp_raw=26.0)
        state, _ = pinch_sequence(state, [(0.0, 0.0, 0.05), (0.0, 0.0, 0.10)])
        assert state.temperature == 26.0

    def test_small_increments_accumulate(self):
        # 100 Hz-scale deltas must not be swallowed by the 0.5 C display step.
        state = IvisState(mode=Mode.TEMPERATURE, temp_raw=21.0)
        deltas = [(0.0, 0.0, 0.001 * i) for i in range(1, 41)]
        state, _ = pinch_sequence(state, deltas)
        assert state.temperature == 23.0

    def test_clutching_accumulates_volume(self):
        state = IvisState(volume=20.0)
        state, _ = pinch_sequence(state, [(0.0, 0.0, 0.10)])
        assert state.volume == 60.0
        state, _ = pinch_sequence(state, [(0.0, 0.0, 0.05)])
        assert state.volume == 80.0

    def test_volume_monotone_in_cumulative_dz(self):
        state = IvisState(volume=10.0)
        prev = state.volume
        for dz in [0.01, 0.02, 0.05, 0.08, 0.2, 0.3]:
            state, _ = pinch_sequence(state, [(0.0, 0.0, dz)])
            assert state.volume >= prev
            prev = state.volume

    def test_fan_and_zoom_adjust(self):
        state = IvisState(mode=Mode.FAN, fan_raw=1.0)
        state, _ = pinch_sequence(state, [(0.0, 0.0, 0.10)])
        assert state.fan == 3
        state = IvisState(mode=Mode.NAVIGATION, zoom_raw=5.0)
        state, _ = pinch_sequence(state, [(0.0, 0.0, -0.10)])
        assert state.nav_zoom == 3


class TestFingerPoseNavigation:
    def test_pose_three_selects_fan(self):
        state, effects = dispatch(IvisState(), ev(Kind.FINGER_POSE, count=3))
        assert state.mode is Mode.FAN
        assert speech(effects) == ["Fan"]
        assert SensationKind.FINGER_SCAN in haptics(effects)
        assert not any(isinstance(e, AudioDing) for e in effects)
        screens = [e for e in effects if isinstance(e, ScreenUpdate)]
        assert screens and screens[0].focused_region == "Fan"
        assert set(screens[0].dimmed_regions) == {"Media", "Temperature", "Navigation"}

    def test_pose_mapping_order(self):
        for count, mode in [(1, Mode.MEDIA), (2, Mode.TEMPERATURE),
                            (3, Mode.FAN), (4, Mode.NAVIGATION)]:
            state, _ = dispatch(IvisState(), ev(Kind.FINGER_POSE, count=count))
            assert state.mode is mode

    def test_pose_ignored_under_radial(self):
        state = IvisState(nav_method=NavMethod.RADIAL3D)
        state2, effects = dispatch(state, ev(Kind.FINGER_POSE, count=2))
        assert state2.mode is state.mode
        assert effects == []


class TestRadialNavigation:
    def test_west_selects_media_with_ding(self):
        state = IvisState(nav_method=NavMethod.RADIAL3D, mode=Mode.FAN)
        state, effects = pinch_sequence(state, [(-0.05, 0.0, 0.0),
                                                (-0.10, 0.0, 0.0)])
        assert state.mode is Mode.MEDIA
        assert any(isinstance(e, AudioDing) for e in effects)
        assert SensationKind.OPEN_CIRCLE in haptics(effects)
        assert "Media" in speech(effects)

    def test_release_inside_deadzone_cancels(self):
        state = IvisState(nav_method=NavMethod.RADIAL3D, mode=Mode.FAN)
        state, effects = pinch_sequence(state, [(-0.05, 0.0, 0.0),
                                                (-0.02, 0.0, 0.0)])
        assert state.mode is Mode.FAN
        assert not any(isinstance(e, AudioDing) for e in effects)

    def test_highlight_speech_on_change(self):
        state = IvisState(nav_method=NavMethod.RADIAL3D)
        _, effects = pinch_sequence(state, [(0.0, 0.05, 0.0), (0.0, 0.09, 0.0),
                                            (0.09, 0.0, 0.0), (0.10, 0.0, 0.0)])
        # Speech accompanies highlight changes; selection itself adds the ding.
        assert speech(effects) == ["Temperature", "Navigation"]

    def test_vertical_first_crossing_adjusts_value(self):
        state = IvisState(nav_method=NavMethod.RADIAL3D, mode=Mode.MEDIA,
                          volume=50.0)
        state, effects = pinch_sequence(state, [(0.0, 0.0, 0.05),
                                                (0.0, 0.0, 0.10)])
        assert state.volume == 90.0
        assert state.mode is Mode.MEDIA
        assert not any(isinstance(e, AudioDing) for e in effects)

    def test_radial_overlay_invariant(self):
        state = IvisState(nav_method=NavMethod.RADIAL3D)
        state, _ = dispatch(state, ev(Kind.PINCH_ENGAGE))
        state, _ = dispatch(state, ev(Kind.PINCH_MOVE, delta=(0.09, 0.0, 0.0)))
        assert state.radial_highlight == "E"
        state.check_invariants()
        state, _ = dispatch(state, ev(Kind.PINCH_RELEASE))
        assert state.radial_highlight is None


class TestModals:
    def test_incoming_call_tap_answers(self):
        state, _ = inject(IvisState(), Stimulus.INCOMING_CALL)
        state, effects = dispatch(state, ev(Kind.TAP))
        assert state.modal is Modal.ACTIVE_CALL
        assert any(isinstance(e, PhoneAction) and e.action == "answer"
                   for e in effects)
        assert SensationKind.OPEN_CIRCLE in haptics(effects)
        assert speech(effects)

    def test_incoming_call_grab_release_declines(self):
        state, _ = inject(IvisState(), Stimulus.INCOMING_CALL)
        state, effects = dispatch(state, ev(Kind.GRAB_RELEASE))
        assert state.modal is None
        assert any(isinstance(e, PhoneAction) and e.action == "decline"
                   for e in effects)
        assert SensationKind.CLOSE_CIRCLE in haptics(effects)
        assert speech(effects)

    def test_active_call_grab_release_ends(self):
        state = IvisState(modal=Modal.ACTIVE_CALL)
        state, effects = dispatch(state, ev(Kind.GRAB_RELEASE))
        assert state.modal is None
        assert any(isinstance(e, PhoneAction) and e.action == "end"
                   for e in effects)
        assert SensationKind.CLOSE_CIRCLE in haptics(effects)

    def test_route_accept_and_decline(self):
        state, _ = inject(IvisState(), Stimulus.ROUTE_SUGGESTION)
        accepted, effects = dispatch(state, ev(Kind.TAP))
        assert accepted.modal is None
        assert any(isinstance(e, RouteAction) and e.action == "accept"
                   for e in effects)
        declined, effects = dispatch(state, ev(Kind.GRAB_RELEASE))
        assert declined.modal is None
        assert any(isinstance(e, RouteAction) and e.action == "decline"
                   for e in effects)

    def test_mode_preserved_during_call(self):
        state = IvisState(mode=Mode.FAN)
        state, _ = inject(state, Stimulus.INCOMING_CALL)
        assert state.modal is Modal.INCOMING_CALL
        assert state.mode is Mode.FAN

    def test_modal_priority_blocks_everything(self):
        state, _ = inject(IvisState(volume=50.0), Stimulus.INCOMING_CALL)
        for event in [ev(Kind.SWIPE, direction="left"), ev(Kind.TWIST),
                      ev(Kind.FINGER_POSE, count=3)]:
            after, _ = dispatch(state, event)
            assert after.mode is state.mode
            assert after.volume == state.volume
        after, _ = pinch_sequence(state, [(0.0, 0.0, 0.10)])
        assert after.volume == 50.0
        assert after.mode is state.mode

    def test_hangup_clears_call(self):
        state, _ = inject(IvisState(), Stimulus.INCOMING_CALL)
        state, _ = inject(state, Stimulus.CALLER_HANGUP)
        assert state.modal is None

    def test_hangup_without_call_is_noop(self):
        state = IvisState()
        state2, effects = inject(state, Stimulus.CALLER_HANGUP)
        assert state2 == state
        assert effects == []

    def test_stimulus_queued_behind_active_modal(self):
        state, _ = inject(IvisState(), Stimulus.INCOMING_CALL)
        state, _ = inject(state, Stimulus.ROUTE_SUGGESTION)
        assert state.modal is Modal.INCOMING_CALL
        assert state.pending == (Stimulus.ROUTE_SUGGESTION,)
        # Answer then end the call; the route must then surface.
        state, _ = dispatch(state, ev(Kind.TAP))
        assert state.modal is Modal.ACTIVE_CALL
        state, _ = dispatch(state, ev(Kind.GRAB_RELEASE))
        assert state.modal is Modal.ROUTE_SUGGESTION
        assert state.pending == ()

    def test_queue_matches_single_stimulus_replay(self):
        # Queue semantics oracle: resolving the first modal then injecting the
        # second directly must equal the queued path.
        queued, _ = inject(IvisState(), Stimulus.INCOMING_CALL)
        queued, _ = inject(queued, Stimulus.ROUTE_SUGGESTION)
        queued, _ = dispatch(queued, ev(Kind.GRAB_RELEASE))

        direct, _ = inject(IvisState(), Stimulus.INCOMING_CALL)
        direct, _ = dispatch(direct, ev(Kind.GRAB_RELEASE))
        direct, _ = inject(direct, Stimulus.ROUTE_SUGGESTION)
        assert queued == direct


class TestSnapshot:
    def test_round_trip_fields(self):
        state = IvisState(mode=Mode.FAN, temp_raw=22.5, volume=70.0)
        text = state.to_text()
        assert "mode=Fan" in text
        assert "temperature=22.5" in text
        assert "media.volume=70.0" in text
        assert "modal=none" in text

    def test_grab_release_outside_modal_noop(self):
        state = IvisState()
        state2, effects = dispatch(state, ev(Kind.GRAB_RELEASE))
        assert state2 == state
        assert effects == []
