"""Infotainment state machine: four modes, two navigation methods, modals.

dispatch() is a pure, total transition function over the gesture-event
alphabet; unmapped (state, event) pairs are explicit no-ops. Modals capture
accept/decline gestures with priority over all mode controls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import List, Optional, Tuple

from .gesture_engine import GestureEvent, Kind, radial_direction
from .haptic_patterns import Sensation, SensationKind

TEMP_MIN, TEMP_MAX = 16.0, 26.0
FAN_MIN, FAN_MAX = 1, 5
ZOOM_MIN, ZOOM_MAX = 1, 10
VOLUME_GAIN = 400.0     # volume units per meter of vertical pinch travel
TEMP_GAIN = 50.0        # degrees C per meter
LEVEL_GAIN = 20.0       # fan/zoom levels per meter

RADIAL_DEADZONE = 0.04
RADIAL_THRESHOLD = 0.08


class Mode(str, Enum):
    MEDIA = "Media"
    TEMPERATURE = "Temperature"
    FAN = "Fan"
    NAVIGATION = "Navigation"


class NavMethod(str, Enum):
    FINGER_POSE = "FingerPose"
    RADIAL3D = "Radial3D"


class Modal(str, Enum):
    INCOMING_CALL = "IncomingCall"
    ACTIVE_CALL = "ActiveCall"
    ROUTE_SUGGESTION = "RouteSuggestion"


class Stimulus(str, Enum):
    INCOMING_CALL = "IncomingCall"
    ROUTE_SUGGESTION = "RouteSuggestion"
    CALLER_HANGUP = "CallerHangup"


_POSE_MODES = (Mode.MEDIA, Mode.TEMPERATURE, Mode.FAN, Mode.NAVIGATION)
# Radial menu layout: Media west, Temperature north, Fan south, Navigation east.
RADIAL_MODES = {"W": Mode.MEDIA, "N": Mode.TEMPERATURE,
                "S": Mode.FAN, "E": Mode.NAVIGATION}


# --- effects -----------------------------------------------------------------

@dataclass(frozen=True)
class Effect:
    kind: str


@dataclass(frozen=True)
class ScreenUpdate(Effect):
    focused_region: str = ""
    dimmed_regions: Tuple[str, ...] = ()
    kind: str = "ScreenUpdate"


@dataclass(frozen=True)
class AudioSpeech(Effect):
    label: str = ""
    kind: str = "AudioSpeech"


@dataclass(frozen=True)
class AudioDing(Effect):
    kind: str = "AudioDing"


@dataclass(frozen=True)
class HapticTrigger(Effect):
    sensation: Sensation = None  # type: ignore[assignment]
    kind: str = "HapticTrigger"


@dataclass(frozen=True)
class PhoneAction(Effect):
    action: str = ""   # answer | decline | end
    kind: str = "PhoneAction"


@dataclass(frozen=True)
class RouteAction(Effect):
    action: str = ""   # accept | decline
    kind: str = "RouteAction"


# --- state -------------------------------------------------------------------

def _round_half(x: float) -> float:
    return round(x * 2.0) / 2.0


@dataclass(frozen=True)
class IvisState:
    mode: Mode = Mode.MEDIA
    nav_method: NavMethod = NavMethod.FINGER_POSE
    media_playing: bool = False
    track_index: int = 0
    volume: float = 50.0
    temp_raw: float = 21.0          # continuous accumulator; displayed in 0.5 steps
    fan_raw: float = 3.0
    zoom_raw: float = 5.0
    modal: Optional[Modal] = None
    pending: Tuple[Stimulus, ...] = ()
    pinch_active: bool = False
    pinch_intent: str = "none"      # none | undecided | value | radial
    pinch_last_delta: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    radial_highlight: Optional[str] = None

    @property
    def temperature(self) -> float:
        return _round_half(self.temp_raw)

    @property
    def fan(self) -> int:
        return int(round(self.fan_raw))

    @property
    def nav_zoom(self) -> int:
        return int(round(self.zoom_raw))

    def check_invariants(self) -> None:
        assert TEMP_MIN <= self.temperature <= TEMP_MAX
        assert math.isclose(self.temperature * 2.0, round(self.temperature * 2.0))
        assert FAN_MIN <= self.fan <= FAN_MAX
        assert ZOOM_MIN <= self.nav_zoom <= ZOOM_MAX
        assert 0.0 <= self.volume <= 100.0
        assert self.track_index >= 0
        if self.radial_highlight is not None:
            assert self.pinch_active and self.nav_method is NavMethod.RADIAL3D

    def to_text(self) -> str:
        """Flat key=value snapshot (golden files and the bridge)."""
        lines = [
            f"mode={self.mode.value}",
            f"nav_method={self.nav_method.value}",
            f"media.playing={'true' if self.media_playing else 'false'}",
            f"media.track_index={self.track_index}",
            f"media.volume={self.volume!r}",
            f"temperature={self.temperature!r}",
            f"fan={self.fan}",
            f"nav_zoom={self.nav_zoom}",
            f"modal={self.modal.value if self.modal else 'none'}",
            f"radial_highlight={self.radial_highlight or 'none'}",
        ]
        return "\n".join(lines) + "\n"


def _screen(state: IvisState) -> ScreenUpdate:
    if state.modal is not None:
        focused = state.modal.value
    elif state.radial_highlight is not None or (
            state.pinch_active and state.pinch_intent == "radial"):
        focused = f"radial:{state.radial_highlight or 'none'}"
    else:
        focused = state.mode.value
    dimmed = tuple(m.value for m in _POSE_MODES if m.value != focused)
    return ScreenUpdate(focused_region=focused, dimmed_regions=dimmed)


def adjust_value(mode: Mode, current: float, dz: float):
    """Single vertical-pinch adjustment of the mode's value."""
    if not math.isfinite(dz):
        raise ValueError("dz must be finite")
    if mode is Mode.MEDIA:
        return min(100.0, max(0.0, current + VOLUME_GAIN * dz))
    if mode is Mode.TEMPERATURE:
        return _round_half(min(TEMP_MAX, max(TEMP_MIN, current + TEMP_GAIN * dz)))
    if mode is Mode.FAN:
        return int(min(FAN_MAX, max(FAN_MIN, current + round(LEVEL_GAIN * dz))))
    if mode is Mode.NAVIGATION:
        return int(min(ZOOM_MAX, max(ZOOM_MIN, current + round(LEVEL_GAIN * dz))))
    raise ValueError(f"unknown mode: {mode}")


def _value_level(state: IvisState) -> float:
    if state.mode is Mode.MEDIA:
        return state.volume / 100.0
    if state.mode is Mode.TEMPERATURE:
        return (state.temp_raw - TEMP_MIN) / (TEMP_MAX - TEMP_MIN)
    if state.mode is Mode.FAN:
        return (state.fan_raw - FAN_MIN) / (FAN_MAX - FAN_MIN)
    return (state.zoom_raw - ZOOM_MIN) / (ZOOM_MAX - ZOOM_MIN)


def _apply_value_delta(state: IvisState, dz_inc: float) -> IvisState:
    # Raw accumulators avoid per-frame quantization swallowing small deltas.
    if state.mode is Mode.MEDIA:
        return replace(state, volume=min(100.0, max(0.0, state.volume + VOLUME_GAIN * dz_inc)))
    if state.mode is Mode.TEMPERATURE:
        return replace(state, temp_raw=min(TEMP_MAX, max(TEMP_MIN, state.temp_raw + TEMP_GAIN * dz_inc)))
    if state.mode is Mode.FAN:
        return replace(state, fan_raw=min(float(FAN_MAX), max(float(FAN_MIN), state.fan_raw + LEVEL_GAIN * dz_inc)))
    return replace(state, zoom_raw=min(float(ZOOM_MAX), max(float(ZOOM_MIN), state.zoom_raw + LEVEL_GAIN * dz_inc)))


def _clear_pinch(state: IvisState) -> IvisState:
    return replace(state, pinch_active=False, pinch_intent="none",
                   pinch_last_delta=(0.0, 0.0, 0.0), radial_highlight=None)


def _resolve_modal(state: IvisState, effects: List[Effect]) -> IvisState:
    """Clear the active modal and surface the next queued stimulus, if any."""
    state = replace(state, modal=None)
    if state.pending:
        nxt, rest = state.pending[0], state.pending[1:]
        state = replace(state, pending=rest)
        if nxt is Stimulus.INCOMING_CALL:
            state = replace(state, modal=Modal.INCOMING_CALL)
        elif nxt is Stimulus.ROUTE_SUGGESTION:
            state = replace(state, modal=Modal.ROUTE_SUGGESTION)
    effects.append(_screen(state))
    return state


def _dispatch_modal(state: IvisState, ev: GestureEvent) -> Tuple[IvisState, List[Effect]]:
    effects: List[Effect] = []
    modal = state.modal
    if ev.kind is Kind.PINCH_MOVE and state.pinch_active:
        # Track the pinch silently so values do not jump when the modal clears.
        return replace(state, pinch_last_delta=ev.delta), effects
    if ev.kind is Kind.PINCH_RELEASE and state.pinch_active:
        return _clear_pinch(state), effects
    if ev.kind is Kind.PINCH_ENGAGE:
        # Consumed: no overlay, no value coupling while a modal is up.
        return replace(state, pinch_active=True, pinch_intent="none",
                       pinch_last_delta=(0.0, 0.0, 0.0)), effects

    if modal is Modal.INCOMING_CALL:
        if ev.kind is Kind.TAP:
            state = replace(state, modal=Modal.ACTIVE_CALL)
            effects += [PhoneAction(action="answer"),
                        AudioSpeech(label="Call answered"),
                        HapticTrigger(sensation=Sensation(SensationKind.OPEN_CIRCLE))]
            effects.append(_screen(state))
            return state, effects
        if ev.kind is Kind.GRAB_RELEASE:
            effects += [PhoneAction(action="decline"),
                        AudioSpeech(label="Call declined"),
                        HapticTrigger(sensation=Sensation(SensationKind.CLOSE_CIRCLE))]
            return _resolve_modal(state, effects), effects
    elif modal is Modal.ACTIVE_CALL:
        if ev.kind is Kind.GRAB_RELEASE:
            effects += [PhoneAction(action="end"),
                        AudioSpeech(label="Call ended"),
                        HapticTrigger(sensation=Sensation(SensationKind.CLOSE_CIRCLE))]
            return _resolve_modal(state, effects), effects
    elif modal is Modal.ROUTE_SUGGESTION:
        if ev.kind is Kind.TAP:
            effects += [RouteAction(action="accept"),
                        AudioSpeech(label="Route accepted"),
                        HapticTrigger(sensation=Sensation(SensationKind.OPEN_CIRCLE))]
            return _resolve_modal(state, effects), effects
        if ev.kind is Kind.GRAB_RELEASE:
            effects += [RouteAction(action="decline"),
                        AudioSpeech(label="Route declined"),
                        HapticTrigger(sensation=Sensation(SensationKind.CLOSE_CIRCLE))]
            return _resolve_modal(state, effects), effects
    return state, effects


def dispatch(state: IvisState, ev: GestureEvent) -> Tuple[IvisState, List[Effect]]:
    """Total transition function; returns the next state and emitted effects."""
    if state.modal is not None:
        return _dispatch_modal(state, ev)

    effects: List[Effect] = []

    if ev.kind is Kind.FINGER_POSE:
        if state.nav_method is NavMethod.FINGER_POSE and ev.count in (1, 2, 3, 4):
            new_mode = _POSE_MODES[ev.count - 1]
            state = replace(state, mode=new_mode)
            effects += [_screen(state),
                        AudioSpeech(label=new_mode.value),
                        HapticTrigger(sensation=Sensation(SensationKind.FINGER_SCAN))]
        return state, effects

    if ev.kind is Kind.PINCH_ENGAGE:
        intent = "undecided" if state.nav_method is NavMethod.RADIAL3D else "value"
        state = replace(state, pinch_active=True, pinch_intent=intent,
                        pinch_last_delta=(0.0, 0.0, 0.0))
        if intent == "undecided":
            state = replace(state, radial_highlight=None)
        effects.append(HapticTrigger(sensation=Sensation(
            SensationKind.VALUE_CIRCLE, level=_value_level(state))))
        return state, effects

    if ev.kind is Kind.PINCH_MOVE:
        if not state.pinch_active or ev.delta is None:
            return state, effects
        dx, dy, dz = ev.delta
        dz_inc = dz - state.pinch_last_delta[2]
        state = replace(state, pinch_last_delta=ev.delta)

        if state.pinch_intent == "undecided":
            hmag = math.hypot(dx, dy)
            if abs(dz) >= RADIAL_DEADZONE or hmag >= RADIAL_DEADZONE:
                intent = "value" if abs(dz) >= hmag else "radial"
                state = replace(state, pinch_intent=intent)
                if intent == "radial":
                    effects.append(_screen(state))

        if state.pinch_intent == "value":
            before = state
            state = _apply_value_delta(state, dz_inc)
            effects.append(HapticTrigger(sensation=Sensation(
                SensationKind.VALUE_CIRCLE, level=_value_level(state))))
            if state.to_text() != before.to_text():
                effects.append(_screen(state))
        elif state.pinch_intent == "radial":
            new_hl = radial_direction((dx, dy, 0.0), RADIAL_DEADZONE)
            if new_hl != state.radial_highlight:
                state = replace(state, radial_highlight=new_hl)
                if new_hl is not None:
                    effects.append(AudioSpeech(label=RADIAL_MODES[new_hl].value))
                effects.append(_screen(state))
        return state, effects

    if ev.kind is Kind.PINCH_RELEASE:
        if not state.pinch_active:
            return state, effects
        if state.pinch_intent == "radial":
            dx, dy, _ = state.pinch_last_delta
            direction = radial_direction((dx, dy, 0.0), RADIAL_DEADZONE)
            if direction is not None and math.hypot(dx, dy) >= RADIAL_THRESHOLD:
                state = _clear_pinch(replace(state, mode=RADIAL_MODES[direction]))
                effects += [AudioDing(),
                            HapticTrigger(sensation=Sensation(SensationKind.OPEN_CIRCLE))]
                effects.append(_screen(state))
                return state, effects
        state = _clear_pinch(state)
        effects.append(_screen(state))
        return state, effects

    if ev.kind is Kind.TAP:
        if state.mode is Mode.MEDIA:
            state = replace(state, media_playing=not state.media_playing)
            effects += [HapticTrigger(sensation=Sensation(SensationKind.OPEN_CIRCLE)),
                        _screen(state)]
        return state, effects

    if ev.kind is Kind.SWIPE:
        if state.mode is Mode.MEDIA:
            state = replace(state, track_index=state.track_index + 1)
            effects += [HapticTrigger(sensation=Sensation(
                            SensationKind.SCAN_LINE, direction=ev.direction or "right")),
                        _screen(state)]
        return state, effects

    if ev.kind is Kind.TWIST:
        if state.mode is Mode.MEDIA:
            state = replace(state, track_index=max(0, state.track_index - 1))
            effects += [HapticTrigger(sensation=Sensation(
                            SensationKind.SCAN_LINE, direction="left")),
                        _screen(state)]
        return state, effects

    # GrabRelease outside modals (and anything else) is a deliberate no-op.
    return state, effects


def inject(state: IvisState, stim: Stimulus) -> Tuple[IvisState, List[Effect]]:
    """Apply an external stimulus (call/route/hangup) to the state machine."""
    effects: List[Effect] = []
    if stim is Stimulus.CALLER_HANGUP:
        if state.modal in (Modal.INCOMING_CALL, Modal.ACTIVE_CALL):
            return _resolve_modal(state, effects), effects
        if Stimulus.INCOMING_CALL in state.pending:
            pending = tuple(s for s in state.pending if s is not Stimulus.INCOMING_CALL)
            return replace(state, pending=pending), effects
        return state, effects

    target = (Modal.INCOMING_CALL if stim is Stimulus.INCOMING_CALL
              else Modal.ROUTE_SUGGESTION)
    if state.modal is None:
        state = replace(state, modal=target)
        effects.append(_screen(state))
    else:
        state = replace(state, pending=state.pending + (stim,))
    return state, effects
