"""WebSocket bridge exposing the live pipeline to interactive clients.

One session per connection, JSON messages with a `type` discriminator.
The session clock is logical: each Frame advances it to the frame time and
each VirtualControl advances it by one 100 Hz tick, so a session's outputs
are a deterministic function of its input message sequence.
"""

from __future__ import annotations

import asyncio
import json
from dataclasses import replace
from typing import Any, Dict, List, Optional, Tuple

from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from . import acoustic_field
from .gesture_engine import (GestureEvent, Recognizer, RecognizerConfig,
                             StreamOrderError)
from .hand_stream import HandFrame, TrajectoryError, Vec3
from .haptic_patterns import Sensation, sample_focus
from .ivis_core import (Effect, HapticTrigger, IvisState, NavMethod, Stimulus,
                        dispatch, inject)

DEFAULT_PORT = 7341
FRAME_DT = 0.01            # server-paced virtual-control interval (100 Hz)
HEARTBEAT_SECONDS = 5.0


def _state_payload(state: IvisState) -> Dict[str, Any]:
    return {
        "mode": state.mode.value,
        "nav_method": state.nav_method.value,
        "media": {"playing": state.media_playing,
                  "track_index": state.track_index,
                  "volume": state.volume},
        "temperature": state.temperature,
        "fan": state.fan,
        "nav_zoom": state.nav_zoom,
        "modal": state.modal.value if state.modal else None,
        "radial_highlight": state.radial_highlight,
    }


def _event_payload(ev: GestureEvent) -> Dict[str, Any]:
    out: Dict[str, Any] = {"t": ev.t, "kind": ev.kind.value, "pos": list(ev.pos)}
    if ev.direction is not None:
        out["direction"] = ev.direction
    if ev.delta is not None:
        out["delta"] = list(ev.delta)
    if ev.count is not None:
        out["count"] = ev.count
    return out


def _effect_payload(eff: Effect) -> Dict[str, Any]:
    out: Dict[str, Any] = {"kind": eff.kind}
    for name in ("focused_region", "label", "action"):
        v = getattr(eff, name, None)
        if v is not None and v != "":
            out[name] = v
    dimmed = getattr(eff, "dimmed_regions", None)
    if dimmed:
        out["dimmed_regions"] = list(dimmed)
    sensation = getattr(eff, "sensation", None)
    if sensation is not None:
        out["sensation"] = {"kind": sensation.kind.value,
                            "direction": sensation.direction,
                            "level": sensation.level}
    return out


class Session:
    """Serial per-connection pipeline state."""

    def __init__(self, config: Optional[RecognizerConfig] = None) -> None:
        self.config = config or RecognizerConfig()
        self.recognizer = Recognizer(config=self.config)
        self.array = acoustic_field.grid_array()
        self.state = IvisState()
        self.clock = 0.0
        self.started = False
        self.active_haptic: Optional[tuple] = None  # (t0, Sensation)
        self.event_log: List[GestureEvent] = []
        self._prev_frame: Optional[HandFrame] = None
        self._prev_vel: Vec3 = (0.0, 0.0, 0.0)

    # --- message handling ---------------------------------------------------

    def handle_message(self, msg: Dict[str, Any]) -> List[Dict[str, Any]]:
        """Process one client message, returning the server replies."""
        mtype = msg.get("type")
        if not self.started and mtype != "Hello":
            return [self._error("protocol", "Hello must be the first message")]
        try:
            if mtype == "Hello":
                return self._on_hello(msg)
            if mtype == "Frame":
                return self._on_frame(self._frame_from_payload(msg))
            if mtype == "VirtualControl":
                return self._on_frame(self._frame_from_control(msg))
            if mtype == "Trigger":
                return self._on_trigger(msg)
            if mtype == "SetNavMethod":
                return self._on_set_nav_method(msg)
        except (KeyError, TypeError, ValueError, TrajectoryError) as exc:
            return [self._error("parse", str(exc))]
        return [self._error("parse", f"unknown message type {mtype!r}")]

    def _error(self, code: str, detail: str) -> Dict[str, Any]:
        return {"type": "Error", "code": code, "detail": detail}

    def _snapshot(self) -> Dict[str, Any]:
        return {"type": "Snapshot", "state": _state_payload(self.state)}

    def _on_hello(self, msg: Dict[str, Any]) -> List[Dict[str, Any]]:
        method = msg.get("nav_method", "FingerPose")
        self.state = IvisState(nav_method=NavMethod(method))
        self.started = True
        return [self._snapshot()]

    def _on_set_nav_method(self, msg: Dict[str, Any]) -> List[Dict[str, Any]]:
        self.state = replace(self.state, nav_method=NavMethod(msg["method"]))
        return [self._snapshot()]

    def _on_trigger(self, msg: Dict[str, Any]) -> List[Dict[str, Any]]:
        self.state, effects = inject(self.state, Stimulus(msg["stimulus"]))
        out = [{"type": "Effect", "effect": _effect_payload(e)} for e in effects]
        out.append(self._snapshot())
        return out

    def _frame_from_payload(self, msg: Dict[str, Any]) -> HandFrame:
        f = msg["frame"]
        return HandFrame(
            t=float(f["t"]),
            hand_present=bool(f.get("hand_present", True)),
            palm_pos=tuple(float(v) for v in f["palm_pos"]),
            palm_normal=tuple(float(v) for v in f.get("palm_normal", (0, 0, -1))),
            pinch_strength=float(f.get("pinch_strength", 0.0)),
            grab_strength=float(f.get("grab_strength", 0.0)),
            fingers_extended=tuple(bool(v) for v in
                                   f.get("fingers_extended", [True] * 5)),
            confidence=float(f.get("confidence", 1.0)),
        )

    def _frame_from_control(self, msg: Dict[str, Any]) -> HandFrame:
        # Server paces virtual controls at the tracker's 100 Hz frame rate.
        t = self.clock + FRAME_DT
        pos: Vec3 = (float(msg.get("x", 0.0)), float(msg.get("y", 0.0)),
                     float(msg.get("z", 0.25)))
        return HandFrame(
            t=t, hand_present=True, palm_pos=pos,
            palm_normal=tuple(float(v) for v in msg.get("normal", (0, 0, -1))),
            pinch_strength=float(msg.get("pinch", 0.0)),
            grab_strength=float(msg.get("grab", 0.0)),
            fingers_extended=tuple(bool(v) for v in
                                   msg.get("fingers", [True] * 5)),
            confidence=1.0,
        )

    def _on_frame(self, frame: HandFrame) -> List[Dict[str, Any]]:
        if frame.t <= self.clock and self.clock > 0.0:
            return [self._error("order", f"frame at t={frame.t} is not after "
                                         f"t={self.clock}")]
        # Streaming kinematics from the last three frames lives in the
        # recognizer caller; here a two-point backward difference suffices.
        vel, acc = self._kinematics(frame)
        try:
            events = self.recognizer.step(frame, vel, acc)
        except StreamOrderError as exc:
            return [self._error("order", str(exc))]
        self.clock = frame.t
        out: List[Dict[str, Any]] = []
        state_before = self.state
        for ev in events:
            self.event_log.append(ev)
            out.append({"type": "Event", "event": _event_payload(ev)})
            self.state, effects = dispatch(self.state, ev)
            for eff in effects:
                out.append({"type": "Effect", "effect": _effect_payload(eff)})
                if isinstance(eff, HapticTrigger):
                    self.active_haptic = (frame.t, eff.sensation)
        if self.active_haptic is not None:
            t0, sensation = self.active_haptic
            sample = sample_focus(sensation, max(0.0, frame.t - t0), frame)
            if sample is None:
                self.active_haptic = None
            else:
                out.append({"type": "Focal",
                            "focal": {"t": frame.t, "pos": list(sample.pos),
                                      "intensity": sample.intensity,
                                      "mode": sample.envelope_mode.value}})
        if self.state is not state_before:
            out.append(self._snapshot())
        if not out:
            out.append({"type": "Ack", "t": frame.t})
        return out

    def _kinematics(self, frame: HandFrame) -> Tuple[Vec3, Vec3]:
        prev = self._prev_frame
        if prev is None or not prev.hand_present or not frame.hand_present:
            vel: Vec3 = (0.0, 0.0, 0.0)
            acc: Vec3 = (0.0, 0.0, 0.0)
        else:
            dt = frame.t - prev.t
            vel = tuple((frame.palm_pos[i] - prev.palm_pos[i]) / dt
                        for i in range(3))
            acc = tuple((vel[i] - self._prev_vel[i]) / dt for i in range(3))
        self._prev_frame = frame
        self._prev_vel = vel
        return vel, acc


def create_app(config: Optional[RecognizerConfig] = None,
               heartbeat: bool = True) -> FastAPI:
    app = FastAPI(title="midair-ivis bridge")

    @app.websocket("/ws")
    async def ws_endpoint(ws: WebSocket) -> None:
        await ws.accept()
        session = Session(config=config)

        async def heartbeats() -> None:
            while True:
                await asyncio.sleep(HEARTBEAT_SECONDS)
                await ws.send_text(json.dumps({"type": "Ping"}))

        beat = asyncio.create_task(heartbeats()) if heartbeat else None
        try:
            while True:
                raw = await ws.receive_text()
                try:
                    msg = json.loads(raw)
                    if not isinstance(msg, dict):
                        raise ValueError("message must be a JSON object")
                except ValueError as exc:
                    replies = [{"type": "Error", "code": "parse",
                                "detail": str(exc)}]
                else:
                    replies = session.handle_message(msg)
                for reply in replies:
                    await ws.send_text(json.dumps(reply))
        except WebSocketDisconnect:
            pass
        finally:
            if beat is not None:
                beat.cancel()

    return app


def main(argv: Optional[List[str]] = None) -> int:
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(prog="midair-ivis-bridge")
    parser.add_argument("--port", type=int, default=DEFAULT_PORT)
    parser.add_argument("--host", default="127.0.0.1")
    args = parser.parse_args(argv)
    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
