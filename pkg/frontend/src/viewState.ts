/** Headless view model: a pure fold over server messages.
 *
 *  All rendering reads from this object; it contains no infotainment
 *  logic of its own, so replaying the same message sequence always
 *  yields an identical view.
 */

import type {
  EffectPayload,
  EventPayload,
  FocalPayload,
  ServerMsg,
  SnapshotState,
} from "./wire.js";

export const FEED_LIMIT = 50;
export const TRAIL_SECONDS = 1.0;

export interface FeedEntry<T> {
  seq: number;
  payload: T;
}

export type ConnectionStatus = "connecting" | "connected" | "disconnected";

export class ViewState {
  snapshot: SnapshotState | null = null;
  events: FeedEntry<EventPayload>[] = [];
  effects: FeedEntry<EffectPayload>[] = [];
  trail: FocalPayload[] = [];
  status: ConnectionStatus = "connecting";
  lastError: string | null = null;
  private seq = 0;

  setConnected(connected: boolean): void {
    this.status = connected ? "connected" : "disconnected";
  }

  apply(msg: ServerMsg): void {
    switch (msg.type) {
      case "Snapshot":
        this.snapshot = msg.state;
        break;
      case "Event":
        this.push(this.events, msg.event);
        break;
      case "Effect":
        this.push(this.effects, msg.effect);
        break;
      case "Focal":
        this.trail.push(msg.focal);
        this.pruneTrail(msg.focal.t);
        break;
      case "Error":
        this.lastError = `${msg.code}: ${msg.detail}`;
        break;
      case "Ack":
      case "Ping":
        break;
    }
  }

  private push<T>(feed: FeedEntry<T>[], payload: T): void {
    feed.push({ seq: this.seq++, payload });
    if (feed.length > FEED_LIMIT) {
      feed.splice(0, feed.length - FEED_LIMIT);
    }
  }

  private pruneTrail(now: number): void {
    const cutoff = now - TRAIL_SECONDS;
    while (this.trail.length > 0 && this.trail[0].t < cutoff) {
      this.trail.shift();
    }
  }
}
