/** Message types for the bridge wire protocol (see docs/wire.md). */

export type NavMethod = "FingerPose" | "Radial3D";
export type Stimulus = "IncomingCall" | "RouteSuggestion" | "CallerHangup";

export interface VirtualControlMsg {
  type: "VirtualControl";
  x: number;
  y: number;
  z: number;
  pinch?: number;
  grab?: number;
  fingers?: boolean[];
  normal?: number[];
}

export type ClientMsg =
  | { type: "Hello"; nav_method: NavMethod }
  | VirtualControlMsg
  | { type: "Trigger"; stimulus: Stimulus }
  | { type: "SetNavMethod"; method: NavMethod };

export interface SnapshotState {
  mode: string;
  nav_method: NavMethod;
  media: { playing: boolean; track_index: number; volume: number };
  temperature: number;
  fan: number;
  nav_zoom: number;
  modal: string | null;
  radial_highlight: string | null;
}

export interface EventPayload {
  t: number;
  kind: string;
  pos: number[];
  direction?: string;
  delta?: number[];
  count?: number;
}

export interface EffectPayload {
  kind: string;
  focused_region?: string;
  dimmed_regions?: string[];
  label?: string;
  action?: string;
  sensation?: string;
}

export interface FocalPayload {
  t: number;
  pos: number[];
  intensity: number;
  mode: string;
}

export type ServerMsg =
  | { type: "Snapshot"; state: SnapshotState }
  | { type: "Event"; event: EventPayload }
  | { type: "Effect"; effect: EffectPayload }
  | { type: "Focal"; focal: FocalPayload }
  | { type: "Error"; code: string; detail: string }
  | { type: "Ack"; t: number }
  | { type: "Ping" };

export interface Socket {
  send(data: string): void;
  close(): void;
}

export interface WireCallbacks {
  onMessage(msg: ServerMsg): void;
  onOpen?(): void;
  onClose?(): void;
}

/** Thin wrapper around a WebSocket; the socket factory is injectable so the
 *  view model can be exercised without a browser. */
export class WireClient {
  private socket: Socket | null = null;
  private open = false;

  constructor(private readonly callbacks: WireCallbacks) {}

  connect(url: string): void {
    const ws = new WebSocket(url);
    ws.onopen = () => {
      this.open = true;
      this.callbacks.onOpen?.();
    };
    ws.onmessage = (evt) => {
      let parsed: ServerMsg;
      try {
        parsed = JSON.parse(String(evt.data)) as ServerMsg;
      } catch {
        return;
      }
      this.callbacks.onMessage(parsed);
    };
    ws.onclose = () => {
      this.open = false;
      this.callbacks.onClose?.();
    };
    this.socket = {
      send: (data) => ws.send(data),
      close: () => ws.close(),
    };
  }

  get connected(): boolean {
    return this.open;
  }

  send(msg: ClientMsg): boolean {
    if (!this.socket || !this.open) return false;
    this.socket.send(JSON.stringify(msg));
    return true;
  }

  close(): void {
    this.socket?.close();
  }
}

export function bridgeUrl(query: string, defaultPort = 7341): string {
  const params = new URLSearchParams(query);
  const port = Number(params.get("port") ?? defaultPort);
  const host = params.get("host") ?? "localhost";
  return `ws://${host}:${port}/ws`;
}
