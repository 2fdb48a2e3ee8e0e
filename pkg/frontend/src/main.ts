import { Renderer, defaultAudioSink } from "./renderer.js";
import { ViewState } from "./viewState.js";
import { VirtualHand } from "./virtualHand.js";
import { WireClient, bridgeUrl } from "./wire.js";

function start(): void {
  const root = document.getElementById("app");
  const canvas = document.getElementById("trail") as HTMLCanvasElement | null;
  const handArea = document.getElementById("hand-area");
  if (!root || !canvas || !handArea) throw new Error("missing #app/#trail/#hand-area");

  const view = new ViewState();
  const renderer = new Renderer(root, canvas, defaultAudioSink());
  const client = new WireClient({
    onMessage: (msg) => view.apply(msg),
    onOpen: () => {
      view.setConnected(true);
      client.send({ type: "Hello", nav_method: "FingerPose" });
    },
    onClose: () => view.setConnected(false),
  });
  const hand = new VirtualHand((msg) => client.send(msg));

  handArea.addEventListener("pointermove", (evt) => {
    const rect = handArea.getBoundingClientRect();
    hand.pointerMove(evt.clientX - rect.left, evt.clientY - rect.top, {
      width: rect.width,
      height: rect.height,
    });
  });
  handArea.addEventListener("wheel", (evt) => {
    evt.preventDefault();
    hand.wheel(Math.sign(evt.deltaY));
  });
  window.addEventListener("keydown", (evt) => {
    if (!evt.repeat) hand.keyDown(evt.key);
  });
  window.addEventListener("keyup", (evt) => hand.keyUp(evt.key));

  client.connect(bridgeUrl(window.location.search));

  const loop = (nowMs: number) => {
    hand.tick(nowMs);
    renderer.render(view);
    requestAnimationFrame(loop);
  };
  requestAnimationFrame(loop);
}

start();
