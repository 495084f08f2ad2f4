/** Browser entry point: wires the editor to a canvas and a toolbar.
 *
 * Query parameters: ?graph=<id> selects the graph, ?api=<base url> points
 * at the routing service (defaults to same origin).
 */

import { drawCommands, ImageCache } from "./canvas.js";
import { ApiClient } from "./client.js";
import { Editor, type Mode } from "./editor.js";
import type { AlgorithmName } from "./types.js";

function query(name: string): string | null {
  return new URLSearchParams(window.location.search).get(name);
}

function canvasPoint(canvas: HTMLCanvasElement, event: MouseEvent) {
  const rect = canvas.getBoundingClientRect();
  return { x: event.clientX - rect.left, y: event.clientY - rect.top };
}

async function bootstrap(): Promise<void> {
  const canvas = document.getElementById("map") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d")!;
  const status = document.getElementById("status")!;

  const client = new ApiClient((url, init) => fetch(url, init), query("api") ?? "");
  const editor = new Editor(client);
  const images = new ImageCache(() => render());

  function render(): void {
    canvas.width = canvas.clientWidth;
    canvas.height = canvas.clientHeight;
    drawCommands(ctx, editor.drawCommands(), images);
    status.textContent = editor.lastResult
      ? `${editor.lastResult.algorithm}: cost ${editor.lastResult.cost} ` +
        `(${editor.lastResult.elapsed_ms.toFixed(1)} ms)`
      : `mode: ${editor.mode}`;
  }

  const run = (work: Promise<unknown>) => {
    void work.catch((err) => console.error(err)).finally(render);
  };

  canvas.addEventListener("pointerdown", (e) => {
    editor.onPointerDown(canvasPoint(canvas, e));
  });
  canvas.addEventListener("pointermove", (e) => {
    editor.onPointerMove(canvasPoint(canvas, e));
    if (e.buttons) render();
  });
  canvas.addEventListener("pointerup", (e) => {
    run(editor.onPointerUp(canvasPoint(canvas, e)));
  });
  canvas.addEventListener("wheel", (e) => {
    e.preventDefault();
    editor.onWheel(canvasPoint(canvas, e), e.deltaY);
    render();
  });

  for (const mode of ["select", "add-node", "add-edge", "waypoints"] as Mode[]) {
    document.getElementById(`mode-${mode}`)?.addEventListener("click", () => {
      editor.setMode(mode);
      render();
    });
  }

  const weightInput = document.getElementById("edge-weight") as HTMLInputElement | null;
  weightInput?.addEventListener("change", () => {
    const value = weightInput.value.trim();
    editor.pendingEdgeWeight = value === "" ? null : Number(value);
  });

  document.getElementById("run")?.addEventListener("click", () => {
    const algorithm = (document.getElementById("algorithm") as HTMLSelectElement)
      .value as AlgorithmName;
    const opt2 = (document.getElementById("opt2") as HTMLInputElement).checked;
    const opt3 = (document.getElementById("opt3") as HTMLInputElement).checked;
    const anchor = editor.selectedNode ?? editor.graph?.nodes[0]?.id;
    run(
      editor.runAlgorithm(algorithm, {
        source: algorithm === "dijkstra" || algorithm === "prim" ? anchor : undefined,
        depot: algorithm === "chinese_postman" ? anchor : undefined,
        start: algorithm === "christofides" ? anchor : undefined,
        opt2: algorithm === "christofides" ? opt2 : undefined,
        opt3: algorithm === "christofides" ? opt3 : undefined,
      }),
    );
  });

  document.getElementById("clear-result")?.addEventListener("click", () => {
    editor.lastResult = null;
    editor.pendingWaypoints = [];
    render();
  });

  const graphId = query("graph") ?? "demo";
  try {
    await editor.load(graphId);
  } catch (err) {
    editor.notices.push(`could not load graph ${graphId}`);
    console.error(err);
  }
  render();
}

void bootstrap();
