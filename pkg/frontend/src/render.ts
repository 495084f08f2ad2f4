/** Pure scene renderer: (view state, graph, result) -> draw-command list.
 *
 * No canvas access here; the command list is deterministic for a given
 * scene, which makes rendering snapshot-testable.  All coordinates in the
 * emitted commands are screen pixels.
 */

import type { ViewTransform } from "./transform.js";
import type { AlgorithmResultDto, GraphDoc, Point } from "./types.js";

export const RESULT_COLORS: Record<string, string> = {
  // routes are drawn in green, spanning trees in blue
  dijkstra: "#1565c0",
  prim: "#1565c0",
  floyd_route: "#00a33d",
  chinese_postman: "#00a33d",
  christofides: "#00a33d",
};

export const NODE_FILL = "#d32f2f";
export const NODE_SELECTED_FILL = "#ff9800";
export const EDGE_COLOR = "#555555";
export const WAYPOINT_COLOR = "#7b1fa2";
export const NODE_RADIUS = 6;
export const DUPLICATE_OFFSET_PX = 4;

export type DrawCommand =
  | { kind: "overlay"; url: string; at: Point; width: number; height: number }
  | { kind: "line"; from: Point; to: Point; color: string; width: number }
  | { kind: "circle"; at: Point; radius: number; fill: string; stroke?: string }
  | { kind: "label"; at: Point; text: string; color: string }
  | { kind: "badge"; text: string; value: number }
  | { kind: "notice"; text: string };

export interface Scene {
  graph: GraphDoc | null;
  overlayUrl: string | null;
  view: ViewTransform;
  selectedNode: number | null;
  edgeAnchor: number | null;
  pendingWaypoints: number[];
  result: AlgorithmResultDto | null;
  notices: string[];
}

function nodeById(graph: GraphDoc, id: number) {
  return graph.nodes.find((n) => n.id === id);
}

function resultLines(scene: Scene): DrawCommand[] {
  const { graph, result, view } = scene;
  if (!graph || !result) return [];
  const color = RESULT_COLORS[result.algorithm] ?? "#00a33d";
  const commands: DrawCommand[] = [];

  if (result.segments) {
    // tree results: one segment per member edge
    for (const [[x1, y1], [x2, y2]] of result.segments) {
      commands.push({
        kind: "line",
        from: view.toScreen({ x: x1, y: y1 }),
        to: view.toScreen({ x: x2, y: y2 }),
        color,
        width: 3,
      });
    }
    return commands;
  }

  const seen = new Map<number, number>();
  const polyline = result.polyline;
  for (let i = 0; i + 1 < polyline.length; i++) {
    const [x1, y1] = polyline[i]!;
    const [x2, y2] = polyline[i + 1]!;
    let from = view.toScreen({ x: x1, y: y1 });
    let to = view.toScreen({ x: x2, y: y2 });
    const edgeId = result.edge_ids?.[i];
    if (edgeId !== undefined) {
      // postman duplicates: draw repeated traversals side by side
      const pass = seen.get(edgeId) ?? 0;
      seen.set(edgeId, pass + 1);
      if (pass > 0) {
        const [ox, oy] = perpendicularOffset(from, to, pass * DUPLICATE_OFFSET_PX);
        from = { x: from.x + ox, y: from.y + oy };
        to = { x: to.x + ox, y: to.y + oy };
      }
    }
    commands.push({ kind: "line", from, to, color, width: 3 });
  }
  return commands;
}

function perpendicularOffset(from: Point, to: Point, distance: number): [number, number] {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const length = Math.hypot(dx, dy);
  if (length === 0) return [distance, 0];
  return [(-dy / length) * distance, (dx / length) * distance];
}

export function renderScene(scene: Scene): DrawCommand[] {
  const commands: DrawCommand[] = [];
  const { graph, view } = scene;

  if (graph?.overlay && scene.overlayUrl) {
    commands.push({
      kind: "overlay",
      url: scene.overlayUrl,
      at: view.toScreen({ x: 0, y: 0 }),
      width: graph.overlay.width * view.zoom,
      height: graph.overlay.height * view.zoom,
    });
  }
  if (!graph) {
    for (const text of scene.notices) commands.push({ kind: "notice", text });
    return commands;
  }

  for (const edge of graph.edges) {
    const u = nodeById(graph, edge.u);
    const v = nodeById(graph, edge.v);
    if (!u || !v) continue;
    commands.push({
      kind: "line",
      from: view.toScreen(u),
      to: view.toScreen(v),
      color: EDGE_COLOR,
      width: 1.5,
    });
  }

  commands.push(...resultLines(scene));

  for (const node of graph.nodes) {
    const at = view.toScreen(node);
    const isSelected = node.id === scene.selectedNode || node.id === scene.edgeAnchor;
    commands.push({
      kind: "circle",
      at,
      radius: NODE_RADIUS,
      fill: isSelected ? NODE_SELECTED_FILL : NODE_FILL,
      stroke: "#ffffff",
    });
    if (node.label) {
      commands.push({
        kind: "label",
        at: { x: at.x + NODE_RADIUS + 2, y: at.y - NODE_RADIUS },
        text: node.label,
        color: "#222222",
      });
    }
  }

  scene.pendingWaypoints.forEach((nodeId, i) => {
    const node = nodeById(graph, nodeId);
    if (!node) return;
    const at = view.toScreen(node);
    commands.push({
      kind: "circle",
      at,
      radius: NODE_RADIUS + 4,
      fill: "transparent",
      stroke: WAYPOINT_COLOR,
    });
    commands.push({
      kind: "label",
      at: { x: at.x + NODE_RADIUS + 6, y: at.y + NODE_RADIUS + 6 },
      text: String(i + 1),
      color: WAYPOINT_COLOR,
    });
  });

  if (scene.result) {
    // the badge shows the cost exactly as the API reported it
    commands.push({
      kind: "badge",
      text: `cost ${formatCost(scene.result.cost)}`,
      value: scene.result.cost,
    });
  }
  for (const text of scene.notices) commands.push({ kind: "notice", text });
  return commands;
}

export function formatCost(cost: number): string {
  return Number.isInteger(cost) ? String(cost) : cost.toFixed(3);
}
