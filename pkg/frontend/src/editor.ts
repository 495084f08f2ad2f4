/** Editor state machine: pointer gestures in, API calls + draw commands out.
 *
 * Gestures arrive in screen coordinates.  A pointer press on a node starts
 * a drag (select mode): the node follows the pointer optimistically and a
 * single PATCH with the final coordinates is sent on release, reconciled
 * against the server's response.  Short presses are clicks and dispatch on
 * the current mode.  API failures surface as non-blocking notices; a 409
 * means the view is stale, so the graph is refetched.
 */

import { ApiClient, ApiError } from "./client.js";
import { renderScene, type DrawCommand } from "./render.js";
import { ViewTransform } from "./transform.js";
import type {
  AlgorithmName,
  AlgorithmRequestDto,
  AlgorithmResultDto,
  GraphDoc,
  NodeDto,
  Point,
} from "./types.js";

export type Mode = "select" | "add-node" | "add-edge" | "waypoints";

export const DRAG_THRESHOLD_PX = 3;
export const HIT_RADIUS_PX = 10;
export const MAX_NOTICES = 5;

interface DragState {
  nodeId: number;
  origin: NodeDto;
  lastImage: Point;
  moved: boolean;
}

export class Editor {
  graphId: string | null = null;
  graph: GraphDoc | null = null;
  readonly view = new ViewTransform();
  mode: Mode = "select";
  selectedNode: number | null = null;
  edgeAnchor: number | null = null;
  pendingWaypoints: number[] = [];
  lastResult: AlgorithmResultDto | null = null;
  notices: string[] = [];
  /** Weight for new edges; null means let the server use the Euclidean default. */
  pendingEdgeWeight: number | null = null;

  private drag: DragState | null = null;
  private pressPoint: Point | null = null;

  constructor(readonly client: ApiClient) {}

  // -- loading ---------------------------------------------------------------

  async load(graphId: string): Promise<void> {
    this.graphId = graphId;
    this.graph = await this.client.getGraph(graphId);
    this.selectedNode = null;
    this.edgeAnchor = null;
    this.pendingWaypoints = [];
    this.lastResult = null;
  }

  async refetch(): Promise<void> {
    if (!this.graphId) return;
    this.graph = await this.client.getGraph(this.graphId);
    const ids = new Set(this.graph.nodes.map((n) => n.id));
    if (this.selectedNode !== null && !ids.has(this.selectedNode)) this.selectedNode = null;
    if (this.edgeAnchor !== null && !ids.has(this.edgeAnchor)) this.edgeAnchor = null;
    this.pendingWaypoints = this.pendingWaypoints.filter((id) => ids.has(id));
  }

  overlayUrl(): string | null {
    return this.graphId && this.graph?.overlay ? this.client.overlayUrl(this.graphId) : null;
  }

  setMode(mode: Mode): void {
    this.mode = mode;
    this.edgeAnchor = null;
    if (mode !== "waypoints") this.pendingWaypoints = [];
  }

  // -- hit testing -----------------------------------------------------------

  hitTestNode(screen: Point): NodeDto | null {
    if (!this.graph) return null;
    const radius = HIT_RADIUS_PX;
    let best: NodeDto | null = null;
    let bestDistance = Infinity;
    for (const node of this.graph.nodes) {
      const at = this.view.toScreen(node);
      const distance = Math.hypot(at.x - screen.x, at.y - screen.y);
      if (distance <= radius && distance < bestDistance) {
        best = node;
        bestDistance = distance;
      }
    }
    return best;
  }

  // -- pointer gestures --------------------------------------------------------

  onPointerDown(screen: Point): void {
    this.pressPoint = screen;
    if (this.mode !== "select" || !this.graph) return;
    const node = this.hitTestNode(screen);
    if (node) {
      this.drag = {
        nodeId: node.id,
        origin: { ...node },
        lastImage: { x: node.x, y: node.y },
        moved: false,
      };
    }
  }

  onPointerMove(screen: Point): void {
    if (!this.drag || !this.pressPoint || !this.graph) return;
    if (!this.drag.moved) {
      const travel = Math.hypot(screen.x - this.pressPoint.x, screen.y - this.pressPoint.y);
      if (travel < DRAG_THRESHOLD_PX) return;
      this.drag.moved = true;
    }
    const image = this.view.toImage(screen);
    const clamped = this.clampToOverlay(image);
    this.drag.lastImage = clamped;
    this.updateLocalNode(this.drag.nodeId, clamped); // optimistic
  }

  async onPointerUp(screen: Point): Promise<void> {
    const drag = this.drag;
    const press = this.pressPoint;
    this.drag = null;
    this.pressPoint = null;

    if (drag && drag.moved) {
      await this.commitDrag(drag);
      return;
    }
    if (press) await this.onClick(screen);
  }

  onWheel(screen: Point, deltaY: number): void {
    const factor = Math.exp(-deltaY / 400);
    this.view.zoomAbout(screen, factor);
  }

  // -- click dispatch ------------------------------------------------------------

  async onClick(screen: Point): Promise<void> {
    if (!this.graph || !this.graphId) return;
    const hit = this.hitTestNode(screen);
    switch (this.mode) {
      case "select":
        this.selectedNode = hit ? hit.id : null;
        break;
      case "add-node":
        if (hit) {
          this.selectedNode = hit.id;
        } else {
          await this.createNodeAt(this.view.toImage(screen));
        }
        break;
      case "add-edge":
        if (!hit) break;
        if (this.edgeAnchor === null) {
          this.edgeAnchor = hit.id;
        } else if (this.edgeAnchor !== hit.id) {
          await this.createEdge(this.edgeAnchor, hit.id);
          this.edgeAnchor = null;
        }
        break;
      case "waypoints":
        if (hit) this.pendingWaypoints.push(hit.id); // clicks define priority order
        break;
    }
  }

  // -- algorithm execution ----------------------------------------------------

  async runAlgorithm(
    algorithm: AlgorithmName,
    params: Partial<AlgorithmRequestDto> = {},
  ): Promise<AlgorithmResultDto | null> {
    if (!this.graphId) return null;
    const request: AlgorithmRequestDto = { algorithm, ...params };
    if (algorithm === "floyd_route" && request.waypoints === undefined) {
      request.waypoints = [...this.pendingWaypoints];
    }
    try {
      this.lastResult = await this.client.run(this.graphId, request);
      return this.lastResult;
    } catch (error) {
      await this.handleApiError(error, `run ${algorithm}`);
      return null;
    }
  }

  // -- rendering ----------------------------------------------------------------

  drawCommands(): DrawCommand[] {
    return renderScene({
      graph: this.graph,
      overlayUrl: this.overlayUrl(),
      view: this.view,
      selectedNode: this.selectedNode,
      edgeAnchor: this.edgeAnchor,
      pendingWaypoints: this.pendingWaypoints,
      result: this.lastResult,
      notices: this.notices,
    });
  }

  // -- internals ------------------------------------------------------------------

  private clampToOverlay(image: Point): Point {
    const overlay = this.graph?.overlay;
    if (!overlay) return image;
    return {
      x: Math.min(overlay.width, Math.max(0, image.x)),
      y: Math.min(overlay.height, Math.max(0, image.y)),
    };
  }

  private updateLocalNode(nodeId: number, position: Point): void {
    if (!this.graph) return;
    this.graph = {
      ...this.graph,
      nodes: this.graph.nodes.map((n) =>
        n.id === nodeId ? { ...n, x: position.x, y: position.y } : n,
      ),
    };
  }

  private replaceLocalNode(node: NodeDto): void {
    if (!this.graph) return;
    this.graph = {
      ...this.graph,
      nodes: this.graph.nodes.map((n) => (n.id === node.id ? node : n)),
    };
  }

  private async commitDrag(drag: DragState): Promise<void> {
    if (!this.graphId) return;
    try {
      // exactly one PATCH per drag, carrying the final position
      const node = await this.client.patchNode(this.graphId, drag.nodeId, {
        x: drag.lastImage.x,
        y: drag.lastImage.y,
      });
      this.replaceLocalNode(node);
    } catch (error) {
      this.updateLocalNode(drag.nodeId, drag.origin); // roll the optimism back
      await this.handleApiError(error, `move node ${drag.nodeId}`);
    }
  }

  private async createNodeAt(image: Point): Promise<void> {
    if (!this.graphId) return;
    try {
      const node = await this.client.createNode(this.graphId, { x: image.x, y: image.y });
      this.graph = this.graph
        ? { ...this.graph, nodes: [...this.graph.nodes, node] }
        : this.graph;
      this.selectedNode = node.id;
    } catch (error) {
      await this.handleApiError(error, "add node");
    }
  }

  private async createEdge(u: number, v: number): Promise<void> {
    if (!this.graphId) return;
    const body: { u: number; v: number; weight?: number } = { u, v };
    if (this.pendingEdgeWeight !== null) body.weight = this.pendingEdgeWeight;
    try {
      const edge = await this.client.createEdge(this.graphId, body);
      this.graph = this.graph
        ? { ...this.graph, edges: [...this.graph.edges, edge] }
        : this.graph;
    } catch (error) {
      await this.handleApiError(error, `add edge ${u}-${v}`);
    }
  }

  private async handleApiError(error: unknown, action: string): Promise<void> {
    const message =
      error instanceof ApiError ? `${action}: ${error.message}` : `${action} failed`;
    this.notices.push(message);
    if (this.notices.length > MAX_NOTICES) this.notices.shift();
    if (error instanceof ApiError && error.status === 409) {
      await this.refetch(); // the view was stale; reload the committed state
    }
    if (!(error instanceof ApiError)) throw error;
  }
}
