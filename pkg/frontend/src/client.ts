/** Typed client for the routegraph HTTP API.
 *
 * The transport is injected so tests can script the server side; the
 * browser entry point passes the real `fetch`.
 */

import type {
  AlgorithmRequestDto,
  AlgorithmResultDto,
  EdgeDto,
  GraphDoc,
  NodeDto,
} from "./types.js";

export interface FetchResponseLike {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string, init?: {
  method?: string;
  headers?: Record<string, string>;
  body?: string;
}) => Promise<FetchResponseLike>;

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike,
    readonly baseUrl: string = "",
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: Parameters<FetchLike>[1] = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = `HTTP ${response.status}`;
      try {
        const payload = (await response.json()) as { detail?: string };
        if (payload && typeof payload.detail === "string") detail = payload.detail;
      } catch {
        // keep the generic message for non-JSON error bodies
      }
      throw new ApiError(response.status, detail);
    }
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }

  getGraph(graphId: string): Promise<GraphDoc> {
    return this.request("GET", `/graphs/${graphId}`);
  }

  putGraph(graphId: string, doc: GraphDoc): Promise<{ id: string }> {
    return this.request("PUT", `/graphs/${graphId}`, doc);
  }

  createNode(graphId: string, body: { x: number; y: number; label?: string }): Promise<NodeDto> {
    return this.request("POST", `/graphs/${graphId}/nodes`, body);
  }

  patchNode(
    graphId: string,
    nodeId: number,
    body: { x?: number; y?: number; label?: string | null },
  ): Promise<NodeDto> {
    return this.request("PATCH", `/graphs/${graphId}/nodes/${nodeId}`, body);
  }

  deleteNode(graphId: string, nodeId: number): Promise<void> {
    return this.request("DELETE", `/graphs/${graphId}/nodes/${nodeId}`);
  }

  createEdge(
    graphId: string,
    body: { u: number; v: number; weight?: number },
  ): Promise<EdgeDto> {
    return this.request("POST", `/graphs/${graphId}/edges`, body);
  }

  deleteEdge(graphId: string, edgeId: number): Promise<void> {
    return this.request("DELETE", `/graphs/${graphId}/edges/${edgeId}`);
  }

  run(graphId: string, request: AlgorithmRequestDto): Promise<AlgorithmResultDto> {
    return this.request("POST", `/graphs/${graphId}/run`, request);
  }

  overlayUrl(graphId: string): string {
    return `${this.baseUrl}/graphs/${graphId}/overlay`;
  }
}
