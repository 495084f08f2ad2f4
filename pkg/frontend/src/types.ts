/** Wire types for the routegraph HTTP API. */

export interface Point {
  x: number;
  y: number;
}

export interface OverlayDto {
  image_path: string;
  width: number;
  height: number;
}

export interface NodeDto {
  id: number;
  x: number;
  y: number;
  label?: string | null;
}

export interface EdgeDto {
  id: number;
  u: number;
  v: number;
  weight: number;
  duplicated_from?: number | null;
}

export interface GraphDoc {
  overlay: OverlayDto | null;
  nodes: NodeDto[];
  edges: EdgeDto[];
}

export type AlgorithmName =
  | "dijkstra"
  | "floyd_route"
  | "prim"
  | "chinese_postman"
  | "christofides";

export interface AlgorithmRequestDto {
  algorithm: AlgorithmName;
  source?: number;
  waypoints?: number[];
  depot?: number;
  start?: number;
  opt2?: boolean;
  opt3?: boolean;
}

export type ResultKind = "route" | "tree" | "walk" | "tour";

/** Result payload from POST /graphs/{id}/run; fields vary with `kind`. */
export interface AlgorithmResultDto {
  algorithm: AlgorithmName;
  kind: ResultKind;
  cost: number;
  elapsed_ms: number;
  polyline: [number, number][];
  node_sequence?: number[];
  edge_ids?: number[];
  segments?: [[number, number], [number, number]][];
  dist?: Record<string, number | null>;
  pred?: Record<string, number>;
  source?: number;
  root?: number;
  depot?: number;
  start?: number;
  waypoints?: number[];
  opt2?: boolean;
  opt3?: boolean;
}
