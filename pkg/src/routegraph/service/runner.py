"""Algorithm dispatch shared by the CLI and the HTTP API.

Requests name one of the five algorithms plus its parameters; results are
plain JSON-ready dicts so the two front doors always agree byte for byte
(timing excluded) with a direct library call.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Sequence

from ..errors import RouteGraphError
from ..graph import Graph
from ..postman import chinese_postman
from ..shortest_paths import dijkstra, resolve_route_edges, route_via_waypoints
from ..spanning import prim_mst
from ..tsp import christofides, metric_closure, three_opt, two_opt

ALGORITHMS = ("dijkstra", "floyd_route", "prim", "chinese_postman", "christofides")


class BadRequest(RouteGraphError):
    """Malformed or incomplete algorithm request."""


@dataclass(frozen=True)
class AlgorithmRequest:
    algorithm: str
    source: int | None = None
    waypoints: tuple[int, ...] = field(default=())
    depot: int | None = None
    start: int | None = None
    opt2: bool = False
    opt3: bool = False

    @classmethod
    def from_dict(cls, raw: Any) -> "AlgorithmRequest":
        if not isinstance(raw, dict):
            raise BadRequest("request body must be a JSON object")
        algorithm = raw.get("algorithm")
        if algorithm not in ALGORITHMS:
            raise BadRequest(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")

        def node_id(name: str) -> int | None:
            value = raw.get(name)
            if value is None:
                return None
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise BadRequest(f"{name} must be a non-negative integer")
            return value

        waypoints = raw.get("waypoints", [])
        if not isinstance(waypoints, list) or any(
            not isinstance(w, int) or isinstance(w, bool) or w < 0 for w in waypoints
        ):
            raise BadRequest("waypoints must be a list of non-negative integers")
        flags = {}
        for name in ("opt2", "opt3"):
            value = raw.get(name, False)
            if not isinstance(value, bool):
                raise BadRequest(f"{name} must be a boolean")
            flags[name] = value
        return cls(
            algorithm=algorithm,
            source=node_id("source"),
            waypoints=tuple(waypoints),
            depot=node_id("depot"),
            start=node_id("start"),
            **flags,
        )


def _point(g: Graph, v: int) -> list[float]:
    node = g.node(v)
    return [node.x, node.y]


def _polyline(g: Graph, nodes: Sequence[int]) -> list[list[float]]:
    return [_point(g, v) for v in nodes]


def _segments(g: Graph, edge_ids: Sequence[int]) -> list[list[list[float]]]:
    return [[_point(g, g.edge(eid).u), _point(g, g.edge(eid).v)] for eid in edge_ids]


def _default_node(g: Graph, value: int | None) -> int:
    if value is not None:
        return value
    if g.n == 0:
        raise BadRequest("graph has no nodes")
    return g.node_ids[0]


def _run_dijkstra(g: Graph, req: AlgorithmRequest) -> dict:
    if req.source is None:
        raise BadRequest("dijkstra requires a source node")
    tree = dijkstra(g, req.source)
    edge_ids = []
    cost = 0.0
    for v in sorted(tree.pred):
        eid = resolve_route_edges(g, (tree.pred[v], v))[0]
        edge_ids.append(eid)
        cost += g.edge(eid).weight
    return {
        "kind": "tree",
        "source": tree.source,
        "dist": {str(v): tree.dist[v] for v in sorted(tree.dist)},
        "pred": {str(v): tree.pred[v] for v in sorted(tree.pred)},
        "edge_ids": edge_ids,
        "cost": cost,
        "polyline": [],
        "segments": _segments(g, edge_ids),
    }


def _run_floyd_route(g: Graph, req: AlgorithmRequest) -> dict:
    if not req.waypoints:
        raise BadRequest("floyd_route requires at least one waypoint")
    stops = list(req.waypoints)
    route = route_via_waypoints(g, stops[0], stops[1:-1], stops[-1])
    return {
        "kind": "route",
        "waypoints": stops,
        "node_sequence": list(route.nodes),
        "edge_ids": list(resolve_route_edges(g, route.nodes)),
        "cost": route.cost,
        "polyline": _polyline(g, route.nodes),
    }


def _run_prim(g: Graph, req: AlgorithmRequest) -> dict:
    tree = prim_mst(g, _default_node(g, req.source))
    return {
        "kind": "tree",
        "root": tree.root,
        "edge_ids": list(tree.edges),
        "cost": tree.total_weight,
        "polyline": [],
        "segments": _segments(g, tree.edges),
    }


def _run_chinese_postman(g: Graph, req: AlgorithmRequest) -> dict:
    walk = chinese_postman(g, _default_node(g, req.depot))
    return {
        "kind": "walk",
        "depot": walk.start,
        "node_sequence": list(walk.node_sequence),
        "edge_ids": list(walk.edge_sequence),
        "cost": walk.total_cost,
        "polyline": _polyline(g, walk.node_sequence),
    }


def _run_christofides(g: Graph, req: AlgorithmRequest) -> dict:
    start = _default_node(g, req.start)
    instance = metric_closure(g)
    tour = christofides(instance, start)
    if req.opt2:
        tour = two_opt(tour, instance)
    if req.opt3:
        tour = three_opt(tour, instance)
    closed = list(tour.nodes) + [tour.nodes[0]]
    return {
        "kind": "tour",
        "start": start,
        "opt2": req.opt2,
        "opt3": req.opt3,
        "node_sequence": list(tour.nodes),
        "cost": tour.cost,
        "polyline": _polyline(g, closed),
    }


_RUNNERS = {
    "dijkstra": _run_dijkstra,
    "floyd_route": _run_floyd_route,
    "prim": _run_prim,
    "chinese_postman": _run_chinese_postman,
    "christofides": _run_christofides,
}


def run_algorithm(g: Graph, req: AlgorithmRequest) -> dict:
    """Execute one algorithm on a graph snapshot and time it."""
    started = time.perf_counter()
    result = _RUNNERS[req.algorithm](g, req)
    result["algorithm"] = req.algorithm
    result["elapsed_ms"] = (time.perf_counter() - started) * 1000.0
    return result


def normalize_result(result: dict) -> str:
    """Canonical JSON for result comparison; timing is never reproducible."""
    trimmed = {k: v for k, v in result.items() if k != "elapsed_ms"}
    return json.dumps(trimmed, sort_keys=True, separators=(",", ":"))
