"""HTTP API for graph editing and algorithm execution.

Status codes: 400 malformed body, 404 unknown graph/node/edge, 409 graph
invariant violation (self-loop, negative weight, off-overlay coordinate),
422 algorithm precondition failure (disconnected, odd degree, too few
nodes, ...).  Mutations are persisted before the response is sent.
"""

from __future__ import annotations

import mimetypes
import os

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import FileResponse, JSONResponse

from ..errors import (
    CardinalityTooLarge,
    Disconnected,
    EmptyGraph,
    GraphInvalid,
    InvalidCoordinate,
    NegativeWeight,
    OddCardinality,
    OddDegreePresent,
    RouteGraphError,
    SelfLoopRejected,
    TooFewNodes,
    TooLarge,
    Unreachable,
    UnknownEdge,
    UnknownNode,
)
from ..graph import Graph
from ..serialization import parse_graph, serialize_graph
from .runner import AlgorithmRequest, BadRequest, run_algorithm
from .store import GraphStore, UnknownGraph

_STATUS_BY_ERROR = [
    ((BadRequest, GraphInvalid), 400),
    ((UnknownNode, UnknownEdge), 404),
    ((SelfLoopRejected, NegativeWeight, InvalidCoordinate), 409),
    ((Disconnected, OddDegreePresent, Unreachable, OddCardinality,
      CardinalityTooLarge, TooFewNodes, TooLarge, EmptyGraph), 422),
]

DEFAULT_DATA_DIR = "route-data"
DEFAULT_BIND = "127.0.0.1:8000"


def _node_payload(g: Graph, node_id: int) -> dict:
    node = g.node(node_id)
    return {"id": node.id, "x": node.x, "y": node.y, "label": node.label}


def _edge_payload(g: Graph, edge_id: int) -> dict:
    e = g.edge(edge_id)
    return {"id": e.id, "u": e.u, "v": e.v, "weight": e.weight,
            "duplicated_from": e.duplicated_from}


def _get_number(body: dict, name: str, required: bool = True) -> float | None:
    value = body.get(name)
    if value is None:
        if required:
            raise BadRequest(f"missing numeric field {name!r}")
        return None
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise BadRequest(f"field {name!r} must be a number")
    return float(value)


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception as exc:
        raise BadRequest(f"request body is not valid JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise BadRequest("request body must be a JSON object")
    return body


def create_app(store: GraphStore) -> FastAPI:
    app = FastAPI(title="routegraph", version="0.1.0")

    @app.exception_handler(UnknownGraph)
    async def _unknown_graph(request: Request, exc: UnknownGraph) -> JSONResponse:
        return JSONResponse(status_code=404, content={"detail": f"unknown graph {exc.args[0]!r}"})

    @app.exception_handler(RequestValidationError)
    async def _validation(request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(RouteGraphError)
    async def _engine_error(request: Request, exc: RouteGraphError) -> JSONResponse:
        for types, status in _STATUS_BY_ERROR:
            if isinstance(exc, types):
                return JSONResponse(status_code=status, content={"detail": str(exc)})
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/healthz")
    async def healthz() -> dict:
        return {"status": "ok"}

    @app.post("/graphs", status_code=201)
    async def create_graph(request: Request) -> dict:
        g = parse_graph(await _json_body(request))
        graph_id = store.create(g)
        return {"id": graph_id}

    @app.get("/graphs/{graph_id}")
    async def get_graph(graph_id: str) -> dict:
        return serialize_graph(store.get(graph_id))

    @app.put("/graphs/{graph_id}")
    async def put_graph(graph_id: str, request: Request, response: Response) -> dict:
        g = parse_graph(await _json_body(request))
        created = graph_id not in store
        store.put(graph_id, g)
        response.status_code = 201 if created else 200
        return {"id": graph_id}

    @app.post("/graphs/{graph_id}/nodes", status_code=201)
    async def create_node(graph_id: str, request: Request) -> dict:
        body = await _json_body(request)
        x = _get_number(body, "x")
        y = _get_number(body, "y")
        label = body.get("label")
        if label is not None and not isinstance(label, str):
            raise BadRequest("label must be a string")
        assigned: list[int] = []

        def apply(g: Graph) -> Graph:
            assigned.append(g.next_node_id)  # id capture under the write lock
            return g.add_node(x, y, label=label)

        updated = store.mutate(graph_id, apply)
        return _node_payload(updated, assigned[0])

    @app.patch("/graphs/{graph_id}/nodes/{node_id}")
    async def patch_node(graph_id: str, node_id: int, request: Request) -> dict:
        body = await _json_body(request)
        x = _get_number(body, "x", required=False)
        y = _get_number(body, "y", required=False)
        if (x is None) != (y is None):
            raise BadRequest("moving a node requires both x and y")
        relabel = "label" in body
        label = body.get("label")
        if label is not None and not isinstance(label, str):
            raise BadRequest("label must be a string")

        def apply(g: Graph) -> Graph:
            if x is not None:
                g = g.move_node(node_id, x, y)
            if relabel:
                g = g.relabel_node(node_id, label)
            else:
                g.node(node_id)  # 404 for pure no-op patches on missing nodes
            return g

        updated = store.mutate(graph_id, apply)
        return _node_payload(updated, node_id)

    @app.delete("/graphs/{graph_id}/nodes/{node_id}", status_code=204)
    async def delete_node(graph_id: str, node_id: int) -> Response:
        store.mutate(graph_id, lambda g: g.remove_node(node_id))
        return Response(status_code=204)

    @app.post("/graphs/{graph_id}/edges", status_code=201)
    async def create_edge(graph_id: str, request: Request) -> dict:
        body = await _json_body(request)
        u = body.get("u")
        v = body.get("v")
        for name, value in (("u", u), ("v", v)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise BadRequest(f"field {name!r} must be a node id")
        weight = _get_number(body, "weight", required=False)
        assigned: list[int] = []

        def apply(g: Graph) -> Graph:
            assigned.append(g.next_edge_id)
            return g.add_edge(u, v, weight=weight)

        updated = store.mutate(graph_id, apply)
        return _edge_payload(updated, assigned[0])

    @app.delete("/graphs/{graph_id}/edges/{edge_id}", status_code=204)
    async def delete_edge(graph_id: str, edge_id: int) -> Response:
        store.mutate(graph_id, lambda g: g.remove_edge(edge_id))
        return Response(status_code=204)

    @app.post("/graphs/{graph_id}/run")
    async def run(graph_id: str, request: Request) -> dict:
        body = await _json_body(request)
        req = AlgorithmRequest.from_dict(body)
        snapshot = store.get(graph_id)  # runs never observe later edits
        return run_algorithm(snapshot, req)

    @app.get("/graphs/{graph_id}/overlay")
    async def overlay(graph_id: str) -> Response:
        path = store.overlay_file(graph_id)
        if path is None or not path.is_file():
            return JSONResponse(status_code=404, content={"detail": "no overlay image"})
        media_type = mimetypes.guess_type(path.name)[0] or "application/octet-stream"
        return FileResponse(path, media_type=media_type)

    return app


def create_default_app() -> FastAPI:
    """App factory for ``uvicorn --factory``; honors ROUTE_DATA_DIR."""
    data_dir = os.environ.get("ROUTE_DATA_DIR", DEFAULT_DATA_DIR)
    return create_app(GraphStore(data_dir))
