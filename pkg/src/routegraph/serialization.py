"""Canonical UTF-8 JSON graph files.

Document shape::

    { "overlay": {"image_path": "map.png", "width": 1024, "height": 768} | null,
      "nodes": [{"id": 0, "x": 12.5, "y": 40.0, "label": "Correios"}, ...],
      "edges": [{"id": 0, "u": 0, "v": 1, "weight": 5.0}, ...] }

An edge without ``"weight"`` gets the Euclidean distance of its endpoints at
load time.  Unknown fields are ignored on read and never emitted on write.
Writing is canonical (sorted ids, fixed key order), so parse -> serialize is
byte-stable after one normalization pass.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any

from .errors import GraphInvalid, RouteGraphError
from .graph import Graph, Node, Overlay


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphInvalid(message)


def _as_id(value: Any, what: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool) and value >= 0,
             f"{what} must be a non-negative integer, got {value!r}")
    return value


def _as_number(value: Any, what: str) -> float:
    _require(isinstance(value, (int, float)) and not isinstance(value, bool),
             f"{what} must be a number, got {value!r}")
    return float(value)


def _parse_overlay(raw: Any) -> Overlay | None:
    if raw is None:
        return None
    _require(isinstance(raw, dict), "overlay must be an object or null")
    _require(isinstance(raw.get("image_path"), str), "overlay.image_path must be a string")
    width = raw.get("width")
    height = raw.get("height")
    for name, value in (("width", width), ("height", height)):
        _require(isinstance(value, int) and not isinstance(value, bool) and value > 0,
                 f"overlay.{name} must be a positive integer")
    return Overlay(raw["image_path"], width, height)


def parse_graph(document: str | bytes | dict) -> Graph:
    """Parse a graph document (JSON text or an already-decoded dict).

    Raises GraphInvalid for malformed JSON and for any schema or graph
    invariant violation; never lets a decoding error escape as a crash.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise GraphInvalid(f"not valid JSON: {exc}") from exc
    _require(isinstance(document, dict), "top-level value must be an object")
    overlay = _parse_overlay(document.get("overlay"))

    raw_nodes = document.get("nodes")
    raw_edges = document.get("edges")
    _require(isinstance(raw_nodes, list), '"nodes" must be a list')
    _require(isinstance(raw_edges, list), '"edges" must be a list')

    nodes: dict[int, Node] = {}
    for item in raw_nodes:
        _require(isinstance(item, dict), "each node must be an object")
        nid = _as_id(item.get("id"), "node id")
        _require(nid not in nodes, f"duplicate node id {nid}")
        x = _as_number(item.get("x"), f"node {nid} x")
        y = _as_number(item.get("y"), f"node {nid} y")
        label = item.get("label")
        _require(label is None or isinstance(label, str), f"node {nid} label must be a string")
        nodes[nid] = Node(nid, x, y, label)

    edges: list[tuple[int, int, int, float | None, int | None]] = []
    seen_edges: set[int] = set()
    for item in raw_edges:
        _require(isinstance(item, dict), "each edge must be an object")
        eid = _as_id(item.get("id"), "edge id")
        _require(eid not in seen_edges, f"duplicate edge id {eid}")
        seen_edges.add(eid)
        u = _as_id(item.get("u"), f"edge {eid} endpoint u")
        v = _as_id(item.get("v"), f"edge {eid} endpoint v")
        _require(u in nodes and v in nodes, f"edge {eid} references a missing node")
        if "weight" in item and item["weight"] is not None:
            weight = _as_number(item["weight"], f"edge {eid} weight")
        else:
            weight = None  # Euclidean at load, resolved by Graph.add_edge
        dup = item.get("duplicated_from")
        if dup is not None:
            dup = _as_id(dup, f"edge {eid} duplicated_from")
        edges.append((eid, u, v, weight, dup))

    try:
        g = Graph(overlay)
        for node in sorted(nodes.values(), key=lambda n: n.id):
            g = g.add_node(node.x, node.y, label=node.label, node_id=node.id)
        for eid, u, v, weight, dup in sorted(edges):
            g = g.add_edge(u, v, weight=weight, edge_id=eid, duplicated_from=dup)
    except RouteGraphError as exc:
        raise GraphInvalid(str(exc)) from exc
    return g


def serialize_graph(g: Graph) -> dict:
    """Canonical dict form of a graph (stable key and id order)."""
    overlay = None
    if g.overlay is not None:
        overlay = {
            "image_path": g.overlay.image_path,
            "width": g.overlay.width,
            "height": g.overlay.height,
        }
    nodes = []
    for node in g.nodes:
        item: dict[str, Any] = {"id": node.id, "x": node.x, "y": node.y}
        if node.label is not None:
            item["label"] = node.label
        nodes.append(item)
    edges = []
    for edge in g.edges:
        item = {"id": edge.id, "u": edge.u, "v": edge.v, "weight": edge.weight}
        if edge.duplicated_from is not None:
            item["duplicated_from"] = edge.duplicated_from
        edges.append(item)
    return {"overlay": overlay, "nodes": nodes, "edges": edges}


def graph_to_json(g: Graph) -> str:
    return json.dumps(serialize_graph(g), indent=2) + "\n"


def load_graph(path: str | Path) -> Graph:
    """Load a graph file; FileNotFoundError and GraphInvalid stay distinct."""
    text = Path(path).read_text(encoding="utf-8")
    return parse_graph(text)


def save_graph(g: Graph, path: str | Path) -> None:
    """Write atomically: a temp file in the same directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(graph_to_json(g))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
