"""Weighted undirected multigraph drawn over a raster map image.

Edges are first-class records with their own ids, so parallel edges between
the same node pair are representable (postman augmentation and the
Königsberg bridges both need them).  Self-loops are rejected.  Node
coordinates are image pixels: origin at the top-left of the overlay, y
grows downward.

Every mutation returns a new ``Graph`` value and leaves the receiver
untouched, so snapshots can be shared freely across threads.  Ids are
handed out by per-graph counters and are never reused after a deletion.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable

from .errors import (
    InvalidCoordinate,
    NegativeWeight,
    SelfLoopRejected,
    UnknownEdge,
    UnknownNode,
)

COST_TOLERANCE = 1e-9
"""Absolute tolerance for all floating-point cost comparisons."""


@dataclass(frozen=True)
class Overlay:
    """Raster image that node coordinates are expressed in (pixels)."""

    image_path: str
    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("overlay dimensions must be positive")


@dataclass(frozen=True)
class Node:
    """A graph vertex at an image-pixel position."""

    id: int
    x: float
    y: float
    label: str | None = None


@dataclass(frozen=True)
class Edge:
    """An undirected weighted edge; ``duplicated_from`` marks postman copies."""

    id: int
    u: int
    v: int
    weight: float
    duplicated_from: int | None = None

    def other(self, node_id: int) -> int:
        """The endpoint opposite ``node_id``."""
        return self.v if node_id == self.u else self.u


def euclidean_weight(a: Node, b: Node) -> float:
    """Straight-line distance between two nodes in image pixels."""
    return math.hypot(a.x - b.x, a.y - b.y)


def _check_weight(weight: float) -> float:
    weight = float(weight)
    if not math.isfinite(weight) or weight < 0.0:
        raise NegativeWeight(f"edge weight must be finite and >= 0, got {weight!r}")
    return weight


def _check_coords(x: float, y: float, overlay: Overlay | None) -> tuple[float, float]:
    x, y = float(x), float(y)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidCoordinate(f"coordinates must be finite, got ({x!r}, {y!r})")
    if overlay is not None:
        if not (0.0 <= x <= overlay.width and 0.0 <= y <= overlay.height):
            raise InvalidCoordinate(
                f"({x}, {y}) lies outside the {overlay.width}x{overlay.height} overlay"
            )
    return x, y


class Graph:
    """Immutable-by-convention multigraph; all mutators return a new Graph."""

    __slots__ = ("_nodes", "_edges", "_adj", "_overlay", "_next_node_id", "_next_edge_id")

    def __init__(self, overlay: Overlay | None = None):
        self._nodes: dict[int, Node] = {}
        self._edges: dict[int, Edge] = {}
        self._adj: dict[int, list[int]] = {}
        self._overlay = overlay
        self._next_node_id = 0
        self._next_edge_id = 0

    @classmethod
    def build(
        cls,
        nodes: Iterable[Node] = (),
        edges: Iterable[Edge] = (),
        overlay: Overlay | None = None,
    ) -> "Graph":
        """Construct a validated graph from node and edge records in one pass."""
        g = cls(overlay)
        for node in nodes:
            g = g.add_node(node.x, node.y, label=node.label, node_id=node.id)
        for edge in edges:
            g = g.add_edge(
                edge.u, edge.v,
                weight=edge.weight,
                edge_id=edge.id,
                duplicated_from=edge.duplicated_from,
            )
        return g

    # -- queries ------------------------------------------------------------

    @property
    def overlay(self) -> Overlay | None:
        return self._overlay

    @property
    def n(self) -> int:
        """Node count."""
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def nodes(self) -> tuple[Node, ...]:
        return tuple(self._nodes[i] for i in sorted(self._nodes))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self._edges[i] for i in sorted(self._edges))

    @property
    def node_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._nodes))

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._edges))

    @property
    def next_node_id(self) -> int:
        """Id that the next ``add_node`` will assign."""
        return self._next_node_id

    @property
    def next_edge_id(self) -> int:
        return self._next_edge_id

    def has_node(self, node_id: int) -> bool:
        return node_id in self._nodes

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edges

    def node(self, node_id: int) -> Node:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownNode(f"no node with id {node_id}") from None

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._edges[edge_id]
        except KeyError:
            raise UnknownEdge(f"no edge with id {edge_id}") from None

    def incident_edges(self, node_id: int) -> tuple[Edge, ...]:
        """Edges touching ``node_id``, in edge-id order."""
        self.node(node_id)
        return tuple(self._edges[e] for e in sorted(self._adj[node_id]))

    def degree(self, node_id: int) -> int:
        """Number of edge endpoints at ``node_id`` (each parallel edge counts once)."""
        self.node(node_id)
        return len(self._adj[node_id])

    def total_edge_weight(self) -> float:
        return sum(e.weight for e in self._edges.values())

    def is_connected(self) -> bool:
        """True iff all nodes of degree >= 1 are mutually reachable.

        Isolated nodes are ignored: they cannot affect edge traversal.  A
        graph with at most one non-isolated node is connected.
        """
        active = [v for v, inc in self._adj.items() if inc]
        if len(active) <= 1:
            return True
        return len(self._reachable(active[0])) == len(active)

    def is_bridge(self, edge_id: int) -> bool:
        """True iff deleting the edge disconnects its component.

        Deletes the edge, re-tests connectivity over the nodes that were
        non-isolated before the deletion, and restores it.
        """
        e = self.edge(edge_id)
        active = {v for v, inc in self._adj.items() if inc}
        before = self._component_count(active, skip_edge=None)
        after = self._component_count(active, skip_edge=edge_id)
        del e
        return after > before

    def _reachable(self, start: int, skip_edge: int | None = None) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for eid in self._adj[u]:
                if eid == skip_edge:
                    continue
                w = self._edges[eid].other(u)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def _component_count(self, nodes: set[int], skip_edge: int | None) -> int:
        remaining = set(nodes)
        count = 0
        while remaining:
            start = remaining.pop()
            remaining -= self._reachable(start, skip_edge)
            count += 1
        return count

    # -- mutations (each returns a new Graph) --------------------------------

    def _clone(self) -> "Graph":
        g = object.__new__(Graph)
        g._nodes = dict(self._nodes)
        g._edges = dict(self._edges)
        g._adj = {v: list(eids) for v, eids in self._adj.items()}
        g._overlay = self._overlay
        g._next_node_id = self._next_node_id
        g._next_edge_id = self._next_edge_id
        return g

    def add_node(
        self, x: float, y: float, label: str | None = None, node_id: int | None = None
    ) -> "Graph":
        x, y = _check_coords(x, y, self._overlay)
        if node_id is None:
            node_id = self._next_node_id
        elif not isinstance(node_id, int) or node_id < 0:
            raise ValueError(f"node id must be a non-negative integer, got {node_id!r}")
        elif node_id in self._nodes:
            raise ValueError(f"node id {node_id} already in use")
        g = self._clone()
        g._nodes[node_id] = Node(node_id, x, y, label)
        g._adj[node_id] = []
        g._next_node_id = max(g._next_node_id, node_id + 1)
        return g

    def move_node(self, node_id: int, x: float, y: float) -> "Graph":
        """Reposition a node; incident edge weights are left untouched."""
        old = self.node(node_id)
        x, y = _check_coords(x, y, self._overlay)
        g = self._clone()
        g._nodes[node_id] = replace(old, x=x, y=y)
        return g

    def relabel_node(self, node_id: int, label: str | None) -> "Graph":
        old = self.node(node_id)
        g = self._clone()
        g._nodes[node_id] = replace(old, label=label)
        return g

    def add_edge(
        self,
        u: int,
        v: int,
        weight: float | None = None,
        edge_id: int | None = None,
        duplicated_from: int | None = None,
    ) -> "Graph":
        """Connect ``u`` and ``v``; an absent weight defaults to their distance."""
        a, b = self.node(u), self.node(v)
        if u == v:
            raise SelfLoopRejected(f"self-loop at node {u} rejected")
        if weight is None:
            weight = euclidean_weight(a, b)
        weight = _check_weight(weight)
        if edge_id is None:
            edge_id = self._next_edge_id
        elif not isinstance(edge_id, int) or edge_id < 0:
            raise ValueError(f"edge id must be a non-negative integer, got {edge_id!r}")
        elif edge_id in self._edges:
            raise ValueError(f"edge id {edge_id} already in use")
        g = self._clone()
        g._edges[edge_id] = Edge(edge_id, u, v, weight, duplicated_from)
        g._adj[u].append(edge_id)
        g._adj[v].append(edge_id)
        g._next_edge_id = max(g._next_edge_id, edge_id + 1)
        return g

    def remove_edge(self, edge_id: int) -> "Graph":
        e = self.edge(edge_id)
        g = self._clone()
        del g._edges[edge_id]
        g._adj[e.u].remove(edge_id)
        g._adj[e.v].remove(edge_id)
        return g

    def remove_node(self, node_id: int) -> "Graph":
        """Delete a node together with every incident edge."""
        self.node(node_id)
        g = self._clone()
        for eid in g._adj.pop(node_id):
            e = g._edges.pop(eid, None)
            if e is None:
                continue  # parallel self-adjacent bookkeeping already handled
            other = e.other(node_id)
            g._adj[other].remove(eid)
        del g._nodes[node_id]
        return g

    def with_overlay(self, overlay: Overlay | None) -> "Graph":
        if overlay is not None:
            for node in self._nodes.values():
                _check_coords(node.x, node.y, overlay)
        g = self._clone()
        g._overlay = overlay
        return g

    # -- integrity ------------------------------------------------------------

    def validate(self) -> None:
        """Re-check every structural invariant; raises on violation."""
        for node in self._nodes.values():
            if not isinstance(node.id, int) or node.id < 0:
                raise ValueError(f"bad node id {node.id!r}")
            _check_coords(node.x, node.y, self._overlay)
        endpoint_total = 0
        for e in self._edges.values():
            if e.u not in self._nodes or e.v not in self._nodes:
                raise UnknownNode(f"edge {e.id} references a missing node")
            if e.u == e.v:
                raise SelfLoopRejected(f"edge {e.id} is a self-loop")
            _check_weight(e.weight)
            if e.id not in self._adj[e.u] or e.id not in self._adj[e.v]:
                raise ValueError(f"adjacency out of sync for edge {e.id}")
            endpoint_total += 2
        if endpoint_total != sum(len(v) for v in self._adj.values()):
            raise ValueError("adjacency lists disagree with edge records")
        if self._nodes and self._next_node_id <= max(self._nodes):
            raise ValueError("node id counter lags behind existing ids")
        if self._edges and self._next_edge_id <= max(self._edges):
            raise ValueError("edge id counter lags behind existing ids")

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Observable-state equality (id counters excluded)."""
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._nodes == other._nodes
            and self._edges == other._edges
            and self._overlay == other._overlay
        )

    __hash__ = None  # mutated copies share records; identity hashing would mislead

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count}, overlay={self._overlay!r})"
