"""Minimum spanning tree via Prim's greedy node-growing algorithm."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import Disconnected, EmptyGraph
from .graph import Graph


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree: member edge ids (sorted) and their weight sum."""

    root: int
    edges: tuple[int, ...]
    total_weight: float


def prim_mst(g: Graph, root: int | None = None) -> SpanningTree:
    """Grow a minimum spanning tree from ``root``.

    Starting from an arbitrary node, repeatedly attach the node closest to
    the visited set.  Ties are broken by the smallest (weight, node id,
    edge id) triple, so the chosen edge set is deterministic; the total
    weight is root-invariant.
    """
    if g.n == 0:
        raise EmptyGraph("cannot span an empty graph")
    if root is None:
        root = g.node_ids[0]
    else:
        g.node(root)

    visited = {root}
    tree_edges: list[int] = []
    total = 0.0
    frontier: list[tuple[float, int, int]] = []

    def push_edges(u: int) -> None:
        for e in g.incident_edges(u):
            v = e.other(u)
            if v not in visited:
                heapq.heappush(frontier, (e.weight, v, e.id))

    push_edges(root)
    while frontier and len(visited) < g.n:
        weight, v, eid = heapq.heappop(frontier)
        if v in visited:
            continue
        visited.add(v)
        tree_edges.append(eid)
        total += weight
        push_edges(v)

    if len(visited) < g.n:
        raise Disconnected(f"{g.n - len(visited)} node(s) unreachable from {root}")
    return SpanningTree(root=root, edges=tuple(sorted(tree_edges)), total_weight=total)
