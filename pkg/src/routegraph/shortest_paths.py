"""Single-source and all-pairs shortest paths with path reconstruction.

Unreachable distances are represented by ``None``: a distinct sentinel,
never a large finite number.  Ties between equally short paths are broken
toward the smallest predecessor/successor node id so outputs are
deterministic.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import Unreachable, UnknownNode
from .graph import Graph


@dataclass(frozen=True)
class ShortestPathTree:
    """Dijkstra output: distances from ``source`` and predecessor links.

    ``dist`` maps every node id to its distance (``None`` when unreachable);
    ``pred`` maps every reachable node except the source to the previous
    node on a shortest path.
    """

    source: int
    dist: dict[int, float | None]
    pred: dict[int, int]

    def path_to(self, target: int) -> tuple[int, ...]:
        """Node sequence source -> target; raises Unreachable when cut off."""
        if self.dist.get(target, None) is None:
            raise Unreachable(f"node {target} is not reachable from {self.source}")
        path = [target]
        while path[-1] != self.source:
            path.append(self.pred[path[-1]])
        return tuple(reversed(path))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest distances plus a successor matrix.

    Rows/columns follow ``order`` (ascending node ids).  ``next_hop[i][j]``
    is the node after ``order[i]`` on a shortest path to ``order[j]``.
    """

    order: tuple[int, ...]
    d: tuple[tuple[float | None, ...], ...]
    next_hop: tuple[tuple[int | None, ...], ...]

    def index(self, node_id: int) -> int:
        try:
            return self._index[node_id]
        except KeyError:
            raise UnknownNode(f"node {node_id} is not in the matrix") from None

    @property
    def _index(self) -> dict[int, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {v: i for i, v in enumerate(self.order)}
            self.__dict__["_index_cache"] = cached
        return cached

    def distance(self, u: int, v: int) -> float | None:
        return self.d[self.index(u)][self.index(v)]

    def successor(self, u: int, v: int) -> int | None:
        return self.next_hop[self.index(u)][self.index(v)]


@dataclass(frozen=True)
class Route:
    """A walk through adjacent nodes and its total cost."""

    nodes: tuple[int, ...]
    cost: float


def dijkstra(g: Graph, source: int) -> ShortestPathTree:
    """Grow shortest paths from ``source`` by settling the closest node first.

    Nodes are settled in nondecreasing distance order, ties on node id.
    Among equal-cost predecessors the smallest node id wins.
    """
    g.node(source)
    dist = {v: math.inf for v in g.node_ids}
    pred: dict[int, int] = {}
    dist[source] = 0.0
    settled: set[int] = set()
    frontier: list[tuple[float, int]] = [(0.0, source)]
    while frontier:
        d, u = heapq.heappop(frontier)
        if u in settled:
            continue
        settled.add(u)
        for e in g.incident_edges(u):
            v = e.other(u)
            nd = d + e.weight
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(frontier, (nd, v))
            elif nd == dist[v] and v not in settled and u < pred.get(v, u + 1):
                pred[v] = u
    return ShortestPathTree(
        source=source,
        dist={v: (None if math.isinf(d) else d) for v, d in dist.items()},
        pred=pred,
    )


def floyd_warshall(g: Graph) -> DistanceMatrix:
    """All-pairs shortest distances via n refinement sweeps.

    Sweep k improves any pair whose shortest path can route through node k.
    Parallel edges collapse to the cheapest at initialization.  On an exact
    tie the smaller successor id is preferred, but only when that successor
    makes strict progress toward the target (guards against zero-weight
    cycles in the reconstruction chain).
    """
    order = g.node_ids
    n = len(order)
    index = {v: i for i, v in enumerate(order)}
    d = [[math.inf] * n for _ in range(n)]
    nxt: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0.0
    for e in g.edges:
        i, j = index[e.u], index[e.v]
        if e.weight < d[i][j]:
            d[i][j] = d[j][i] = e.weight
            nxt[i][j] = j
            nxt[j][i] = i

    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if math.isinf(dik):
                continue
            di = d[i]
            nxt_i = nxt[i]
            nik = nxt_i[k]
            for j in range(n):
                nd = dik + dk[j]
                if nd < di[j]:
                    di[j] = nd
                    nxt_i[j] = nik
                elif (
                    nd == di[j]
                    and i != j
                    and nik is not None
                    and nxt_i[j] is not None
                    and nik < nxt_i[j]
                    and d[nik][j] < di[j]
                ):
                    nxt_i[j] = nik

    return DistanceMatrix(
        order=order,
        d=tuple(tuple(None if math.isinf(x) else x for x in row) for row in d),
        next_hop=tuple(tuple(row) for row in nxt),
    )


def reconstruct_path(m: DistanceMatrix, u: int, v: int) -> Route:
    """Walk the successor matrix from ``u`` to ``v``; cost is ``d[u][v]``."""
    i, j = m.index(u), m.index(v)
    if u == v:
        return Route((u,), 0.0)
    cost = m.d[i][j]
    if cost is None:
        raise Unreachable(f"no path from {u} to {v}")
    nodes = [u]
    limit = len(m.order) ** 2 + 2  # defensive: successor chains must stay finite
    while i != j:
        step = m.next_hop[i][j]
        if step is None or len(nodes) > limit:
            raise RuntimeError(f"successor matrix is inconsistent for pair ({u}, {v})")
        nodes.append(step)
        i = m.index(step)
    return Route(tuple(nodes), cost)


def route_via_waypoints(
    g: Graph, start: int, waypoints: Sequence[int], end: int
) -> Route:
    """Chain shortest paths start -> w1 -> ... -> end, in the given priority order.

    Legs are independent: nodes and edges may repeat across legs, and a
    waypoint may appear more than once.
    """
    stops = [start, *waypoints, end]
    for v in stops:
        g.node(v)
    m = floyd_warshall(g)
    nodes: list[int] = [start]
    cost = 0.0
    for a, b in zip(stops, stops[1:]):
        leg = reconstruct_path(m, a, b)
        nodes.extend(leg.nodes[1:])
        cost += leg.cost
    return Route(tuple(nodes), cost)


def resolve_route_edges(g: Graph, nodes: Sequence[int]) -> tuple[int, ...]:
    """Edge ids along a node walk, taking the cheapest parallel edge per step."""
    edge_ids = []
    for a, b in zip(nodes, nodes[1:]):
        best = None
        for e in g.incident_edges(a):
            if e.other(a) == b and (best is None or (e.weight, e.id) < (best.weight, best.id)):
                best = e
        if best is None:
            raise ValueError(f"walk steps over a missing edge {a}-{b}")
        edge_ids.append(best.id)
    return tuple(edge_ids)
