"""Metric TSP: Christofides 1.5-approximation, OPT2/OPT3 local search,
and a small-instance exact oracle.

All tour operations work on a ``MetricInstance``, a complete symmetric
distance matrix satisfying the triangle inequality.  ``metric_closure``
realizes that assumption on arbitrary road graphs by taking shortest-path
distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import Disconnected, TooFewNodes, TooLarge, UnknownNode
from .graph import COST_TOLERANCE, Edge, Graph, Node
from .matching import min_weight_perfect_matching
from .postman import ClosedWalk, hierholzer_euler_circuit
from .shortest_paths import DistanceMatrix, floyd_warshall
from .spanning import prim_mst

MAX_EXACT_NODES = 14
"""Hard cap for the exact subset-DP tour solver."""

METRIC_TOLERANCE = COST_TOLERANCE
"""Allowed triangle-inequality slack when validating a metric instance."""


@dataclass(frozen=True)
class MetricInstance:
    """Complete symmetric distances over ``order`` (triangle inequality holds)."""

    order: tuple[int, ...]
    d: tuple[tuple[float, ...], ...]

    def index(self, node_id: int) -> int:
        try:
            return self._index[node_id]
        except KeyError:
            raise UnknownNode(f"node {node_id} is not in the instance") from None

    @property
    def _index(self) -> dict[int, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {v: i for i, v in enumerate(self.order)}
            self.__dict__["_index_cache"] = cached
        return cached

    @property
    def n(self) -> int:
        return len(self.order)

    def distance(self, u: int, v: int) -> float:
        return self.d[self.index(u)][self.index(v)]

    def validate(self) -> None:
        n = self.n
        for i in range(n):
            if self.d[i][i] != 0.0:
                raise ValueError(f"nonzero self-distance at {self.order[i]}")
            for j in range(i + 1, n):
                if self.d[i][j] != self.d[j][i]:
                    raise ValueError(f"asymmetric distance pair ({i}, {j})")
        for k in range(n):
            for i in range(n):
                dik = self.d[i][k]
                for j in range(n):
                    if self.d[i][j] > dik + self.d[k][j] + METRIC_TOLERANCE:
                        raise ValueError(
                            f"triangle inequality violated on ({i}, {j}) via {k}"
                        )

    def to_distance_matrix(self) -> DistanceMatrix:
        """View as a DistanceMatrix over the complete graph (direct successors)."""
        n = self.n
        next_hop = tuple(
            tuple(None if i == j else j for j in range(n)) for i in range(n)
        )
        return DistanceMatrix(order=self.order, d=self.d, next_hop=next_hop)


@dataclass(frozen=True)
class Tour:
    """A cyclic node sequence visiting each target once; cost closes the loop."""

    nodes: tuple[int, ...]
    cost: float


def _cycle_cost(nodes: Sequence[int], m: MetricInstance) -> float:
    total = 0.0
    for a, b in zip(nodes, nodes[1:]):
        total += m.distance(a, b)
    total += m.distance(nodes[-1], nodes[0])
    return total


def metric_closure(g: Graph, targets: Sequence[int] | None = None) -> MetricInstance:
    """Shortest-path distances between the targets of a road graph."""
    if targets is None:
        ids = list(g.node_ids)
    else:
        ids = sorted(targets)
        if len(set(ids)) != len(ids):
            raise ValueError("target set contains duplicates")
        for v in ids:
            g.node(v)
    matrix = floyd_warshall(g)
    rows = []
    for u in ids:
        row = []
        for v in ids:
            duv = matrix.distance(u, v)
            if duv is None:
                raise Disconnected(f"targets {u} and {v} are not connected")
            row.append(duv)
        rows.append(tuple(row))
    return MetricInstance(order=tuple(ids), d=tuple(rows))


def _complete_metric_graph(m: MetricInstance) -> Graph:
    """The complete weighted graph realizing the instance's distances."""
    nodes = [Node(v, 0.0, 0.0) for v in m.order]
    edges = []
    eid = 0
    for i in range(m.n):
        for j in range(i + 1, m.n):
            edges.append(Edge(eid, m.order[i], m.order[j], m.d[i][j]))
            eid += 1
    return Graph.build(nodes, edges)


def christofides(m: MetricInstance, start: int) -> Tour:
    """1.5-approximate tour: MST + odd-node matching + Euler circuit + shortcut.

    Build a minimum spanning tree of the complete metric graph, perfectly
    match its odd-degree nodes at minimum summed distance, overlay the
    matching edges on the tree (a multigraph with no odd degree), trace an
    Euler circuit from ``start`` and shortcut repeated visits.  The result
    costs at most 1.5 times the optimal tour.
    """
    if m.n < 3:
        raise TooFewNodes(f"a tour needs at least 3 nodes, got {m.n}")
    m.index(start)

    complete = _complete_metric_graph(m)
    tree = prim_mst(complete)
    tree_edges = [complete.edge(eid) for eid in tree.edges]

    degree: dict[int, int] = {v: 0 for v in m.order}
    for e in tree_edges:
        degree[e.u] += 1
        degree[e.v] += 1
    odd = [v for v in m.order if degree[v] % 2 == 1]

    pairing = min_weight_perfect_matching(odd, m.to_distance_matrix())

    h_edges = []
    eid = 0
    for e in tree_edges:
        h_edges.append(Edge(eid, e.u, e.v, e.weight))
        eid += 1
    for a, b in pairing.pairs:
        h_edges.append(Edge(eid, a, b, m.distance(a, b)))
        eid += 1
    multigraph = Graph.build([Node(v, 0.0, 0.0) for v in m.order], h_edges)

    circuit = hierholzer_euler_circuit(multigraph, start)
    tour = shortcut_to_hamiltonian(circuit, m)
    return _rotate_to(tour, start)


def _rotate_to(t: Tour, start: int) -> Tour:
    if t.nodes[0] == start:
        return t
    i = t.nodes.index(start)
    return Tour(t.nodes[i:] + t.nodes[:i], t.cost)


def shortcut_to_hamiltonian(walk: ClosedWalk, m: MetricInstance) -> Tour:
    """Collapse a closed walk to a tour by keeping each node's first visit.

    Under the triangle inequality the shortcut never costs more than the
    walk it came from.
    """
    seen: set[int] = set()
    nodes: list[int] = []
    for v in walk.node_sequence:
        if v not in seen:
            m.index(v)
            seen.add(v)
            nodes.append(v)
    if len(nodes) != m.n:
        missing = [v for v in m.order if v not in seen]
        raise ValueError(f"walk does not cover target nodes {missing}")
    return Tour(tuple(nodes), _cycle_cost(nodes, m))


def two_opt(t: Tour, m: MetricInstance) -> Tour:
    """First-improvement 2-edge exchange until no swap gains more than 1e-9.

    Each move reverses one tour segment; cost never increases.
    """
    nodes = list(t.nodes)
    n = len(nodes)
    d = m.distance
    improved = True
    while improved:
        improved = False
        for i in range(n - 1):
            a, b = nodes[i], nodes[i + 1]
            for j in range(i + 2, n):
                c, e = nodes[j], nodes[(j + 1) % n]
                delta = d(a, c) + d(b, e) - d(a, b) - d(c, e)
                if delta < -COST_TOLERANCE:
                    nodes[i + 1 : j + 1] = reversed(nodes[i + 1 : j + 1])
                    improved = True
                    a, b = nodes[i], nodes[i + 1]
    return Tour(tuple(nodes), _cycle_cost(nodes, m))


def _three_opt_variants(
    nodes: list[int], i: int, j: int, k: int, d
) -> list[tuple[float, int]]:
    """Cost deltas of the seven reconnections for cuts after i, j, k."""
    a, b = nodes[i], nodes[i + 1]
    c, e = nodes[j], nodes[j + 1]
    f, h = nodes[k], nodes[(k + 1) % len(nodes)]
    removed = d(a, b) + d(c, e) + d(f, h)
    added = (
        d(a, c) + d(b, e) + d(f, h),  # 1: reverse first segment
        d(a, b) + d(c, f) + d(e, h),  # 2: reverse second segment
        d(a, c) + d(b, f) + d(e, h),  # 3: reverse both
        d(a, e) + d(f, b) + d(c, h),  # 4: swap segments
        d(a, e) + d(f, c) + d(b, h),  # 5: swap, first reversed
        d(a, f) + d(e, b) + d(c, h),  # 6: swap, second reversed
        d(a, f) + d(e, c) + d(b, h),  # 7: swap, both reversed
    )
    return [(added[v] - removed, v + 1) for v in range(7)]


def _apply_three_opt(nodes: list[int], i: int, j: int, k: int, variant: int) -> list[int]:
    head = nodes[: i + 1]
    s1 = nodes[i + 1 : j + 1]
    s2 = nodes[j + 1 : k + 1]
    tail = nodes[k + 1 :]
    r1 = s1[::-1]
    r2 = s2[::-1]
    body = {
        1: r1 + s2,
        2: s1 + r2,
        3: r1 + r2,
        4: s2 + s1,
        5: s2 + r1,
        6: r2 + s1,
        7: r2 + r1,
    }[variant]
    return head + body + tail


def three_opt(t: Tour, m: MetricInstance) -> Tour:
    """First-improvement 3-edge exchange over all seven reconnections."""
    nodes = list(t.nodes)
    n = len(nodes)
    d = m.distance
    improved = True
    while improved:
        improved = False
        for i in range(n - 2):
            for j in range(i + 1, n - 1):
                for k in range(j + 1, n):
                    for delta, variant in _three_opt_variants(nodes, i, j, k, d):
                        if delta < -COST_TOLERANCE:
                            nodes = _apply_three_opt(nodes, i, j, k, variant)
                            improved = True
                            break
    return Tour(tuple(nodes), _cycle_cost(nodes, m))


def held_karp_exact(m: MetricInstance) -> Tour:
    """Provably optimal tour by dynamic programming over node subsets.

    Feasible up to ``MAX_EXACT_NODES``; used as the optimality oracle for
    the approximation-quality checks.
    """
    n = m.n
    if n < 3:
        raise TooFewNodes(f"a tour needs at least 3 nodes, got {n}")
    if n > MAX_EXACT_NODES:
        raise TooLarge(f"{n} nodes exceeds the exact cap of {MAX_EXACT_NODES}")

    dist = np.asarray(m.d, dtype=np.float64)
    size = 1 << n
    dp = np.full((size, n), np.inf)
    parent = np.full((size, n), -1, dtype=np.int16)
    dp[1, 0] = 0.0  # tours are anchored at the first node in order

    for mask in range(1, size):
        if not mask & 1:
            continue
        row = dp[mask]
        if not np.isfinite(row).any():
            continue
        candidates = row[:, None] + dist
        best_from = np.argmin(candidates, axis=0)
        best_cost = candidates[best_from, np.arange(n)]
        free = ~mask & (size - 1)
        while free:
            j = (free & -free).bit_length() - 1
            free &= free - 1
            nxt = mask | (1 << j)
            if best_cost[j] < dp[nxt, j]:
                dp[nxt, j] = best_cost[j]
                parent[nxt, j] = best_from[j]

    full = size - 1
    totals = dp[full] + dist[:, 0]
    totals[0] = np.inf
    last = int(np.argmin(totals))
    cost = float(totals[last])

    sequence = []
    mask, j = full, last
    while j != 0:
        sequence.append(j)
        mask, j = mask ^ (1 << j), int(parent[mask, j])
    sequence.append(0)
    sequence.reverse()
    return Tour(tuple(m.order[i] for i in sequence), cost)
