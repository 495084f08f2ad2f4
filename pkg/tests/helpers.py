"""Independent oracles and random-instance generators for the test suite.

Every oracle here recomputes a result by brute force or by a different
textbook method than the production code, so agreement is meaningful.
"""

from __future__ import annotations

import math
import random
from collections import deque
from itertools import permutations

from routegraph import DistanceMatrix, Graph, MetricInstance

TOL = 1e-9


# -- graph generators ---------------------------------------------------------


def random_connected_graph(
    rng: random.Random,
    n: int,
    extra_edges: int = 0,
    parallel_edges: int = 0,
    weight_range: tuple[float, float] = (0.1, 10.0),
) -> Graph:
    """Random spanning tree plus extra (possibly parallel) weighted edges."""
    lo, hi = weight_range
    g = Graph()
    for _ in range(n):
        g = g.add_node(rng.uniform(0, 500), rng.uniform(0, 500))
    for v in range(1, n):
        g = g.add_edge(rng.randrange(v), v, weight=rng.uniform(lo, hi))
    for _ in range(extra_edges):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            g = g.add_edge(u, v, weight=rng.uniform(lo, hi))
    for _ in range(parallel_edges):
        if g.edge_count == 0:
            break
        e = g.edges[rng.randrange(g.edge_count)]
        g = g.add_edge(e.u, e.v, weight=rng.uniform(lo, hi))
    return g


def random_even_multigraph(rng: random.Random, n: int, extra_edges: int = 3) -> Graph:
    """Connected random multigraph whose degrees are all even."""
    g = random_connected_graph(rng, n, extra_edges=extra_edges,
                               parallel_edges=rng.randrange(3))
    odd = [v for v in g.node_ids if g.degree(v) % 2 == 1]
    for a, b in zip(odd[::2], odd[1::2]):
        g = g.add_edge(a, b, weight=rng.uniform(0.1, 10.0))
    return g


def random_distance_matrix(rng: random.Random, ids: list[int]) -> DistanceMatrix:
    """Symmetric positive distances; no triangle inequality implied."""
    n = len(ids)
    d = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d[i][j] = d[j][i] = rng.uniform(0.5, 20.0)
    nxt = [[None if i == j else j for j in range(n)] for i in range(n)]
    return DistanceMatrix(order=tuple(ids), d=tuple(map(tuple, d)),
                          next_hop=tuple(map(tuple, nxt)))


def random_euclidean_instance(rng: random.Random, n: int) -> MetricInstance:
    """Metric instance from random points in the plane."""
    points = [(rng.uniform(0, 100), rng.uniform(0, 100)) for _ in range(n)]
    d = [
        tuple(math.hypot(px - qx, py - qy) for qx, qy in points)
        for px, py in points
    ]
    return MetricInstance(order=tuple(range(n)), d=tuple(d))


# -- shortest-path oracles ----------------------------------------------------


def bellman_ford_distances(g: Graph, source: int) -> dict[int, float | None]:
    """Edge-list relaxation until a fixpoint; independent of Dijkstra."""
    dist = {v: math.inf for v in g.node_ids}
    dist[source] = 0.0
    for _ in range(g.n):
        changed = False
        for e in g.edges:
            for a, b in ((e.u, e.v), (e.v, e.u)):
                nd = dist[a] + e.weight
                if nd < dist[b]:
                    dist[b] = nd
                    changed = True
        if not changed:
            break
    return {v: (None if math.isinf(d) else d) for v, d in dist.items()}


def bfs_hop_distances(g: Graph, source: int) -> dict[int, int]:
    """Edge counts on unit-weight graphs."""
    hops = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for e in g.incident_edges(u):
            v = e.other(u)
            if v not in hops:
                hops[v] = hops[u] + 1
                queue.append(v)
    return hops


def walk_cost_by_cheapest_edges(g: Graph, nodes: tuple[int, ...]) -> float:
    total = 0.0
    for a, b in zip(nodes, nodes[1:]):
        best = min(
            (e.weight for e in g.incident_edges(a) if e.other(a) == b),
            default=None,
        )
        assert best is not None, f"walk steps over a missing edge {a}-{b}"
        total += best
    return total


# -- spanning oracle ----------------------------------------------------------


def kruskal_total_weight(g: Graph) -> float:
    """Union-find Kruskal, sorted edge list; compares totals with Prim."""
    parent = {v: v for v in g.node_ids}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    total = 0.0
    picked = 0
    for e in sorted(g.edges, key=lambda e: (e.weight, e.id)):
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
            total += e.weight
            picked += 1
    assert picked == g.n - 1, "oracle called on a disconnected graph"
    return total


# -- matching / postman oracles -------------------------------------------------


def enumerate_pairings(ids: list[int]):
    """Yield every perfect pairing of ids as a list of (a, b) tuples."""
    if not ids:
        yield []
        return
    first, rest = ids[0], ids[1:]
    for i, partner in enumerate(rest):
        for tail in enumerate_pairings(rest[:i] + rest[i + 1 :]):
            yield [(first, partner)] + tail


def brute_force_matching_cost(ids: list[int], dist: DistanceMatrix) -> float:
    best = math.inf
    for pairing in enumerate_pairings(sorted(ids)):
        cost = sum(dist.distance(a, b) for a, b in pairing)
        best = min(best, cost)
    return best


def brute_force_cpp_cost(g: Graph) -> float:
    """Edge-weight sum plus the best odd-node pairing by shortest paths."""
    from routegraph import floyd_warshall, odd_nodes

    odd = list(odd_nodes(g).nodes)
    base = g.total_edge_weight()
    if not odd:
        return base
    matrix = floyd_warshall(g)
    best = math.inf
    for pairing in enumerate_pairings(odd):
        extra = sum(matrix.distance(a, b) for a, b in pairing)
        best = min(best, extra)
    return base + best


def assert_valid_euler_circuit(g: Graph, walk) -> None:
    """Every edge exactly once, consecutive endpoints adjacent, closed."""
    assert walk.node_sequence[0] == walk.start
    assert walk.node_sequence[-1] == walk.start
    assert sorted(walk.edge_sequence) == list(g.edge_ids)
    for (a, b), eid in zip(
        zip(walk.node_sequence, walk.node_sequence[1:]), walk.edge_sequence
    ):
        e = g.edge(eid)
        assert {a, b} == {e.u, e.v}, f"edge {eid} does not join {a} and {b}"
    assert abs(walk.total_cost - g.total_edge_weight()) < TOL


# -- tour oracles ---------------------------------------------------------------


def exhaustive_tour_cost(m: MetricInstance) -> float:
    """Minimum over all (n-1)!/2 distinct tours."""
    ids = list(m.order)
    best = math.inf
    for perm in permutations(ids[1:]):
        tour = [ids[0], *perm]
        cost = sum(m.distance(a, b) for a, b in zip(tour, tour[1:]))
        cost += m.distance(tour[-1], tour[0])
        best = min(best, cost)
    return best


def tour_cost(m: MetricInstance, nodes: tuple[int, ...]) -> float:
    total = sum(m.distance(a, b) for a, b in zip(nodes, nodes[1:]))
    return total + m.distance(nodes[-1], nodes[0])
