"""Chinese Postman solver: odd-node detection, augmentation, Euler circuits.

The pipeline: collect the odd-degree nodes, pair them at minimum summed
shortest-path distance, duplicate the edges of each pair's shortest path so
every degree becomes even, then trace an Euler circuit.  The production
circuit tracer is Fleury's bridge-avoiding walk; a Hierholzer tracer is
also provided (Christofides reuses it, and tests cross-check the two).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import Disconnected, OddDegreePresent, UnknownNode
from .graph import Edge, Graph
from .matching import Pairing, min_weight_perfect_matching
from .shortest_paths import floyd_warshall, reconstruct_path


@dataclass(frozen=True)
class OddNodeSet:
    """All odd-degree node ids, ascending; the handshake lemma keeps it even."""

    nodes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class EulerianAugmentation:
    """A graph made all-even by duplicating shortest-path edges.

    ``added_edges`` all carry ``duplicated_from``; their weight sum equals
    ``pairing.total_cost``.
    """

    base: Graph
    added_edges: tuple[Edge, ...]
    pairing: Pairing

    def augmented_graph(self) -> Graph:
        g = self.base
        for e in self.added_edges:
            g = g.add_edge(e.u, e.v, weight=e.weight, edge_id=e.id,
                           duplicated_from=e.duplicated_from)
        return g

    @property
    def added_cost(self) -> float:
        return sum(e.weight for e in self.added_edges)


@dataclass(frozen=True)
class ClosedWalk:
    """A closed edge walk: starts and ends at ``start``, cost = weight sum."""

    start: int
    node_sequence: tuple[int, ...]
    edge_sequence: tuple[int, ...]
    total_cost: float


def odd_nodes(g: Graph) -> OddNodeSet:
    """The set M of odd-degree nodes, sorted by id."""
    return OddNodeSet(tuple(v for v in g.node_ids if g.degree(v) % 2 == 1))


def augment_to_even(g: Graph) -> EulerianAugmentation:
    """Duplicate shortest-path edges between optimally paired odd nodes.

    Steps: odd nodes -> all-pairs distances -> minimum-weight perfect
    matching -> duplicate every edge on one reconstructed shortest path per
    matched pair.  The resulting multigraph has no odd-degree node and the
    added weight equals the pairing cost.
    """
    if not g.is_connected():
        raise Disconnected("cannot augment a disconnected graph")
    odd = odd_nodes(g)
    if not odd.nodes:
        return EulerianAugmentation(base=g, added_edges=(), pairing=Pairing((), 0.0))

    matrix = floyd_warshall(g)
    pairing = min_weight_perfect_matching(odd.nodes, matrix)

    added: list[Edge] = []
    next_id = g.next_edge_id
    for a, b in pairing.pairs:
        leg = reconstruct_path(matrix, a, b)
        for u, v in zip(leg.nodes, leg.nodes[1:]):
            original = _cheapest_edge_between(g, u, v)
            added.append(Edge(next_id, original.u, original.v, original.weight,
                              duplicated_from=original.id))
            next_id += 1
    return EulerianAugmentation(base=g, added_edges=tuple(added), pairing=pairing)


def _cheapest_edge_between(g: Graph, u: int, v: int) -> Edge:
    best = None
    for e in g.incident_edges(u):
        if e.other(u) == v and (best is None or (e.weight, e.id) < (best.weight, best.id)):
            best = e
    if best is None:
        raise RuntimeError(f"shortest path steps over a missing edge {u}-{v}")
    return best


def _coerce_graph(g: Graph | EulerianAugmentation) -> Graph:
    return g.augmented_graph() if isinstance(g, EulerianAugmentation) else g


def _check_eulerian(g: Graph, start: int) -> None:
    g.node(start)
    odd = [v for v in g.node_ids if g.degree(v) % 2 == 1]
    if odd:
        raise OddDegreePresent(f"odd-degree nodes present: {odd}")
    if not g.is_connected():
        raise Disconnected("edges span more than one component")
    if g.edge_count > 0 and g.degree(start) == 0:
        raise Disconnected(f"start node {start} is isolated")


class _Residual:
    """Mutable view of the not-yet-traversed edges during an Euler walk."""

    def __init__(self, g: Graph):
        self.adj: dict[int, dict[int, int]] = {v: {} for v in g.node_ids}
        for e in g.edges:
            self.adj[e.u][e.id] = e.v
            self.adj[e.v][e.id] = e.u

    def candidates(self, u: int) -> list[tuple[int, int]]:
        """Remaining incident edges as (neighbor id, edge id), ascending."""
        return sorted((v, eid) for eid, v in self.adj[u].items())

    def remove(self, eid: int, u: int, v: int) -> None:
        del self.adj[u][eid]
        del self.adj[v][eid]

    def restore(self, eid: int, u: int, v: int) -> None:
        self.adj[u][eid] = v
        self.adj[v][eid] = u

    def is_bridge(self, eid: int, u: int, v: int) -> bool:
        """Delete the edge, re-test connectivity, restore.

        Connectivity is judged over the nodes that held at least one
        remaining edge before the deletion, so an edge whose removal strands
        its endpoint counts as a bridge.
        """
        active = [w for w, inc in self.adj.items() if inc]
        self.remove(eid, u, v)
        try:
            seen = {active[0]}
            queue = deque(seen)
            while queue:
                w = queue.popleft()
                for other in self.adj[w].values():
                    if other not in seen:
                        seen.add(other)
                        queue.append(other)
            return any(w not in seen for w in active)
        finally:
            self.restore(eid, u, v)


def fleury_euler_circuit(g: Graph | EulerianAugmentation, start: int) -> ClosedWalk:
    """Trace an Euler circuit by never burning a bridge while an alternative exists.

    At each node the incident remaining edges are tried in (neighbor id,
    edge id) order; an edge that bridges the residual graph is taken only
    when every remaining incident edge is one.  The walk stops when the
    current node has no remaining incident edge, which (on an all-even
    connected graph) happens exactly back at ``start`` with every edge used.
    """
    graph = _coerce_graph(g)
    _check_eulerian(graph, start)
    residual = _Residual(graph)

    node_sequence = [start]
    edge_sequence: list[int] = []
    cost = 0.0
    current = start
    while residual.adj[current]:
        options = residual.candidates(current)
        chosen = None
        for v, eid in options:
            if not residual.is_bridge(eid, current, v):
                chosen = (v, eid)
                break
        if chosen is None:
            chosen = options[0]
        v, eid = chosen
        residual.remove(eid, current, v)
        node_sequence.append(v)
        edge_sequence.append(eid)
        cost += graph.edge(eid).weight
        current = v

    if len(edge_sequence) != graph.edge_count:
        raise RuntimeError("walk stalled before covering every edge")
    return ClosedWalk(start, tuple(node_sequence), tuple(edge_sequence), cost)


def hierholzer_euler_circuit(g: Graph | EulerianAugmentation, start: int) -> ClosedWalk:
    """Stack-based Euler circuit; same contract as Fleury, different edge order."""
    graph = _coerce_graph(g)
    _check_eulerian(graph, start)
    adj: dict[int, list[tuple[int, int]]] = {
        v: [(e.other(v), e.id) for e in sorted(graph.incident_edges(v),
                                               key=lambda e: (e.other(v), e.id))]
        for v in graph.node_ids
    }
    cursor = {v: 0 for v in graph.node_ids}
    used: set[int] = set()

    stack: list[tuple[int, int | None]] = [(start, None)]
    trail: list[tuple[int, int | None]] = []
    while stack:
        u, _ = stack[-1]
        edges_u = adj[u]
        i = cursor[u]
        while i < len(edges_u) and edges_u[i][1] in used:
            i += 1
        cursor[u] = i
        if i == len(edges_u):
            trail.append(stack.pop())
        else:
            v, eid = edges_u[i]
            used.add(eid)
            stack.append((v, eid))

    trail.reverse()
    node_sequence = tuple(v for v, _ in trail)
    edge_sequence = tuple(eid for _, eid in trail if eid is not None)
    if len(edge_sequence) != graph.edge_count:
        raise RuntimeError("walk stalled before covering every edge")
    cost = sum(graph.edge(eid).weight for eid in edge_sequence)
    return ClosedWalk(start, node_sequence, edge_sequence, cost)


def chinese_postman(g: Graph, depot: int) -> ClosedWalk:
    """Cheapest closed walk from ``depot`` covering every edge at least once.

    The walk's edge sequence reports original edge ids: an edge traversed
    via an augmentation duplicate reports the street it duplicates.  Total
    cost is the full edge-weight sum plus the pairing cost.
    """
    g.node(depot)
    augmentation = augment_to_even(g)
    walk = fleury_euler_circuit(augmentation.augmented_graph(), depot)
    duplicate_of = {e.id: e.duplicated_from for e in augmentation.added_edges}
    original_ids = tuple(duplicate_of.get(eid, eid) for eid in walk.edge_sequence)
    return ClosedWalk(depot, walk.node_sequence, original_ids, walk.total_cost)
