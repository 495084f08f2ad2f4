import math
import random

import pytest

from routegraph import (
    Graph,
    Unreachable,
    dijkstra,
    floyd_warshall,
    reconstruct_path,
    route_via_waypoints,
)
from helpers import (
    TOL,
    bellman_ford_distances,
    bfs_hop_distances,
    random_connected_graph,
    walk_cost_by_cheapest_edges,
)


class TestDijkstra:
    def test_triangle(self, triangle):
        tree = dijkstra(triangle, 0)
        assert tree.dist == {0: 0.0, 1: 1.0, 2: 3.0}
        assert tree.pred[2] == 1

    def test_single_node(self):
        tree = dijkstra(Graph().add_node(0, 0), 0)
        assert tree.dist == {0: 0.0}
        assert tree.pred == {}

    def test_unit_path(self, path3):
        assert dijkstra(path3, 0).dist == {0: 0.0, 1: 1.0, 2: 2.0}

    def test_unreachable_marked_none(self, triangle):
        g = triangle.add_node(999, 999)
        tree = dijkstra(g, 0)
        assert tree.dist[3] is None
        with pytest.raises(Unreachable):
            tree.path_to(3)

    def test_path_reconstruction(self, triangle):
        assert dijkstra(triangle, 0).path_to(2) == (0, 1, 2)


class TestFloydWarshall:
    def test_diagonal_is_zero(self, koenigsberg):
        m = floyd_warshall(koenigsberg)
        assert all(m.distance(v, v) == 0.0 for v in koenigsberg.node_ids)

    def test_agrees_with_dijkstra_example(self, triangle):
        assert floyd_warshall(triangle).distance(0, 2) == 3.0

    def test_koenigsberg_matches_bfs(self, koenigsberg):
        m = floyd_warshall(koenigsberg)
        for source in koenigsberg.node_ids:
            hops = bfs_hop_distances(koenigsberg, source)
            for target, h in hops.items():
                assert m.distance(source, target) == float(h)
        assert m.distance(0, 1) == 2.0

    def test_symmetric(self, koenigsberg):
        m = floyd_warshall(koenigsberg)
        for u in koenigsberg.node_ids:
            for v in koenigsberg.node_ids:
                assert m.distance(u, v) == m.distance(v, u)

    def test_parallel_edges_collapse_to_cheapest(self, triangle):
        g = triangle.add_edge(0, 2, weight=0.5)
        assert floyd_warshall(g).distance(0, 2) == 0.5


class TestReconstructPath:
    def test_triangle_detour(self, triangle):
        route = reconstruct_path(floyd_warshall(triangle), 0, 2)
        assert route.nodes == (0, 1, 2)
        assert route.cost == 3.0

    def test_self_route(self, triangle):
        route = reconstruct_path(floyd_warshall(triangle), 0, 0)
        assert route.nodes == (0,)
        assert route.cost == 0.0

    def test_cross_component_unreachable(self):
        g = Graph().add_node(0, 0).add_node(1, 1)
        with pytest.raises(Unreachable):
            reconstruct_path(floyd_warshall(g), 0, 1)

    def test_cost_equals_edge_resum(self):
        rng = random.Random(7)
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 15),
                                       extra_edges=rng.randrange(10),
                                       parallel_edges=rng.randrange(4))
            m = floyd_warshall(g)
            ids = g.node_ids
            u, v = rng.choice(ids), rng.choice(ids)
            route = reconstruct_path(m, u, v)
            assert abs(walk_cost_by_cheapest_edges(g, route.nodes) - route.cost) < TOL


class TestRouteViaWaypoints:
    def test_single_waypoint(self, triangle):
        route = route_via_waypoints(triangle, 0, [1], 2)
        assert route.nodes == (0, 1, 2)
        assert route.cost == 3.0

    def test_empty_round_trip(self, triangle):
        route = route_via_waypoints(triangle, 0, [], 0)
        assert route.nodes == (0,)
        assert route.cost == 0.0

    def test_detour_revisits_nodes(self, triangle):
        route = route_via_waypoints(triangle, 0, [2], 1)
        assert route.nodes == (0, 1, 2, 1)
        assert route.cost == 5.0

    def test_repeated_waypoint_allowed(self, path3):
        route = route_via_waypoints(path3, 0, [2, 0, 2], 0)
        assert route.cost == 8.0

    def test_unreachable_leg(self, triangle):
        g = triangle.add_node(999, 999)
        with pytest.raises(Unreachable):
            route_via_waypoints(g, 0, [3], 1)

    def test_splitting_a_leg_at_an_on_path_node_is_free(self):
        rng = random.Random(21)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(3, 12),
                                       extra_edges=rng.randrange(8))
            m = floyd_warshall(g)
            ids = g.node_ids
            u, v = rng.choice(ids), rng.choice(ids)
            leg = reconstruct_path(m, u, v)
            mid = rng.choice(leg.nodes)
            direct = route_via_waypoints(g, u, [], v)
            split = route_via_waypoints(g, u, [mid], v)
            assert abs(direct.cost - split.cost) < TOL


class TestCrossValidation:
    def test_dijkstra_floyd_bellman_agree(self):
        rng = random.Random(11)
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 20),
                                       extra_edges=rng.randrange(15),
                                       parallel_edges=rng.randrange(5))
            m = floyd_warshall(g)
            for source in g.node_ids:
                tree = dijkstra(g, source)
                oracle = bellman_ford_distances(g, source)
                for v in g.node_ids:
                    assert tree.dist[v] == pytest.approx(oracle[v], abs=TOL)
                    assert tree.dist[v] == pytest.approx(m.distance(source, v), abs=TOL)

    def test_adding_an_edge_never_increases_distances(self):
        rng = random.Random(13)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(3, 12),
                                       extra_edges=rng.randrange(6))
            before = floyd_warshall(g)
            ids = g.node_ids
            u, v = rng.sample(ids, 2)
            after = floyd_warshall(g.add_edge(u, v, weight=rng.uniform(0.1, 10)))
            for a in ids:
                for b in ids:
                    assert after.distance(a, b) <= before.distance(a, b) + TOL

    def test_triangle_inequality_on_completion(self):
        rng = random.Random(17)
        g = random_connected_graph(rng, 15, extra_edges=20)
        m = floyd_warshall(g)
        ids = g.node_ids
        for i in ids:
            for j in ids:
                for k in ids:
                    assert m.distance(i, j) <= m.distance(i, k) + m.distance(k, j) + TOL


class TestZeroWeightRobustness:
    def test_coincident_nodes_and_zero_edges(self):
        rng = random.Random(23)
        for _ in range(60):
            g = Graph()
            n = rng.randint(2, 8)
            for i in range(n):
                g = g.add_node(rng.choice([0, 1, 2]), rng.choice([0, 1]))
            for v in range(1, n):
                g = g.add_edge(rng.randrange(v), v)  # Euclidean default, may be 0
            for _ in range(rng.randrange(6)):
                u, v = rng.sample(range(n), 2)
                g = g.add_edge(u, v, weight=rng.choice([0.0, 0.0, 1.0]))
            m = floyd_warshall(g)
            for u in g.node_ids:
                tree = dijkstra(g, u)
                for v in g.node_ids:
                    route = reconstruct_path(m, u, v)  # must terminate
                    assert abs(walk_cost_by_cheapest_edges(g, route.nodes) - route.cost) < TOL
                    assert tree.dist[v] == pytest.approx(m.distance(u, v), abs=TOL)


class TestDeterminism:
    def test_smallest_predecessor_wins_ties(self):
        # two equal-cost paths to node 3: via 1 and via 2
        g = Graph()
        for i in range(4):
            g = g.add_node(i, 0)
        g = (
            g.add_edge(0, 1, weight=1.0)
            .add_edge(0, 2, weight=1.0)
            .add_edge(1, 3, weight=1.0)
            .add_edge(2, 3, weight=1.0)
        )
        assert dijkstra(g, 0).pred[3] == 1
        assert floyd_warshall(g).successor(0, 3) == 1

    def test_repeat_runs_identical(self, koenigsberg):
        a = floyd_warshall(koenigsberg)
        b = floyd_warshall(koenigsberg)
        assert a == b
