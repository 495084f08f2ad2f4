"""Small canonical graphs used by the docs, the demos and the test suite."""

from __future__ import annotations

from .graph import Graph


def triangle() -> Graph:
    """Three nodes a/b/c with weights 1, 2 and 4 (the direct a-c edge loses)."""
    g = Graph()
    g = g.add_node(0.0, 0.0, label="a")
    g = g.add_node(100.0, 0.0, label="b")
    g = g.add_node(50.0, 80.0, label="c")
    g = g.add_edge(0, 1, weight=1.0)
    g = g.add_edge(1, 2, weight=2.0)
    g = g.add_edge(0, 2, weight=4.0)
    return g


def path3() -> Graph:
    """Path a-b-c with unit weights; both endpoints have odd degree."""
    g = Graph()
    g = g.add_node(0.0, 0.0, label="a")
    g = g.add_node(100.0, 0.0, label="b")
    g = g.add_node(200.0, 0.0, label="c")
    g = g.add_edge(0, 1, weight=1.0)
    g = g.add_edge(1, 2, weight=1.0)
    return g


def koenigsberg() -> Graph:
    """The seven bridges of Königsberg with unit weights.

    Nodes: A and B are the river banks, C the central island, D the eastern
    island.  Every node has odd degree, so no Euler circuit exists until the
    graph is augmented.
    """
    g = Graph()
    g = g.add_node(200.0, 60.0, label="A")
    g = g.add_node(200.0, 240.0, label="B")
    g = g.add_node(120.0, 150.0, label="C")
    g = g.add_node(320.0, 150.0, label="D")
    for u, v in [(0, 2), (0, 2), (1, 2), (1, 2), (0, 3), (1, 3), (2, 3)]:
        g = g.add_edge(u, v, weight=1.0)
    return g


def unit_square() -> Graph:
    """Complete graph on the unit square corners, Euclidean weights.

    The optimal tour is the perimeter of length 4.
    """
    g = Graph()
    for x, y in [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]:
        g = g.add_node(x, y)
    for u in range(4):
        for v in range(u + 1, 4):
            g = g.add_edge(u, v)  # weight defaults to the Euclidean distance
    return g


FIXTURES = {
    "triangle": triangle,
    "path3": path3,
    "koenigsberg": koenigsberg,
    "unit_square": unit_square,
}
