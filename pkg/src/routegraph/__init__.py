"""Graph routing engine for map-overlay graphs.

Shortest paths (Dijkstra, Floyd), minimum spanning trees (Prim), Chinese
Postman tours (matching + Fleury) and Christofides TSP approximation with
OPT2/OPT3 refinement, over weighted multigraphs whose nodes live in the
pixel space of a raster map image.
"""

from .errors import (
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
from .graph import COST_TOLERANCE, Edge, Graph, Node, Overlay, euclidean_weight
from .matching import Pairing, min_weight_perfect_matching
from .postman import (
    ClosedWalk,
    EulerianAugmentation,
    OddNodeSet,
    augment_to_even,
    chinese_postman,
    fleury_euler_circuit,
    hierholzer_euler_circuit,
    odd_nodes,
)
from .serialization import (
    graph_to_json,
    load_graph,
    parse_graph,
    save_graph,
    serialize_graph,
)
from .shortest_paths import (
    DistanceMatrix,
    Route,
    ShortestPathTree,
    dijkstra,
    floyd_warshall,
    reconstruct_path,
    route_via_waypoints,
)
from .spanning import SpanningTree, prim_mst
from .tsp import (
    MetricInstance,
    Tour,
    christofides,
    held_karp_exact,
    metric_closure,
    shortcut_to_hamiltonian,
    three_opt,
    two_opt,
)

__version__ = "0.1.0"

__all__ = [
    "COST_TOLERANCE",
    "CardinalityTooLarge",
    "ClosedWalk",
    "Disconnected",
    "DistanceMatrix",
    "Edge",
    "EmptyGraph",
    "EulerianAugmentation",
    "Graph",
    "GraphInvalid",
    "InvalidCoordinate",
    "MetricInstance",
    "NegativeWeight",
    "Node",
    "OddCardinality",
    "OddDegreePresent",
    "OddNodeSet",
    "Overlay",
    "Pairing",
    "Route",
    "RouteGraphError",
    "SelfLoopRejected",
    "ShortestPathTree",
    "SpanningTree",
    "TooFewNodes",
    "TooLarge",
    "Tour",
    "Unreachable",
    "UnknownEdge",
    "UnknownNode",
    "augment_to_even",
    "chinese_postman",
    "christofides",
    "dijkstra",
    "euclidean_weight",
    "fleury_euler_circuit",
    "floyd_warshall",
    "graph_to_json",
    "held_karp_exact",
    "hierholzer_euler_circuit",
    "load_graph",
    "metric_closure",
    "min_weight_perfect_matching",
    "odd_nodes",
    "parse_graph",
    "prim_mst",
    "reconstruct_path",
    "route_via_waypoints",
    "save_graph",
    "serialize_graph",
    "shortcut_to_hamiltonian",
    "three_opt",
    "two_opt",
]
