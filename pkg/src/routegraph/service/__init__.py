"""Persistence, CLI and HTTP API around the routing engine."""

from .runner import ALGORITHMS, AlgorithmRequest, BadRequest, normalize_result, run_algorithm
from .store import GraphStore, UnknownGraph

__all__ = [
    "ALGORITHMS",
    "AlgorithmRequest",
    "BadRequest",
    "GraphStore",
    "UnknownGraph",
    "normalize_result",
    "run_algorithm",
]
