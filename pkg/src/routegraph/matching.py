"""Exact minimum-weight perfect matching on an even node set.

Distances come from a metric-closure DistanceMatrix, never raw edges: the
nodes being paired are typically far apart in the underlying graph.  The
matcher is exact subset dynamic programming, O(2^m * m^2) with a hard cap,
which is ample at map scale where the odd-node sets are small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import CardinalityTooLarge, OddCardinality, Unreachable
from .shortest_paths import DistanceMatrix

MAX_MATCHING_NODES = 24
"""Hard cap on the matched set; beyond this the subset DP is refused."""


@dataclass(frozen=True)
class Pairing:
    """A perfect pairing: (low, high) id pairs, sorted, plus summed distance."""

    pairs: tuple[tuple[int, int], ...]
    total_cost: float


def min_weight_perfect_matching(nodes: Sequence[int], dist: DistanceMatrix) -> Pairing:
    """Pair up ``nodes`` two by two minimizing the summed pair distances.

    Exact, not heuristic.  Among equal-cost pairings the lexicographically
    smallest pair set (under sorted node ids) is returned, so results are
    deterministic.  The result is invariant under permutation of ``nodes``.
    """
    ids = sorted(nodes)
    if len(set(ids)) != len(ids):
        raise ValueError("matched node set contains duplicates")
    m = len(ids)
    if m == 0:
        return Pairing((), 0.0)
    if m % 2 != 0:
        raise OddCardinality(f"cannot perfectly match {m} nodes")
    if m > MAX_MATCHING_NODES:
        raise CardinalityTooLarge(f"{m} nodes exceeds the cap of {MAX_MATCHING_NODES}")

    cost = [[0.0] * m for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            d = dist.distance(ids[a], ids[b])
            if d is None:
                raise Unreachable(f"nodes {ids[a]} and {ids[b]} are not connected")
            cost[a][b] = cost[b][a] = d

    memo: dict[int, float] = {0: 0.0}

    def best(mask: int) -> float:
        """Min cost to pair up exactly the index set ``mask``."""
        cached = memo.get(mask)
        if cached is not None:
            return cached
        i = (mask & -mask).bit_length() - 1  # always match the lowest index first
        rest = mask ^ (1 << i)
        result = math.inf
        partners = rest
        while partners:
            j = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            c = cost[i][j] + best(rest ^ (1 << j))
            if c < result:
                result = c
        memo[mask] = result
        return result

    full = (1 << m) - 1
    total = best(full)

    pairs: list[tuple[int, int]] = []
    mask = full
    while mask:
        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        partners = rest
        while partners:
            j = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            # exact float equality: best(mask) was computed from these very terms
            if cost[i][j] + best(rest ^ (1 << j)) == best(mask):
                pairs.append((ids[i], ids[j]))
                mask = rest ^ (1 << j)
                break
        else:
            raise RuntimeError("matching reconstruction failed")  # unreachable

    return Pairing(tuple(pairs), total)
