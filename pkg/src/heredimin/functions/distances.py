"""
Distance maps on pairs of disjoint sets and the boundary functions they induce.

A distance map d is symmetric, monotone and consistent; the boundary
function f(S) = d(S, V - S) is then admissible even when it is not
crossing submodular, and pendant pairs are found with the max-back order.
"""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import List, Optional

import networkx as nx

from ..core.errors import DisconnectedGraphError
from ..core.oracles import SetFunctionOracle
from ..core.subsets import GroundSet, Subset, iter_bits
from ..core.validators import resolve_cap
from ..core.values import Value
from .graphs import WeightedGraph

logger = logging.getLogger(__name__)


class DistanceMap(ABC):
    """A map d(A, B) on pairs of nonempty disjoint subsets, with a call counter."""

    def __init__(self, universe: GroundSet):
        self.universe = universe
        self.calls = 0

    @abstractmethod
    def _distance(self, a: int, b: int) -> Value:
        """Distance between two disjoint nonempty bitmasks."""

    def distance(self, a: Subset, b: Subset) -> Value:
        if not a or not b:
            raise ValueError("Distance maps are defined on nonempty sets only")
        if not a.isdisjoint(b):
            raise ValueError(f"Distance arguments {a} and {b} intersect")
        return self.distance_mask(a.members, b.members)

    def distance_mask(self, a: int, b: int) -> Value:
        self.calls += 1
        return self._distance(a, b)


class ShortestPathDistanceMap(DistanceMap):
    """d(A, B) = max over u in A, v in B of the shortest-path distance."""

    def __init__(self, graph: WeightedGraph, universe: Optional[GroundSet] = None):
        nx_graph = graph.to_networkx()
        if not nx.is_connected(nx_graph):
            raise DisconnectedGraphError(
                "Shortest-path distances need a connected graph"
            )
        self.graph = graph
        lengths = dict(nx.all_pairs_dijkstra_path_length(nx_graph, weight="weight"))
        self.lengths: List[List[Value]] = [
            [Fraction(lengths[u][v]) for v in range(graph.vertex_count)]
            for u in range(graph.vertex_count)
        ]
        super().__init__(universe or GroundSet(graph.vertex_count))

    def _distance(self, a: int, b: int) -> Value:
        targets = list(iter_bits(b))
        return max(
            self.lengths[u][v] for u in iter_bits(a) for v in targets
        )


class FunctionDistanceMap(DistanceMap):
    """d(A, B) = (f(A) + f(B) - f(A | B)) / 2 for a symmetric crossing submodular f."""

    def __init__(self, f: SetFunctionOracle):
        self.f = f
        super().__init__(f.universe)

    def _distance(self, a: int, b: int) -> Value:
        f = self.f
        return (f.evaluate_mask(a) + f.evaluate_mask(b) - f.evaluate_mask(a | b)) / 2


class CountingDistanceMap(DistanceMap):
    """Delegating wrapper with its own call counter starting at zero."""

    def __init__(self, inner: DistanceMap):
        self.inner = inner
        super().__init__(inner.universe)

    def _distance(self, a: int, b: int) -> Value:
        return self.inner.distance_mask(a, b)


class BoundaryFunction(SetFunctionOracle):
    """f(S) = d(S, V - S), with f(empty) = f(V) = 0 by convention."""

    defined_on_trivial_sets = False

    def __init__(self, distance_map: DistanceMap):
        self.distance_map = distance_map
        super().__init__(distance_map.universe)

    def _value(self, members: int) -> Value:
        full = self.universe.full_mask
        if members == 0 or members == full:
            return Fraction(0)
        return self.distance_map.distance_mask(members, full ^ members)


def shortest_path_distance_map(
    graph: WeightedGraph, universe: Optional[GroundSet] = None
) -> ShortestPathDistanceMap:
    """Max shortest-path distance map of a connected weighted graph."""
    return ShortestPathDistanceMap(graph, universe)


def boundary_function(distance_map: DistanceMap) -> BoundaryFunction:
    return BoundaryFunction(distance_map)


def map_from_function(f: SetFunctionOracle) -> FunctionDistanceMap:
    return FunctionDistanceMap(f)


def validate_distance_map(distance_map: DistanceMap, cap: Optional[int] = None) -> bool:
    """
    Check symmetry, monotonicity and consistency over every pairwise
    disjoint pair (A, B) and triple (A, B, W) of nonempty sets.
    """
    n = distance_map.universe.n
    resolve_cap(n, cap)
    d = distance_map.distance_mask
    full = distance_map.universe.full_mask

    for a in range(1, full + 1):
        rest = full & ~a
        b = rest
        while b:
            if d(a, b) != d(b, a):
                logger.debug(f"Symmetry fails at {a:#x}, {b:#x}")
                return False
            w = rest & ~b
            while w:
                if d(a, b) > d(a, b | w):
                    logger.debug(f"Monotonicity fails at {a:#x}, {b:#x}, {w:#x}")
                    return False
                if d(a, w) >= d(b, w) and d(a, w | b) < d(b, w | a):
                    logger.debug(f"Consistency fails at {a:#x}, {b:#x}, {w:#x}")
                    return False
                w = (w - 1) & (rest & ~b)
            b = (b - 1) & rest
    return True
