"""Cut functions of weighted graphs and hypergraphs."""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.oracles import SetFunctionOracle
from ..core.subsets import GroundSet, Subset
from ..core.values import RationalLike, Value, to_value


def _common_scale(weights: Iterable[Fraction]) -> int:
    """Least common denominator, so cut sums can run on integers."""
    scale = 1
    for w in weights:
        scale = scale * w.denominator // math.gcd(scale, w.denominator)
    return scale


@dataclass
class WeightedGraph:
    """An undirected graph on vertices 0..vertex_count-1 with rational weights."""

    vertex_count: int
    edges: List[Tuple[int, int, Fraction]] = field(default_factory=list)

    def __post_init__(self):
        checked = []
        for u, v, w in self.edges:
            w = to_value(w)
            if u == v:
                raise ValueError(f"Self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(
                    f"Edge ({u}, {v}) is out of bounds for {self.vertex_count} vertices"
                )
            if w < 0:
                raise ValueError(f"Negative weight {w} on edge ({u}, {v})")
            checked.append((u, v, w))
        self.edges = checked

    @classmethod
    def from_edges(
        cls, vertex_count: int, edges: Iterable[Sequence[RationalLike]]
    ) -> "WeightedGraph":
        """Build from ``(u, v)`` or ``(u, v, w)`` tuples; missing weights are 1."""
        parsed = []
        for edge in edges:
            if len(edge) == 2:
                u, v = edge
                w: RationalLike = 1
            else:
                u, v, w = edge
            parsed.append((int(u), int(v), to_value(w)))
        return cls(vertex_count, parsed)

    def merged_edges(self) -> Dict[Tuple[int, int], Fraction]:
        """Parallel edges merged, weights added, keyed by (min, max)."""
        merged: Dict[Tuple[int, int], Fraction] = {}
        for u, v, w in self.edges:
            key = (min(u, v), max(u, v))
            merged[key] = merged.get(key, Fraction(0)) + w
        return merged

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        for (u, v), w in self.merged_edges().items():
            graph.add_edge(u, v, weight=w)
        return graph


@dataclass
class WeightedHypergraph:
    """A hypergraph whose hyperedges have at least two members."""

    vertex_count: int
    hyperedges: List[Tuple[Subset, Fraction]] = field(default_factory=list)

    def __post_init__(self):
        checked = []
        for members, w in self.hyperedges:
            if not isinstance(members, Subset):
                members = Subset.of(self.vertex_count, members)
            w = to_value(w)
            if members.universe_size != self.vertex_count:
                raise ValueError("Hyperedge over a different universe")
            if len(members) < 2:
                raise ValueError(f"Hyperedge {members} has fewer than two members")
            if w < 0:
                raise ValueError(f"Negative weight {w} on hyperedge {members}")
            checked.append((members, w))
        self.hyperedges = checked

    @classmethod
    def from_graph(cls, graph: WeightedGraph) -> "WeightedHypergraph":
        """The graph seen as a 2-uniform hypergraph."""
        return cls(
            graph.vertex_count,
            [(Subset.of(graph.vertex_count, (u, v)), w) for u, v, w in graph.edges],
        )


class GraphCutFunction(SetFunctionOracle):
    """f(S) = total weight of edges with exactly one endpoint in S."""

    def __init__(self, graph: WeightedGraph, universe: Optional[GroundSet] = None):
        self.graph = graph
        merged = graph.merged_edges()
        self._scale = _common_scale(merged.values())
        self._edges = [
            (u, v, int(w * self._scale)) for (u, v), w in merged.items() if w
        ]
        super().__init__(universe or GroundSet(graph.vertex_count))
        if self.universe.n != graph.vertex_count:
            raise ValueError("Graph and ground set sizes differ")

    def _value(self, members: int) -> Value:
        total = 0
        for u, v, w in self._edges:
            if ((members >> u) ^ (members >> v)) & 1:
                total += w
        return Fraction(total, self._scale)


class HypergraphCutFunction(SetFunctionOracle):
    """f(S) = total weight of hyperedges with members both inside and outside S."""

    def __init__(
        self, hypergraph: WeightedHypergraph, universe: Optional[GroundSet] = None
    ):
        self.hypergraph = hypergraph
        self._scale = _common_scale(w for _, w in hypergraph.hyperedges)
        self._hyperedges = [
            (members.members, int(w * self._scale))
            for members, w in hypergraph.hyperedges
            if w
        ]
        super().__init__(universe or GroundSet(hypergraph.vertex_count))
        if self.universe.n != hypergraph.vertex_count:
            raise ValueError("Hypergraph and ground set sizes differ")

    def _value(self, members: int) -> Value:
        total = 0
        for edge, w in self._hyperedges:
            inside = members & edge
            if inside and inside != edge:
                total += w
        return Fraction(total, self._scale)


def graph_cut(
    graph: WeightedGraph, universe: Optional[GroundSet] = None
) -> GraphCutFunction:
    """Cut capacity function of an undirected weighted graph."""
    return GraphCutFunction(graph, universe)


def hypergraph_cut(
    hypergraph: WeightedHypergraph, universe: Optional[GroundSet] = None
) -> HypergraphCutFunction:
    """Cut function of a weighted hypergraph."""
    return HypergraphCutFunction(hypergraph, universe)
