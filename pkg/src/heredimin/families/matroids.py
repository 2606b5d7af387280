"""Independent sets of uniform, partition and graphic matroids."""

from typing import Iterable, List, Sequence, Tuple

from networkx.utils import UnionFind

from ..core.oracles import HereditaryFamilyOracle
from ..core.subsets import GroundSet, iter_bits, mask_of, popcount


class MatroidFamily(HereditaryFamilyOracle):
    """Base class; ``kind`` names the matroid class."""

    kind = "matroid"


class UniformMatroidFamily(MatroidFamily):
    """U(k, n): independent sets are those with at most k elements."""

    kind = "uniform"

    def __init__(self, universe: GroundSet, k: int):
        if k < 0:
            raise ValueError("Rank must be nonnegative")
        self.k = k
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        return popcount(members) <= self.k


class PartitionMatroidFamily(MatroidFamily):
    """
    At most capacities[i] elements from blocks[i]. Elements outside every
    block are unconstrained.
    """

    kind = "partition"

    def __init__(
        self,
        universe: GroundSet,
        blocks: Sequence[Iterable[int]],
        capacities: Sequence[int],
    ):
        if len(blocks) != len(capacities):
            raise ValueError("One capacity per block expected")
        self.blocks = [mask_of(b) for b in blocks]
        seen = 0
        for block in self.blocks:
            if block & seen:
                raise ValueError("Partition blocks must be disjoint")
            if block >> universe.n:
                raise ValueError("Partition block outside the universe")
            seen |= block
        if any(c < 0 for c in capacities):
            raise ValueError("Capacities must be nonnegative")
        self.capacities = list(capacities)
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        return all(
            popcount(members & block) <= capacity
            for block, capacity in zip(self.blocks, self.capacities)
        )


class GraphicMatroidFamily(MatroidFamily):
    """Ground set elements are the edges of a graph; independent sets are forests."""

    kind = "graphic"

    def __init__(
        self,
        universe: GroundSet,
        vertex_count: int,
        edges: Sequence[Sequence[int]],
    ):
        if len(edges) != universe.n:
            raise ValueError(
                f"Graphic matroid over {universe.n} elements needs {universe.n} "
                f"edges, got {len(edges)}"
            )
        self.vertex_count = vertex_count
        self.edges: List[Tuple[int, int]] = []
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"Edge ({u}, {v}) is out of bounds")
            self.edges.append((u, v))
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        forest = UnionFind()
        for index in iter_bits(members):
            u, v = self.edges[index]
            if forest[u] == forest[v]:
                return False
            forest.union(u, v)
        return True
