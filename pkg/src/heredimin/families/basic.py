"""Hereditary and co-hereditary family oracles."""

from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, List, Sequence, Union

from ..core.oracles import (
    CoHereditaryFamilyOracle,
    HereditaryFamilyOracle,
    SetFamilyOracle,
)
from ..core.subsets import GroundSet, Subset, iter_bits, mask_of, popcount
from ..core.values import RationalLike, Value, to_value

SubsetLike = Union[Subset, Iterable[int]]


def _as_mask(universe: GroundSet, subset: SubsetLike) -> int:
    if isinstance(subset, Subset):
        if subset.universe_size != universe.n:
            raise ValueError("Subset over a different universe")
        return subset.members
    mask = mask_of(subset)
    if mask >> universe.n:
        raise ValueError(f"Subset {sorted(subset)} is outside the universe")
    return mask


class CardinalityFamily(HereditaryFamilyOracle):
    """All subsets with at most k elements."""

    def __init__(self, universe: GroundSet, k: int):
        if k < 0:
            raise ValueError("Cardinality bound must be nonnegative")
        self.k = k
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        return popcount(members) <= self.k


class KnapsackFamily(HereditaryFamilyOracle):
    """All subsets whose total weight is at most the budget (one unit by default)."""

    def __init__(
        self,
        universe: GroundSet,
        weights: Sequence[RationalLike],
        budget: RationalLike = 1,
    ):
        if len(weights) != universe.n:
            raise ValueError(f"Expected {universe.n} weights, got {len(weights)}")
        self.weights: List[Value] = [to_value(w) for w in weights]
        if any(w < 0 for w in self.weights):
            raise ValueError("Knapsack weights must be nonnegative")
        self.budget = to_value(budget)
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        total = sum((self.weights[i] for i in iter_bits(members)), Fraction(0))
        return total <= self.budget


class ForbiddenSubsetsFamily(HereditaryFamilyOracle):
    """All subsets that contain none of the given (nonempty) obstructions."""

    def __init__(self, universe: GroundSet, obstructions: Iterable[SubsetLike]):
        self.obstructions = [_as_mask(universe, o) for o in obstructions]
        if any(o == 0 for o in self.obstructions):
            raise ValueError("Obstructions must be nonempty")
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        for obstruction in self.obstructions:
            if obstruction & members == obstruction:
                return False
        return True


class ExcludeElementFamily(HereditaryFamilyOracle):
    """All subsets avoiding element s; recovers unconstrained minimization."""

    def __init__(self, universe: GroundSet, s: int):
        if not 0 <= s < universe.n:
            raise ValueError(f"Element {s} is outside the universe")
        self.s = s
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        return not (members >> self.s) & 1


class IntersectionFamily(HereditaryFamilyOracle):
    """Sets belonging to every part."""

    def __init__(self, parts: Sequence[HereditaryFamilyOracle]):
        if not parts:
            raise ValueError("An intersection needs at least one family")
        universe = parts[0].universe
        if any(p.universe.n != universe.n for p in parts):
            raise ValueError("All parts must share the same universe")
        self.parts = list(parts)
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        return all(p.contains_mask(members) for p in self.parts)


class CallbackFamily(HereditaryFamilyOracle):
    """Membership given by a user callback (assumed downward closed)."""

    def __init__(self, universe: GroundSet, predicate: Callable[[Subset], bool]):
        self.predicate = predicate
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        return bool(self.predicate(Subset(self.universe.n, members)))


class SupersetFamily(CoHereditaryFamilyOracle):
    """All supersets of at least one generator (upward closure)."""

    def __init__(self, universe: GroundSet, generators: Iterable[SubsetLike]):
        self.generators = [_as_mask(universe, g) for g in generators]
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        return any(g & members == g for g in self.generators)


class MinimumCardinalityFamily(CoHereditaryFamilyOracle):
    """All subsets with at least k elements."""

    def __init__(self, universe: GroundSet, k: int):
        self.k = k
        super().__init__(universe)

    def _contains(self, members: int) -> bool:
        return popcount(members) >= self.k


class ComplementFamily(HereditaryFamilyOracle):
    """{V - S : S in coI} for an upward-closed coI."""

    def __init__(self, family: CoHereditaryFamilyOracle):
        self.family = family
        super().__init__(family.universe)

    def _contains(self, members: int) -> bool:
        return self.family.contains_mask(self.universe.full_mask ^ members)


class CoComplementFamily(CoHereditaryFamilyOracle):
    """{V - S : S in I} for a hereditary I."""

    def __init__(self, family: HereditaryFamilyOracle):
        self.family = family
        super().__init__(family.universe)

    def _contains(self, members: int) -> bool:
        return self.family.contains_mask(self.universe.full_mask ^ members)


def complement_family(family: SetFamilyOracle) -> SetFamilyOracle:
    """
    The family of complements. Complementing a co-hereditary family yields a
    hereditary one and vice versa; complementing twice restores membership.
    """
    if isinstance(family, ComplementFamily):
        return family.family
    if isinstance(family, CoComplementFamily):
        return family.family
    if isinstance(family, CoHereditaryFamilyOracle):
        return ComplementFamily(family)
    if isinstance(family, HereditaryFamilyOracle):
        return CoComplementFamily(family)
    raise TypeError(f"Cannot complement {type(family).__name__}")


def loops_of(
    family: SetFamilyOracle,
    elements: Iterable[int],
    expander: Callable[[int], Subset],
) -> List[int]:
    """Elements v whose expanded set X_v is not in the family."""
    return [v for v in elements if not family.contains(expander(v))]


def matching_family(
    universe: GroundSet, hyperedges: Sequence[Iterable[int]]
) -> ForbiddenSubsetsFamily:
    """
    Matchings of a hypergraph whose hyperedges are the ground set elements:
    the obstructions are all pairs of hyperedges sharing a vertex.
    """
    if len(hyperedges) != universe.n:
        raise ValueError("One ground set element per hyperedge expected")
    vertex_sets = [set(e) for e in hyperedges]
    obstructions = [
        (i, j)
        for i, j in combinations(range(len(vertex_sets)), 2)
        if vertex_sets[i] & vertex_sets[j]
    ]
    return ForbiddenSubsetsFamily(universe, obstructions)


def triangle_free_family(
    universe: GroundSet, edges: Iterable[Sequence[int]]
) -> ForbiddenSubsetsFamily:
    """Vertex sets inducing a triangle-free subgraph; triangles are the obstructions."""
    adjacency = {v: set() for v in range(universe.n)}
    for edge in edges:
        u, v = edge[0], edge[1]
        adjacency[u].add(v)
        adjacency[v].add(u)
    triangles = [
        (a, b, c)
        for a, b, c in combinations(range(universe.n), 3)
        if b in adjacency[a] and c in adjacency[a] and c in adjacency[b]
    ]
    return ForbiddenSubsetsFamily(universe, triangles)
