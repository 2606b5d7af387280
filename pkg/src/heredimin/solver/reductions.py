"""
Reductions to the symmetric case.

A function that is intersecting submodular and intersecting posimodular
but not symmetric is solved through its antirestriction on V + s, a
symmetric crossing submodular extension that agrees with f on every set
avoiding s. Maximal minimizers of a contraction h/T over an upward-closed
family follow by complementation inside T.
"""

import logging
from typing import Optional

from ..core.oracles import (
    CoHereditaryFamilyOracle,
    HereditaryFamilyOracle,
    SetFamilyOracle,
    SetFunctionOracle,
)
from ..core.subsets import GroundSet, Subset
from ..core.values import Value, format_value
from ..families.basic import ComplementFamily
from ..functions.derived import restricted_function
from .algorithms import (
    AdapterLike,
    Solution,
    SolutionFamily,
    find_minimals,
    find_optimal,
)

logger = logging.getLogger(__name__)

EXTRA_LABEL = "s"


def _extended_universe(universe: GroundSet) -> GroundSet:
    if not universe.labels:
        return GroundSet(universe.n + 1)
    label = EXTRA_LABEL
    while label in universe.labels:
        label = f"_{label}"
    return GroundSet(universe.n + 1, tuple(universe.labels) + (label,))


class AntirestrictionFunction(SetFunctionOracle):
    """g(X) = f(X) if s is not in X, else f((V + s) - X); s has index n."""

    symmetric = True

    def __init__(self, f: SetFunctionOracle):
        self.f = f
        self.extra = f.universe.n
        self.defined_on_trivial_sets = f.defined_on_trivial_sets
        super().__init__(_extended_universe(f.universe))

    def _value(self, members: int) -> Value:
        if (members >> self.extra) & 1:
            return self.f.evaluate_mask(self.universe.full_mask ^ members)
        return self.f.evaluate_mask(members)


class LiftedFamily(HereditaryFamilyOracle):
    """A family on V viewed on V + s: sets containing s are excluded."""

    def __init__(self, family: SetFamilyOracle):
        self.family = family
        self.extra = family.universe.n
        super().__init__(_extended_universe(family.universe))

    def _contains(self, members: int) -> bool:
        if (members >> self.extra) & 1:
            return False
        return self.family.contains_mask(members)


def antirestriction(f: SetFunctionOracle) -> AntirestrictionFunction:
    return AntirestrictionFunction(f)


def lift_family(family: SetFamilyOracle) -> LiftedFamily:
    return LiftedFamily(family)


def _drop_extra(subset: Subset) -> Subset:
    return Subset(subset.universe_size - 1, subset.members)


def find_optimal_posimodular(
    f: SetFunctionOracle,
    family: SetFamilyOracle,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> Solution:
    """
    Minimal minimizer of an intersecting submodular and posimodular f over a
    hereditary family, found on the antirestriction. The family may contain
    the whole ground set.
    """
    logger.info("Solving through the antirestriction on V + s")
    solution = find_optimal(
        antirestriction(f), lift_family(family), adapter, check_invariants
    )
    solution.set = _drop_extra(solution.set)
    for candidate in solution.candidates:
        candidate.set = _drop_extra(candidate.set)
    return solution


def find_minimals_posimodular(
    f: SetFunctionOracle,
    family: SetFamilyOracle,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> SolutionFamily:
    """All minimal minimizers of an intersecting posimodular f over a family."""
    logger.info("Solving through the antirestriction on V + s")
    result = find_minimals(
        antirestriction(f), lift_family(family), adapter, check_invariants
    )
    result.sets = [_drop_extra(s) for s in result.sets]
    return result


def maximal_minimizers_of_contraction(
    h: SetFunctionOracle,
    part: Subset,
    family: CoHereditaryFamilyOracle,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> SolutionFamily:
    """
    Inclusionwise-maximal minimizers of the contraction
    f(Y) = h(Y | (V - T)) - h(V - T) over Y in an upward-closed family on T,
    Y != T.

    Args:
        h: Symmetric crossing submodular function on V
        part: The nonempty set T
        family: Upward-closed family whose ground set is T, numbered by
            increasing original index
        adapter: Adapter used on the antirestriction

    Returns:
        The maximal minimizers as subsets of V, sorted by smallest element
    """
    if part.universe_size != h.universe.n:
        raise ValueError("T is not a subset of the function's ground set")
    if family.universe.n != len(part):
        raise ValueError(
            f"Family over {family.universe.n} elements for a part of size {len(part)}"
        )

    # f(T - X) = h(X) - h(V - T) by symmetry of h.
    outside = h.universe.full_mask & ~part.members
    mirrored = restricted_function(h, part, offset=h.evaluate_mask(outside))
    complements = ComplementFamily(family)

    result = find_minimals_posimodular(
        mirrored, complements, adapter, check_invariants
    )

    positions = part.indices()
    local_full = (1 << len(positions)) - 1
    maximal = []
    for local in result.sets:
        kept = local_full ^ local.members
        mask = 0
        for index, position in enumerate(positions):
            if (kept >> index) & 1:
                mask |= 1 << position
        maximal.append(Subset(h.universe.n, mask))
    maximal.sort(key=lambda s: s.indices()[0] if s else -1)

    logger.info(
        f"{len(maximal)} maximal minimizers of the contraction with value "
        f"{format_value(result.value)}"
    )
    return SolutionFamily(
        sets=maximal,
        value=result.value,
        oracle_calls=result.oracle_calls + 1,
        adapter=result.adapter,
        wall_time_ms=result.wall_time_ms,
    )
