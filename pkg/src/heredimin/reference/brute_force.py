"""Exhaustive reference oracles."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional

from ..config import get_config
from ..core.errors import EnumerationCapError, InfeasibleError
from ..core.oracles import SetFamilyOracle, SetFunctionOracle
from ..core.subsets import Subset
from ..core.values import Value
from ..solver.contraction import ContractedSystem

logger = logging.getLogger(__name__)


@dataclass
class BruteForceReport:
    """Minimum value over nonempty feasible sets, with the sets attaining it."""

    min_value: Value
    minimizers: List[Subset] = field(default_factory=list)
    minimal_minimizers: List[Subset] = field(default_factory=list)


# Hard ceiling; "reference.max_universe" and explicit caps can only lower it.
MAX_REFERENCE_UNIVERSE = 20


def _cap(size: int, cap: Optional[int]) -> None:
    limit = cap if cap is not None else get_config().reference_cap()
    limit = min(limit, MAX_REFERENCE_UNIVERSE)
    if size > limit:
        raise EnumerationCapError(size, limit)


def brute_force(
    f: SetFunctionOracle, family: SetFamilyOracle, cap: Optional[int] = None
) -> BruteForceReport:
    """
    Scan every nonempty set of the family.

    The whole ground set is skipped for functions left undefined on it.

    Raises:
        EnumerationCapError: The ground set exceeds "reference.max_universe"
        InfeasibleError: No nonempty set belongs to the family
    """
    n = f.universe.n
    _cap(n, cap)
    full = (1 << n) - 1
    skip_full = not f.defined_on_trivial_sets

    best: Optional[Value] = None
    minimizers: List[int] = []
    for mask in range(1, full + 1):
        if skip_full and mask == full:
            continue
        if not family.contains_mask(mask):
            continue
        value = f.evaluate_mask(mask)
        if best is None or value < best:
            best, minimizers = value, [mask]
        elif value == best:
            minimizers.append(mask)

    if best is None:
        raise InfeasibleError("No nonempty set belongs to the family")

    minimal = [
        a for a in minimizers if not any(b != a and b & a == b for b in minimizers)
    ]
    logger.debug(
        f"Brute force on {n} elements: min {best}, {len(minimizers)} minimizers, "
        f"{len(minimal)} minimal"
    )
    return BruteForceReport(
        min_value=best,
        minimizers=[Subset(n, m) for m in minimizers],
        minimal_minimizers=[Subset(n, m) for m in minimal],
    )


def certify_pendant_pair(
    system: ContractedSystem, t: int, u: int, cap: Optional[int] = None
) -> bool:
    """
    True iff f'({u}) <= f'(U) for every set U of current elements that
    contains u and not t.
    """
    elements = system.elements()
    _cap(len(elements), cap)
    if t not in elements or u not in elements or t == u:
        raise ValueError(f"({t}, {u}) is not a pair of current elements")

    others = [v for v in elements if v not in (t, u)]
    single = system.evaluate([u])
    for size in range(1, len(others) + 1):
        for extra in combinations(others, size):
            value = system.evaluate((u,) + extra)
            if value < single:
                logger.debug(
                    f"Pair ({t}, {u}) fails: f'({[u, *extra]}) = {value} < {single}"
                )
                return False
    return True
