"""
Minimal minimizers of symmetric crossing submodular (or admissible)
functions over hereditary families.

``find_optimal`` returns one inclusionwise-minimal optimal set and
``find_minimals`` all of them. Both work on a ContractedSystem and ask an
adapter for pendant pairs, so they issue O(n^3) oracle calls.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from ..config import get_config
from ..core.errors import InfeasibleError, InvariantError, TrivialFamilyError
from ..core.oracles import (
    CountingOracle,
    SetFamilyOracle,
    SetFunctionOracle,
    with_counter,
)
from ..core.subsets import Subset
from ..core.values import Value, format_value
from ..families.basic import ExcludeElementFamily
from .contraction import ContractedSystem
from .ordering import AdmissibleFunctionAdapter, pendant_pair, resolve_adapter

logger = logging.getLogger(__name__)

AdapterLike = Union[None, str, AdmissibleFunctionAdapter]


@dataclass
class Candidate:
    """A set recorded while running FindOptimal; order_index is its insertion rank."""

    set: Subset
    value: Value
    order_index: int


@dataclass
class Solution:
    """A minimal optimal set."""

    set: Subset
    value: Value
    oracle_calls: int
    adapter: str = "queyranne"
    candidates: List[Candidate] = field(default_factory=list, repr=False)
    wall_time_ms: float = 0.0


@dataclass
class SolutionFamily:
    """All minimal optimal sets, pairwise disjoint, sorted by smallest element."""

    sets: List[Subset]
    value: Value
    oracle_calls: int
    adapter: str = "queyranne"
    wall_time_ms: float = 0.0


def _smallest(subset: Subset) -> int:
    return subset.indices()[0]


def _prepare(
    f: SetFunctionOracle,
    family: SetFamilyOracle,
    adapter: AdapterLike,
    check_invariants: Optional[bool],
) -> Tuple[CountingOracle, AdmissibleFunctionAdapter, bool]:
    if f.universe.n != family.universe.n:
        raise ValueError(
            f"Function over {f.universe.n} elements and family over "
            f"{family.universe.n} elements"
        )
    config = get_config()
    resolved = resolve_adapter(
        adapter, f, default=config.get("solver.default_adapter", "auto")
    )
    if check_invariants is None:
        check_invariants = config.check_invariants()
    return with_counter(f), resolved, check_invariants


def _reject_trivial(family: SetFamilyOracle) -> None:
    if family.contains_mask(family.universe.full_mask):
        raise TrivialFamilyError(
            "The whole ground set belongs to the family; use an exclude family "
            "or unconstrained_min for nontrivial minimization"
        )


def _check_only_loop(system: ContractedSystem) -> None:
    if not system.is_loop(system.s):
        raise InvariantError(f"s = {system.s} is not a loop")
    for v in system.active:
        if system.is_loop(v):
            raise InvariantError(f"Active element {v} is a loop")


def _run_find_optimal(
    system: ContractedSystem,
    adapter: AdmissibleFunctionAdapter,
    check_invariants: bool,
) -> Tuple[Candidate, List[Candidate]]:
    candidates: List[Candidate] = []
    n = system.universe.n

    def record(members: int) -> None:
        if check_invariants and not system.family.contains_mask(members):
            raise InvariantError(f"Candidate {Subset(n, members)} is infeasible")
        candidate = Candidate(
            Subset(n, members), system.evaluate_mask(members), len(candidates)
        )
        logger.debug(f"Candidate {candidate.set} with value {candidate.value}")
        candidates.append(candidate)

    loop_found = any(system.is_loop(v) for v in system.active)
    while not loop_found:
        t, u = pendant_pair(system, adapter=adapter)
        record(system.block(u))
        system.contract_into([t, u], t)
        # Only the merged element can have become a loop.
        loop_found = system.is_loop(t)

    system.absorb_loops()

    while len(system.active) >= 2:
        if check_invariants:
            _check_only_loop(system)
        t, u = pendant_pair(system, avoid=system.s, adapter=adapter)
        record(system.block(u))
        if system.member([t, u]):
            system.contract_into([t, u], t)
        else:
            system.contract_into([system.s, t, u], system.s)

    if len(system.active) == 1:
        record(system.block(system.active[0]))

    if not candidates:
        raise InfeasibleError("No nonempty set belongs to the family")
    best = min(candidates, key=lambda c: (c.value, c.order_index))
    return best, candidates


def find_optimal(
    f: SetFunctionOracle,
    family: SetFamilyOracle,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> Solution:
    """
    Find one inclusionwise-minimal nonempty set of the family minimizing f.

    Args:
        f: Symmetric crossing submodular value oracle, or a distance-map
            boundary function when the rizzi adapter is used
        family: Hereditary family not containing the whole ground set
        adapter: "auto", "queyranne", "rizzi" or an adapter instance.
            Defaults to the "solver.default_adapter" setting.
        check_invariants: Assert the solver invariants while running

    Returns:
        The solution, with the oracle calls it consumed

    Raises:
        TrivialFamilyError: The whole ground set belongs to the family
        InfeasibleError: Every element is a loop
    """
    started = time.perf_counter()
    counted, resolved, checks = _prepare(f, family, adapter, check_invariants)
    _reject_trivial(family)
    baseline = resolved.calls
    logger.info(
        f"FindOptimal on {f.universe.n} elements with the {resolved.name} adapter"
    )

    system = ContractedSystem(counted, family, check_invariants=checks)
    best, candidates = _run_find_optimal(system, resolved, checks)

    calls = counted.calls + resolved.calls - baseline
    logger.info(f"Optimal value {format_value(best.value)} after {calls} oracle calls")
    return Solution(
        set=best.set,
        value=best.value,
        oracle_calls=calls,
        adapter=resolved.name,
        candidates=candidates,
        wall_time_ms=(time.perf_counter() - started) * 1000,
    )


def find_minimals(
    f: SetFunctionOracle,
    family: SetFamilyOracle,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> SolutionFamily:
    """
    Find every inclusionwise-minimal nonempty set of the family minimizing f.

    Same arguments and errors as ``find_optimal``. The returned sets are
    pairwise disjoint.
    """
    started = time.perf_counter()
    counted, resolved, checks = _prepare(f, family, adapter, check_invariants)
    _reject_trivial(family)
    baseline = resolved.calls
    logger.info(
        f"FindMinimals on {f.universe.n} elements with the {resolved.name} adapter"
    )

    first = ContractedSystem(counted, family, check_invariants=checks)
    optimum, _ = _run_find_optimal(first, resolved, checks)
    target = optimum.value

    system = ContractedSystem(counted, family, check_invariants=checks)
    system.absorb(optimum.set.indices(), force_loop=True)
    system.absorb_loops()
    found = [optimum.set]

    for v in list(system.active):
        if system.evaluate([v]) == target:
            found.append(system.expand([v]))
            system.contract_into([system.s, v], system.s)

    while len(system.active) >= 2:
        if checks:
            _check_only_loop(system)
        t, u = pendant_pair(system, avoid=system.s, adapter=resolved)
        if not system.member([t, u]):
            system.contract_into([system.s, t, u], system.s)
            continue
        value = system.evaluate([t, u])
        if value == target:
            found.append(system.expand([t, u]))
            system.contract_into([system.s, t, u], system.s)
        else:
            if value < target:
                message = (
                    f"Feasible pair {system.expand([t, u])} has value "
                    f"{format_value(value)} below the optimum "
                    f"{format_value(target)}; the function is not admissible"
                )
                if checks:
                    raise InvariantError(message)
                logger.warning(message)
            system.contract_into([t, u], t)

    found.sort(key=_smallest)
    calls = counted.calls + resolved.calls - baseline
    logger.info(
        f"Found {len(found)} minimal optimal sets of value "
        f"{format_value(target)} after {calls} oracle calls"
    )
    return SolutionFamily(
        sets=found,
        value=target,
        oracle_calls=calls,
        adapter=resolved.name,
        wall_time_ms=(time.perf_counter() - started) * 1000,
    )


def _excluding_first(f: SetFunctionOracle) -> ExcludeElementFamily:
    if f.universe.n < 2:
        raise InfeasibleError("Nontrivial minimization needs at least two elements")
    return ExcludeElementFamily(f.universe, 0)


def unconstrained_min(
    f: SetFunctionOracle,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> Solution:
    """
    Minimum of f over nonempty proper subsets.

    Either a minimizer or its complement avoids element 0, so solving over
    the sets avoiding 0 is enough for a symmetric f.
    """
    return find_optimal(f, _excluding_first(f), adapter, check_invariants)


def unconstrained_minimals(
    f: SetFunctionOracle,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> SolutionFamily:
    """All minimal nontrivial minimizers of f that avoid element 0."""
    return find_minimals(f, _excluding_first(f), adapter, check_invariants)

