"""Checking solver output against the brute-force reference."""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from ..core.oracles import SetFamilyOracle, SetFunctionOracle
from ..core.subsets import GroundSet, Subset
from ..core.values import Value, format_value, to_value
from ..solver.algorithms import AdapterLike
from ..solver.api import minimize
from ..validation.handlers import ValidationError
from ..validation.schemas import SolveReport
from .brute_force import BruteForceReport, brute_force

logger = logging.getLogger(__name__)


@dataclass
class VerificationResult:
    """Outcome of one comparison; ``differences`` is empty on a match."""

    expected: BruteForceReport
    value: Optional[Value] = None
    sets: List[Subset] = field(default_factory=list)
    differences: List[str] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return not self.differences


def _describe(universe: GroundSet, sets: Iterable[Subset]) -> str:
    return ", ".join(
        "{" + ", ".join(universe.names(s)) + "}"
        for s in sorted(sets, key=lambda s: (s.indices(), s.members))
    )


def _compare_sets(
    universe: GroundSet,
    found: List[Subset],
    expected: List[Subset],
    differences: List[str],
) -> None:
    if set(found) != set(expected):
        differences.append(
            f"minimal minimizers: got [{_describe(universe, found)}], "
            f"expected [{_describe(universe, expected)}]"
        )
    for i, a in enumerate(found):
        for b in found[i + 1 :]:
            if not a.isdisjoint(b):
                differences.append(
                    f"minimal minimizers {_describe(universe, [a])} and "
                    f"{_describe(universe, [b])} overlap"
                )


def _compare_value(found: Value, expected: Value, differences: List[str]) -> None:
    if found != expected:
        differences.append(
            f"value: got {format_value(found)}, expected {format_value(expected)}"
        )


def compare_with_brute_force(
    f: SetFunctionOracle,
    family: SetFamilyOracle,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> VerificationResult:
    """Run both solver algorithms and compare them with an exhaustive scan."""
    expected = brute_force(f, family)
    universe = f.universe

    optimum = minimize(f, family, False, adapter, check_invariants)
    minimals = minimize(f, family, True, adapter, check_invariants)

    result = VerificationResult(expected, minimals.value, list(minimals.sets))
    _compare_value(optimum.value, expected.min_value, result.differences)
    if optimum.set not in expected.minimal_minimizers:
        result.differences.append(
            f"optimal set {_describe(universe, [optimum.set])} is not a minimal "
            f"minimizer"
        )
    _compare_value(minimals.value, expected.min_value, result.differences)
    _compare_sets(
        universe, minimals.sets, expected.minimal_minimizers, result.differences
    )

    if not result.match:
        logger.warning(f"Mismatch with brute force: {'; '.join(result.differences)}")
    return result


def compare_report_with_brute_force(
    report: SolveReport, f: SetFunctionOracle, family: SetFamilyOracle
) -> VerificationResult:
    """Check a saved solve report against an exhaustive scan."""
    expected = brute_force(f, family)
    universe = f.universe

    def subset_of(labels: Iterable) -> Subset:
        try:
            return universe.subset(universe.index_of(str(label)) for label in labels)
        except (KeyError, ValueError) as e:
            raise ValidationError(f"Report does not match the instance: {e}")

    value = to_value(report.value)
    result = VerificationResult(expected, value)
    _compare_value(value, expected.min_value, result.differences)
    if report.sets is not None:
        result.sets = [subset_of(labels) for labels in report.sets]
        _compare_sets(
            universe, result.sets, expected.minimal_minimizers, result.differences
        )
    elif report.set is not None:
        result.sets = [subset_of(report.set)]
        if result.sets[0] not in expected.minimal_minimizers:
            result.differences.append(
                f"set {_describe(universe, result.sets)} is not a minimal minimizer"
            )
    return result
