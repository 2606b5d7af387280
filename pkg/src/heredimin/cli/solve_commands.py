"""Implementations of the solve and verify commands."""

import logging
import random
from typing import List, Optional, Union

import click
from rich.console import Console
from rich.table import Table

from ..core.subsets import GroundSet, Subset
from ..core.values import format_value
from ..reference import (
    FAMILY_CLASSES,
    FUNCTION_CLASSES,
    VerificationResult,
    compare_report_with_brute_force,
    compare_with_brute_force,
    random_instance,
)
from ..solver import Solution, SolutionFamily, minimize
from ..validation import (
    SolveReport,
    ValidationError,
    build_instance,
    load_instance,
    load_report,
    serialize_report,
)

logger = logging.getLogger(__name__)

output = Console()
status_console = Console(stderr=True)

EXIT_MISMATCH = 5


def _labels(universe: GroundSet, subset: Subset) -> List[Union[str, int]]:
    if universe.labels:
        return list(universe.names(subset))
    return list(subset.indices())


def build_report(
    result: Union[Solution, SolutionFamily], universe: GroundSet
) -> SolveReport:
    """The JSON report of a solver result."""
    if isinstance(result, SolutionFamily):
        return SolveReport(
            algorithm="find_minimals",
            adapter=result.adapter,
            value=format_value(result.value),
            sets=[_labels(universe, s) for s in result.sets],
            oracle_calls=result.oracle_calls,
            wall_time_ms=round(result.wall_time_ms, 3),
        )
    return SolveReport(
        algorithm="find_optimal",
        adapter=result.adapter,
        value=format_value(result.value),
        set=_labels(universe, result.set),
        oracle_calls=result.oracle_calls,
        wall_time_ms=round(result.wall_time_ms, 3),
    )


def _print_report(report: SolveReport) -> None:
    table = Table(title="Solution")
    table.add_column("Field")
    table.add_column("Value")
    table.add_row("Algorithm", report.algorithm)
    table.add_row("Adapter", report.adapter)
    table.add_row("Value", report.value)
    sets = report.sets if report.sets is not None else [report.set or []]
    for i, members in enumerate(sets):
        label = "Set" if len(sets) == 1 else f"Set {i + 1}"
        table.add_row(label, "{" + ", ".join(str(m) for m in members) + "}")
    table.add_row("Oracle calls", str(report.oracle_calls))
    table.add_row("Wall time (ms)", f"{report.wall_time_ms:.3f}")
    output.print(table)


def solve_impl(
    path: str,
    all_minimal: bool = False,
    adapter: Optional[str] = None,
    out: str = "json",
    check_invariants: bool = False,
) -> None:
    """Implementation of the solve command."""
    instance = build_instance(load_instance(path))
    with status_console.status("[bold green]Solving..."):
        result = minimize(
            instance.function,
            instance.family,
            all_minimal=all_minimal,
            adapter=adapter,
            check_invariants=check_invariants or None,
        )
    report = build_report(result, instance.universe)
    if out == "json":
        click.echo(serialize_report(report), nl=False)
    else:
        _print_report(report)


def _show_result(result: VerificationResult, title: str) -> None:
    if result.match:
        click.echo(f"MATCH {title}")
        return
    click.echo(f"MISMATCH {title}")
    for difference in result.differences:
        click.echo(f"  {difference}")


def verify_impl(
    path: Optional[str] = None,
    samples: int = 1,
    seed: int = 0,
    max_n: int = 9,
    function_class: Optional[str] = None,
    family_class: Optional[str] = None,
    expected: Optional[str] = None,
    adapter: Optional[str] = None,
) -> int:
    """
    Implementation of the verify command.

    With a path, checks that instance (or a saved report for it, with
    ``expected``); without one, checks ``samples`` random instances.

    Returns:
        The exit code: 0 when everything matched
    """
    if path is not None:
        instance = build_instance(load_instance(path))
        if expected is not None:
            result = compare_report_with_brute_force(
                load_report(expected), instance.function, instance.family
            )
        else:
            result = compare_with_brute_force(
                instance.function, instance.family, adapter=adapter
            )
        _show_result(result, path)
        return 0 if result.match else EXIT_MISMATCH

    if expected is not None:
        raise ValidationError("--expected needs an instance path")
    if max_n < 2:
        raise ValidationError("--max-n must be at least 2")

    rng = random.Random(seed)
    matched = 0
    with status_console.status("[bold green]Verifying random instances...") as status:
        for sample in range(samples):
            n = rng.randint(2, max_n)
            fclass = function_class or rng.choice(FUNCTION_CLASSES)
            iclass = family_class or rng.choice(FAMILY_CLASSES)
            instance_seed = rng.randrange(2**31)
            f, family = random_instance(instance_seed, n, fclass, iclass)
            result = compare_with_brute_force(f, family, adapter=adapter)
            status.update(f"[bold green]Verified {sample + 1}/{samples}")
            if result.match:
                matched += 1
            else:
                _show_result(
                    result,
                    f"seed={instance_seed} n={n} function={fclass} family={iclass}",
                )

    click.echo(f"{matched}/{samples} MATCH")
    return 0 if matched == samples else EXIT_MISMATCH
