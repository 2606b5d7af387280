"""Implementations of the bench and gen commands."""

import csv
import io
import logging
from pathlib import Path
from statistics import mean
from typing import Dict, List, Optional, Sequence

import click
from rich.console import Console

from ..config import get_config
from ..reference import random_instance, random_instance_spec
from ..solver import find_minimals, find_optimal
from ..validation import ValidationError, serialize_instance

logger = logging.getLogger(__name__)

console = Console(stderr=True)

CSV_HEADER = [
    "n",
    "algorithm",
    "mean_calls",
    "max_calls",
    "max_calls_over_n3",
    "mean_ms",
]
ALGORITHMS = {"find_optimal": find_optimal, "find_minimals": find_minimals}


def parse_sizes(raw: Optional[str]) -> List[int]:
    """Parse a comma-separated size list, falling back to "bench.sizes"."""
    if raw is None:
        return [int(n) for n in get_config().get("bench.sizes", [10, 20, 40, 80])]
    try:
        sizes = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise ValidationError(f"Invalid size list: {raw}")
    if not sizes:
        raise ValidationError("The size list is empty")
    return sizes


def bench_rows(sizes: Sequence[int], trials: int, seed: int) -> List[Dict[str, str]]:
    """
    Measure oracle calls of both algorithms on random graph cut instances
    under a cardinality constraint.

    Trial ``i`` at size ``n`` uses the instance seeded ``seed + i``, so
    repeated runs report identical call counts.
    """
    if trials < 1:
        raise ValidationError("--trials must be at least 1")
    for n in sizes:
        if n < 2:
            raise ValidationError(f"Sizes must be at least 2, got {n}")

    rows = []
    for n in sizes:
        instances = [
            random_instance(seed + trial, n, "graph", "cardinality")
            for trial in range(trials)
        ]
        for name, algorithm in ALGORITHMS.items():
            calls: List[int] = []
            times: List[float] = []
            for f, family in instances:
                result = algorithm(f, family)
                calls.append(result.oracle_calls)
                times.append(result.wall_time_ms)
            logger.info(f"n={n} {name}: max {max(calls)} calls over {trials} trials")
            rows.append(
                {
                    "n": str(n),
                    "algorithm": name,
                    "mean_calls": f"{mean(calls):.1f}",
                    "max_calls": str(max(calls)),
                    "max_calls_over_n3": f"{max(calls) / n**3:.4f}",
                    "mean_ms": f"{mean(times):.2f}",
                }
            )
    return rows


def bench_impl(
    sizes: Optional[str] = None,
    trials: Optional[int] = None,
    seed: int = 0,
    out: Optional[str] = None,
) -> None:
    """Implementation of the bench command."""
    size_list = parse_sizes(sizes)
    if trials is None:
        trials = int(get_config().get("bench.trials", 3))

    with console.status("[bold green]Benchmarking..."):
        rows = bench_rows(size_list, trials, seed)

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)

    if out is None:
        click.echo(buffer.getvalue(), nl=False)
    else:
        Path(out).write_text(buffer.getvalue())
        console.print(f"[green]Wrote {len(rows)} rows to {out}[/green]")


def gen_impl(
    function_class: str,
    family_class: str,
    n: int,
    seed: int = 0,
    out: Optional[str] = None,
) -> None:
    """Implementation of the gen command."""
    try:
        model = random_instance_spec(seed, n, function_class, family_class)
    except ValueError as e:
        raise ValidationError(str(e))
    text = serialize_instance(model)

    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)
        console.print(f"[green]Wrote instance to {out}[/green]")
