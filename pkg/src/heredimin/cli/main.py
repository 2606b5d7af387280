import logging
import sys
from typing import Any, Callable, Optional

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel

from .. import __version__
from ..config import get_config
from ..core.errors import (
    EnumerationCapError,
    HerediminError,
    InfeasibleError,
    TrivialFamilyError,
)
from ..reference import FAMILY_CLASSES, FUNCTION_CLASSES
from ..solver import ADAPTER_NAMES
from ..validation import ValidationError
from .bench_commands import bench_impl, gen_impl
from .config_commands import get_config_impl, set_config_impl, unset_config_impl
from .solve_commands import solve_impl, verify_impl

console = Console(stderr=True)

EXIT_INVALID = 1
EXIT_INFEASIBLE = 2
EXIT_TRIVIAL = 3
EXIT_TOO_LARGE = 4

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def show_error(message: str, hint: Optional[str] = None):
    """Display error message."""
    if hint:
        message = f"{message}\n\n[dim]Hint: {hint}[/dim]"
    panel = Panel(message, title="[red]Error[/red]", border_style="red")
    console.print(panel)


def configure_logging(verbose: bool, log_level: Optional[str]) -> None:
    """Send log records to stderr through rich."""
    level = log_level or str(get_config().get("logging.level", "WARNING")).upper()
    if level not in LOG_LEVELS:
        level = "WARNING"
    if verbose and level in ("WARNING", "ERROR"):
        level = "INFO"
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def run_command(impl: Callable[..., Any], *args: Any, **kwargs: Any) -> None:
    """Run a command implementation and turn failures into exit codes."""
    try:
        code = impl(*args, **kwargs)
    except ValidationError as e:
        show_error(f"Invalid input: {e}")
        sys.exit(EXIT_INVALID)
    except TrivialFamilyError as e:
        show_error(
            str(e),
            hint="use the 'exclude' family to solve the unconstrained problem",
        )
        sys.exit(EXIT_TRIVIAL)
    except InfeasibleError as e:
        show_error(f"Infeasible instance: {e}")
        sys.exit(EXIT_INFEASIBLE)
    except EnumerationCapError as e:
        show_error(str(e))
        sys.exit(EXIT_TOO_LARGE)
    except HerediminError as e:
        show_error(str(e))
        sys.exit(EXIT_INVALID)
    if code:
        sys.exit(code)


@click.group()
@click.version_option(__version__, prog_name="heredimin")
@click.option("--verbose", is_flag=True, help="Enable verbose output")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS),
    default=None,
    help="Set logging level (defaults to the logging.level setting)",
)
def cli(verbose: bool, log_level: Optional[str]):
    """heredimin - minimal minimizers of symmetric submodular functions
    over hereditary families."""
    configure_logging(verbose, log_level)


@cli.command()
@click.argument("path")
@click.option(
    "--all-minimal", is_flag=True, help="Report every minimal optimal solution"
)
@click.option(
    "--adapter",
    type=click.Choice(ADAPTER_NAMES),
    default=None,
    help="Pendant-pair adapter (defaults to the solver.default_adapter setting)",
)
@click.option(
    "--out", type=click.Choice(["json", "text"]), default="json", help="Output format"
)
@click.option(
    "--check-invariants", is_flag=True, help="Re-check solver invariants while running"
)
def solve(
    path: str,
    all_minimal: bool,
    adapter: Optional[str],
    out: str,
    check_invariants: bool,
):
    """Solve the instance in PATH."""
    run_command(solve_impl, path, all_minimal, adapter, out, check_invariants)


@cli.command()
@click.argument("path", required=False)
@click.option("--samples", type=int, default=1, help="Random instances to check")
@click.option("--seed", type=int, default=0, help="Seed of the random campaign")
@click.option("--max-n", type=int, default=9, help="Largest random ground set")
@click.option(
    "--function-class",
    type=click.Choice(FUNCTION_CLASSES),
    default=None,
    help="Restrict random instances to one function class",
)
@click.option(
    "--family-class",
    type=click.Choice(FAMILY_CLASSES),
    default=None,
    help="Restrict random instances to one family class",
)
@click.option(
    "--expected",
    type=click.Path(dir_okay=False),
    default=None,
    help="Saved JSON report to check instead of re-solving",
)
@click.option(
    "--adapter", type=click.Choice(ADAPTER_NAMES), default=None, help="Adapter"
)
def verify(
    path: Optional[str],
    samples: int,
    seed: int,
    max_n: int,
    function_class: Optional[str],
    family_class: Optional[str],
    expected: Optional[str],
    adapter: Optional[str],
):
    """Compare the solver with brute force on PATH or on random instances."""
    run_command(
        verify_impl,
        path,
        samples,
        seed,
        max_n,
        function_class,
        family_class,
        expected,
        adapter,
    )


@cli.command()
@click.option("--sizes", default=None, help="Comma-separated ground set sizes")
@click.option("--trials", type=int, default=None, help="Trials per size")
@click.option("--seed", type=int, default=0, help="Seed of the first trial")
@click.option(
    "--out", type=click.Path(dir_okay=False), default=None, help="CSV file to write"
)
def bench(sizes: Optional[str], trials: Optional[int], seed: int, out: Optional[str]):
    """Measure oracle calls on random graph cut instances."""
    run_command(bench_impl, sizes, trials, seed, out)


@cli.command()
@click.option(
    "--function-class",
    type=click.Choice(FUNCTION_CLASSES),
    default="graph",
    help="Function class",
)
@click.option(
    "--family-class",
    type=click.Choice(FAMILY_CLASSES),
    default="cardinality",
    help="Family class",
)
@click.option("--n", "n", type=int, required=True, help="Ground set size")
@click.option("--seed", type=int, default=0, help="Random seed")
@click.option(
    "--out", type=click.Path(dir_okay=False), default=None, help="File to write"
)
def gen(function_class: str, family_class: str, n: int, seed: int, out: Optional[str]):
    """Write a random instance file."""
    run_command(gen_impl, function_class, family_class, n, seed, out)


@cli.group()
def config():
    """Configuration management commands."""
    pass


@config.command("get")
def get_config_command():
    """Display current configuration."""
    get_config_impl()


@config.command("set")
@click.argument("key")
@click.argument("value")
def set_config_command(key: str, value: str):
    """Set a configuration value."""
    set_config_impl(key, value)


@config.command("unset")
@click.argument("key")
def unset_config_command(key: str):
    """Remove a configuration value."""
    unset_config_impl(key)
