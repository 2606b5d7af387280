"""CLI commands for managing configuration."""

from typing import Any, Dict, Iterator, Tuple

from rich.console import Console
from rich.table import Table

from ..config import get_config

console = Console()


def _flatten(data: Dict[str, Any], prefix: str = "") -> Iterator[Tuple[str, Any]]:
    for key, value in data.items():
        dotted = f"{prefix}.{key}" if prefix else key
        if isinstance(value, dict):
            yield from _flatten(value, dotted)
        else:
            yield dotted, value


def _coerce(value: str) -> Any:
    """Interpret booleans, integers and comma-separated integer lists."""
    lowered = value.lower()
    if lowered in ["true", "yes"]:
        return True
    if lowered in ["false", "no"]:
        return False
    if value.lstrip("-").isdigit():
        return int(value)
    parts = [part.strip() for part in value.split(",")]
    if len(parts) > 1 and all(part.isdigit() for part in parts):
        return [int(part) for part in parts]
    return value


def get_config_impl() -> None:
    """Implementation of config get."""
    config = get_config()

    table = Table(title="heredimin configuration")
    table.add_column("Section")
    table.add_column("Key")
    table.add_column("Value")

    for dotted, value in _flatten(config.get()):
        section, _, key = dotted.partition(".")
        table.add_row(section, key or section, str(value))

    console.print(table)
    console.print(f"[dim]Stored in {config.config_file}[/dim]")


def set_config_impl(key: str, value: str) -> None:
    """Implementation of config set."""
    config = get_config()

    try:
        coerced = _coerce(value)
        config.set(key, coerced)
        console.print(f"[green]Configuration updated:[/green] {key} = {coerced}")
    except (ValueError, OSError) as e:
        console.print(f"[red]Error setting configuration:[/red] {str(e)}")


def unset_config_impl(key: str) -> None:
    """Implementation of config unset."""
    config = get_config()

    try:
        config.unset(key)
        console.print(f"[green]Configuration value removed:[/green] {key}")
    except (ValueError, OSError) as e:
        console.print(f"[red]Error removing configuration:[/red] {str(e)}")
