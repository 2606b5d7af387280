"""Command-line interface for heredimin."""

from .main import cli

__all__ = ["cli"]
