"""Main entry point for the heredimin CLI."""

from .cli.main import cli

if __name__ == "__main__":
    cli()
