"""heredimin - minimal minimizers of symmetric submodular functions over hereditary families"""

__version__ = "0.1.0"

from .cli import cli

__all__ = ["cli"]
