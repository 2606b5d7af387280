"""Exceptions raised by heredimin."""


class HerediminError(Exception):
    """Base class for all heredimin errors."""

    pass


class EnumerationCapError(HerediminError):
    """The universe is too large to enumerate."""

    def __init__(self, size: int, cap: int):
        super().__init__(
            f"Universe of size {size} is too large to enumerate (cap is {cap})"
        )
        self.size = size
        self.cap = cap


class DegenerateFamilyError(HerediminError):
    """A family that cannot be used as a constraint (e.g. empty set excluded)."""

    pass


class TrivialFamilyError(HerediminError):
    """The whole ground set belongs to the hereditary family."""

    pass


class InfeasibleError(HerediminError):
    """No nonempty set belongs to the family."""

    pass


class ContractionError(HerediminError):
    """Invalid contraction request."""

    pass


class OrderingError(HerediminError):
    """Invalid legal order or pendant pair request."""

    pass


class AdapterError(HerediminError):
    """The requested admissible-function adapter does not fit the function."""

    pass


class DisconnectedGraphError(HerediminError):
    """Shortest-path distances are infinite on a disconnected graph."""

    pass


class InvariantError(HerediminError):
    """An internal invariant check failed (only raised with checks enabled)."""

    pass
