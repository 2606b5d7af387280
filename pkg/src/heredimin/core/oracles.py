"""Value and membership oracle interfaces."""

from abc import ABC, abstractmethod
from typing import Dict

from .errors import DegenerateFamilyError
from .subsets import GroundSet, Subset
from .values import Value


class SetFunctionOracle(ABC):
    """
    A set function ``f: 2^V -> Q`` given by a value oracle.

    Subclasses implement ``_value`` on bitmasks. Every evaluation through
    ``evaluate`` or ``evaluate_mask`` increments ``calls``.
    """

    # Claimed properties, used for dispatch only; the validators certify them.
    symmetric: bool = True
    # Distance-induced functions leave f on the empty set and V undefined.
    defined_on_trivial_sets: bool = True

    def __init__(self, universe: GroundSet):
        self.universe = universe
        self.calls = 0

    @abstractmethod
    def _value(self, members: int) -> Value:
        """Value of the subset with the given bitmask."""

    def evaluate(self, subset: Subset) -> Value:
        if subset.universe_size != self.universe.n:
            raise ValueError(
                f"Subset over {subset.universe_size} elements passed to an "
                f"oracle over {self.universe.n}"
            )
        return self.evaluate_mask(subset.members)

    def evaluate_mask(self, members: int) -> Value:
        self.calls += 1
        return self._value(members)

    def __call__(self, subset: Subset) -> Value:
        return self.evaluate(subset)


class CountingOracle(SetFunctionOracle):
    """Delegating wrapper with its own call counter starting at zero."""

    def __init__(self, inner: SetFunctionOracle):
        super().__init__(inner.universe)
        self.inner = inner
        self.symmetric = inner.symmetric
        self.defined_on_trivial_sets = inner.defined_on_trivial_sets

    def _value(self, members: int) -> Value:
        return self.inner.evaluate_mask(members)


class MemoizedOracle(SetFunctionOracle):
    """
    Caching wrapper. ``calls`` counts only underlying evaluations, so
    repeated queries of the same set are free.
    """

    def __init__(self, inner: SetFunctionOracle):
        super().__init__(inner.universe)
        self.inner = inner
        self.symmetric = inner.symmetric
        self.defined_on_trivial_sets = inner.defined_on_trivial_sets
        self._cache: Dict[int, Value] = {}

    def evaluate_mask(self, members: int) -> Value:
        value = self._cache.get(members)
        if value is None:
            self.calls += 1
            value = self._value(members)
            self._cache[members] = value
        return value

    def _value(self, members: int) -> Value:
        return self.inner.evaluate_mask(members)

    def clear(self) -> None:
        self._cache.clear()


def with_counter(f: SetFunctionOracle) -> CountingOracle:
    """Wrap ``f`` with a fresh call counter."""
    return CountingOracle(f)


def memoized(f: SetFunctionOracle) -> MemoizedOracle:
    """Wrap ``f`` with a memoizing layer that counts only cache misses."""
    return MemoizedOracle(f)


class SetFamilyOracle(ABC):
    """A family of subsets of V given by a membership oracle."""

    def __init__(self, universe: GroundSet):
        self.universe = universe

    @abstractmethod
    def _contains(self, members: int) -> bool:
        """Membership of the subset with the given bitmask."""

    def contains(self, subset: Subset) -> bool:
        if subset.universe_size != self.universe.n:
            raise ValueError(
                f"Subset over {subset.universe_size} elements passed to a "
                f"family over {self.universe.n}"
            )
        return self._contains(subset.members)

    def contains_mask(self, members: int) -> bool:
        return self._contains(members)

    def __contains__(self, subset: Subset) -> bool:
        return self.contains(subset)


class HereditaryFamilyOracle(SetFamilyOracle):
    """
    A downward-closed family. Subclasses set their fields before calling
    ``super().__init__`` so the empty-set check can run at construction.
    """

    def __init__(self, universe: GroundSet):
        super().__init__(universe)
        if not self._contains(0):
            raise DegenerateFamilyError(
                f"{type(self).__name__} does not contain the empty set"
            )


class CoHereditaryFamilyOracle(SetFamilyOracle):
    """An upward-closed family (closed under supersets, hence under union)."""

    def __init__(self, universe: GroundSet):
        super().__init__(universe)
        if not self._contains(universe.full_mask):
            raise DegenerateFamilyError(
                f"{type(self).__name__} does not contain the whole ground set"
            )
