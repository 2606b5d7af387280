"""Set functions derived from other set functions."""

from fractions import Fraction
from typing import List, Sequence

from ..core.oracles import SetFunctionOracle
from ..core.subsets import GroundSet, Subset, iter_bits
from ..core.values import RationalLike, Value, to_value


class ModularOffsetFunction(SetFunctionOracle):
    """g(S) = f(S) + sum of w(v) over v in S."""

    # Posimodular when f is symmetric submodular and w >= 0, but not symmetric.
    symmetric = False

    def __init__(self, base: SetFunctionOracle, weights: Sequence[RationalLike]):
        if len(weights) != base.universe.n:
            raise ValueError(
                f"Expected {base.universe.n} modular weights, got {len(weights)}"
            )
        self.base = base
        self.weights: List[Value] = [to_value(w) for w in weights]
        self.defined_on_trivial_sets = base.defined_on_trivial_sets
        super().__init__(base.universe)

    def _value(self, members: int) -> Value:
        offset = sum((self.weights[i] for i in iter_bits(members)), Fraction(0))
        return self.base.evaluate_mask(members) + offset


def add_modular(
    f: SetFunctionOracle, weights: Sequence[RationalLike]
) -> ModularOffsetFunction:
    """Add the modular function with per-element weights to ``f``."""
    return ModularOffsetFunction(f, weights)


def _sub_universe(parent: GroundSet, part: Subset) -> GroundSet:
    labels = None
    if parent.labels:
        labels = tuple(parent.labels[i] for i in part)
    return GroundSet(len(part), labels)


class _SubUniverseFunction(SetFunctionOracle):
    """Base for functions living on a nonempty part T of h's ground set."""

    symmetric = False

    def __init__(self, h: SetFunctionOracle, part: Subset):
        if part.universe_size != h.universe.n:
            raise ValueError("Part is not a subset of the function's ground set")
        if not part:
            raise ValueError("Part must be nonempty")
        self.h = h
        self.part = part
        self.positions = part.indices()
        super().__init__(_sub_universe(h.universe, part))

    def embed(self, members: int) -> int:
        """Map a mask over the part to a mask over h's ground set."""
        mask = 0
        for local in iter_bits(members):
            mask |= 1 << self.positions[local]
        return mask


class RestrictedFunction(_SubUniverseFunction):
    """The restriction h|T minus a constant: f(X) = h(X) - offset for X within T."""

    def __init__(self, h: SetFunctionOracle, part: Subset, offset: RationalLike = 0):
        super().__init__(h, part)
        self.offset = to_value(offset)

    def _value(self, members: int) -> Value:
        return self.h.evaluate_mask(self.embed(members)) - self.offset


class ContractedFunction(_SubUniverseFunction):
    """The contraction h/T: f(Y) = h(Y | (V - T)) - h(V - T) for Y within T."""

    def __init__(self, h: SetFunctionOracle, part: Subset):
        super().__init__(h, part)
        self.outside = h.universe.full_mask & ~part.members
        self.base_value = h.evaluate_mask(self.outside)

    def _value(self, members: int) -> Value:
        inside = self.h.evaluate_mask(self.embed(members) | self.outside)
        return inside - self.base_value


def restricted_function(
    h: SetFunctionOracle, part: Subset, offset: RationalLike = 0
) -> RestrictedFunction:
    return RestrictedFunction(h, part, offset)


def contracted_function(h: SetFunctionOracle, part: Subset) -> ContractedFunction:
    return ContractedFunction(h, part)
