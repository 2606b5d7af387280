"""Explicitly tabulated set functions."""

from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..core.oracles import SetFunctionOracle
from ..core.subsets import GroundSet
from ..core.values import RationalLike, Value, to_value

MAX_TABLE_UNIVERSE = 20


@dataclass
class ExplicitTable:
    """All 2^n values of a set function, indexed by bitmask."""

    universe_size: int
    values: List[Value]

    def __post_init__(self):
        if not 1 <= self.universe_size <= MAX_TABLE_UNIVERSE:
            raise ValueError(
                f"Table universe must have 1..{MAX_TABLE_UNIVERSE} elements, "
                f"got {self.universe_size}"
            )
        if len(self.values) != 1 << self.universe_size:
            raise ValueError(
                f"Table over {self.universe_size} elements needs "
                f"{1 << self.universe_size} values, got {len(self.values)}"
            )
        self.values = [to_value(v) for v in self.values]

    @property
    def is_symmetric(self) -> bool:
        """True iff the value of every mask equals that of its complement."""
        full = len(self.values) - 1
        return all(
            value == self.values[full ^ mask] for mask, value in enumerate(self.values)
        )

    @classmethod
    def from_values(
        cls, universe_size: int, values: Sequence[RationalLike]
    ) -> "ExplicitTable":
        return cls(universe_size, [to_value(v) for v in values])

    @classmethod
    def tabulate(cls, f: SetFunctionOracle) -> "ExplicitTable":
        """Record every value of ``f`` (2^n evaluations)."""
        n = f.universe.n
        return cls(n, [f.evaluate_mask(mask) for mask in range(1 << n)])


class TableFunction(SetFunctionOracle):
    """Lookup oracle over an ExplicitTable; symmetry is read off the table."""

    def __init__(self, table: ExplicitTable, universe: Optional[GroundSet] = None):
        self.table = table
        self.symmetric = table.is_symmetric
        super().__init__(universe or GroundSet(table.universe_size))

    def _value(self, members: int) -> Value:
        return self.table.values[members]


def table_function(
    table: ExplicitTable, universe: Optional[GroundSet] = None
) -> TableFunction:
    return TableFunction(table, universe)
