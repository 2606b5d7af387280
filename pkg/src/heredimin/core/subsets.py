"""Ground sets and bitmask subsets."""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple


def popcount(mask: int) -> int:
    """Number of set bits in a nonnegative mask."""
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with the given indices set."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class Subset:
    """A subset of a ground set ``{0, ..., universe_size - 1}`` stored as a bitmask."""

    universe_size: int
    members: int = 0

    def __post_init__(self):
        if self.members < 0 or self.members >> self.universe_size:
            raise ValueError(
                f"Subset mask {self.members:#x} references indices outside "
                f"a universe of size {self.universe_size}"
            )

    @classmethod
    def of(cls, universe_size: int, indices: Iterable[int]) -> "Subset":
        """Build a subset from element indices."""
        return cls(universe_size, mask_of(indices))

    def _check(self, other: "Subset") -> None:
        if self.universe_size != other.universe_size:
            raise ValueError(
                f"Subsets over different universes ({self.universe_size} "
                f"and {other.universe_size})"
            )

    @property
    def full_mask(self) -> int:
        return (1 << self.universe_size) - 1

    def union(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe_size, self.members | other.members)

    def intersection(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe_size, self.members & other.members)

    def difference(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe_size, self.members & ~other.members)

    def complement(self) -> "Subset":
        return Subset(self.universe_size, self.full_mask ^ self.members)

    def issubset(self, other: "Subset") -> bool:
        self._check(other)
        return self.members & ~other.members == 0

    def isdisjoint(self, other: "Subset") -> bool:
        self._check(other)
        return self.members & other.members == 0

    def add(self, index: int) -> "Subset":
        return Subset(self.universe_size, self.members | (1 << index))

    def remove(self, index: int) -> "Subset":
        return Subset(self.universe_size, self.members & ~(1 << index))

    def resize(self, universe_size: int) -> "Subset":
        """The same members viewed in a universe of another size."""
        return Subset(universe_size, self.members)

    def indices(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.members))

    def is_empty(self) -> bool:
        return self.members == 0

    def is_full(self) -> bool:
        return self.members == self.full_mask

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def __lt__(self, other: "Subset") -> bool:
        return self.issubset(other) and self.members != other.members

    def __invert__(self) -> "Subset":
        return self.complement()

    def __contains__(self, index: int) -> bool:
        return bool((self.members >> index) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.members)

    def __len__(self) -> int:
        return popcount(self.members)

    def __bool__(self) -> bool:
        return self.members != 0

    def __repr__(self) -> str:
        return f"Subset({{{', '.join(str(i) for i in self)}}}/{self.universe_size})"


@dataclass(frozen=True)
class GroundSet:
    """A finite ground set of ``n`` elements with optional display labels."""

    n: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("A ground set needs at least one element")
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.n:
                raise ValueError(
                    f"Expected {self.n} labels, got {len(labels)}"
                )
            if len(set(labels)) != self.n:
                raise ValueError("Labels must be distinct")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def full(self) -> Subset:
        return Subset(self.n, self.full_mask)

    def empty(self) -> Subset:
        return Subset(self.n, 0)

    def subset(self, indices: Iterable[int]) -> Subset:
        return Subset.of(self.n, indices)

    def singleton(self, index: int) -> Subset:
        return Subset(self.n, 1 << index)

    def subsets(self) -> Iterator[Subset]:
        """All ``2**n`` subsets in increasing mask order."""
        for mask in range(1 << self.n):
            yield Subset(self.n, mask)

    def label(self, index: int) -> str:
        if self.labels:
            return self.labels[index]
        return str(index)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"Unknown element label: {label}")

    def names(self, subset: Subset) -> Tuple[str, ...]:
        return tuple(self.label(i) for i in subset)
