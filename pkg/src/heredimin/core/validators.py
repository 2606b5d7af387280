"""
Exhaustive validators for the structural properties the solver assumes.

These are verification tools: they enumerate all of 2^V (or pairs of
subsets) and are guarded by an enumeration cap taken from the
configuration key "validation.enumeration_cap" unless given explicitly.
"""

import logging
from typing import List, Optional

from ..config import get_config
from .errors import EnumerationCapError
from .oracles import SetFamilyOracle, SetFunctionOracle
from .values import Value

logger = logging.getLogger(__name__)


def resolve_cap(size: int, cap: Optional[int] = None) -> int:
    """Raise EnumerationCapError when ``size`` exceeds the cap."""
    if cap is None:
        cap = get_config().enumeration_cap()
    if size > cap:
        raise EnumerationCapError(size, cap)
    return cap


def tabulate(f: SetFunctionOracle, cap: Optional[int] = None) -> List[Value]:
    """Values of ``f`` on every subset, indexed by bitmask."""
    resolve_cap(f.universe.n, cap)
    return [f.evaluate_mask(mask) for mask in range(1 << f.universe.n)]


def _membership(family: SetFamilyOracle, cap: Optional[int]) -> List[bool]:
    resolve_cap(family.universe.n, cap)
    return [family.contains_mask(mask) for mask in range(1 << family.universe.n)]


def validate_symmetric(f: SetFunctionOracle, cap: Optional[int] = None) -> bool:
    """True iff f(A) = f(V \\ A) for every A."""
    values = tabulate(f, cap)
    full = f.universe.full_mask
    for mask in range(len(values)):
        if values[mask] != values[full ^ mask]:
            logger.debug(f"Symmetry fails at mask {mask:#x}")
            return False
    return True


def validate_crossing_submodular(
    f: SetFunctionOracle, cap: Optional[int] = None
) -> bool:
    """
    True iff f(A | B) + f(A & B) <= f(A) + f(B) for every crossing pair,
    i.e. A - B, B - A, A & B and V - (A | B) all nonempty.
    """
    values = tabulate(f, cap)
    full = f.universe.full_mask
    size = len(values)
    for a in range(size):
        for b in range(a + 1, size):
            if not (a & ~b and b & ~a and a & b and full & ~(a | b)):
                continue
            if values[a | b] + values[a & b] > values[a] + values[b]:
                logger.debug(f"Crossing submodularity fails at {a:#x}, {b:#x}")
                return False
    return True


def validate_submodular(f: SetFunctionOracle, cap: Optional[int] = None) -> bool:
    """
    True iff f(A | B) + f(A & B) <= f(A) + f(B) for every pair.

    For functions undefined on the empty set and V, pairs touching either
    are skipped.
    """
    values = tabulate(f, cap)
    full = f.universe.full_mask
    size = len(values)
    trivial = (0, full)
    for a in range(size):
        for b in range(a + 1, size):
            if not f.defined_on_trivial_sets and (
                a in trivial or b in trivial or (a | b) == full or (a & b) == 0
            ):
                continue
            if values[a | b] + values[a & b] > values[a] + values[b]:
                logger.debug(f"Submodularity fails at {a:#x}, {b:#x}")
                return False
    return True


def validate_intersecting_posimodular(
    f: SetFunctionOracle, cap: Optional[int] = None
) -> bool:
    """
    True iff f(A - B) + f(B - A) <= f(A) + f(B) for every intersecting pair,
    i.e. A & B, A - B and B - A all nonempty.
    """
    values = tabulate(f, cap)
    full = f.universe.full_mask
    size = len(values)
    for a in range(size):
        for b in range(a + 1, size):
            if not (a & b and a & ~b and b & ~a):
                continue
            if not f.defined_on_trivial_sets and full in (a, b):
                continue
            if values[a & ~b] + values[b & ~a] > values[a] + values[b]:
                logger.debug(f"Posimodularity fails at {a:#x}, {b:#x}")
                return False
    return True


def validate_hereditary(family: SetFamilyOracle, cap: Optional[int] = None) -> bool:
    """True iff the family is downward closed."""
    members = _membership(family, cap)
    for mask, inside in enumerate(members):
        if not inside:
            continue
        # Closure under single-element removal implies closure under subsets.
        rest = mask
        while rest:
            low = rest & -rest
            if not members[mask ^ low]:
                logger.debug(f"{mask ^ low:#x} missing below member {mask:#x}")
                return False
            rest ^= low
    return True


def validate_co_hereditary(
    family: SetFamilyOracle, cap: Optional[int] = None
) -> bool:
    """True iff the family is upward closed."""
    members = _membership(family, cap)
    full = family.universe.full_mask
    for mask, inside in enumerate(members):
        if not inside:
            continue
        rest = full & ~mask
        while rest:
            low = rest & -rest
            if not members[mask | low]:
                logger.debug(f"{mask | low:#x} missing above member {mask:#x}")
                return False
            rest ^= low
    return True
