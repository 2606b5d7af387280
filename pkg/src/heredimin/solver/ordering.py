"""Legal orders, max-back orders and pendant pairs over a contracted system."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from ..core.errors import AdapterError, OrderingError
from ..core.oracles import SetFunctionOracle
from ..core.values import Value
from ..functions.distances import CountingDistanceMap, DistanceMap
from .contraction import ContractedSystem

logger = logging.getLogger(__name__)

ADAPTER_NAMES = ("auto", "queyranne", "rizzi")


@dataclass
class LegalOrder:
    """An ordering of the current elements together with the greedy keys."""

    sequence: List[int]
    # keys[i] is the key that selected sequence[i]; None for the first element.
    keys: List[Optional[Value]] = field(default_factory=list)

    @property
    def pendant_pair(self) -> Tuple[int, int]:
        if len(self.sequence) < 2:
            raise OrderingError("A pendant pair needs at least two elements")
        return self.sequence[-2], self.sequence[-1]


def _start(system: ContractedSystem, first: int) -> List[int]:
    elements = system.elements()
    if first not in elements:
        raise OrderingError(f"Start element {first} is not a current element")
    return [v for v in elements if v != first]


def legal_order(system: ContractedSystem, first: int) -> LegalOrder:
    """
    Queyranne's order: repeatedly append the element v minimizing
    f'(W + v) - f'({v}), ties going to the smallest id.

    Singleton values are evaluated once per order, so an order over m
    elements costs at most m(m+1)/2 + m underlying evaluations.
    """
    remaining = _start(system, first)
    singles: Dict[int, Value] = {
        v: system.evaluate_mask(system.block(v)) for v in remaining
    }

    placed = system.block(first)
    order = LegalOrder([first], [None])
    while remaining:
        best = remaining[0]
        best_key = system.evaluate_mask(placed | system.block(best)) - singles[best]
        for v in remaining[1:]:
            key = system.evaluate_mask(placed | system.block(v)) - singles[v]
            if key < best_key:
                best, best_key = v, key
        remaining.remove(best)
        placed |= system.block(best)
        order.sequence.append(best)
        order.keys.append(best_key)
    return order


def max_back_order(
    system: ContractedSystem, distance_map: DistanceMap, first: int
) -> LegalOrder:
    """
    Max-back order for a boundary function f(S) = d(S, V - S): repeatedly
    append the element v maximizing d(X_W, X_v), ties going to the
    smallest id.
    """
    remaining = _start(system, first)

    placed = system.block(first)
    order = LegalOrder([first], [None])
    while remaining:
        best = remaining[0]
        best_key = distance_map.distance_mask(placed, system.block(best))
        for v in remaining[1:]:
            key = distance_map.distance_mask(placed, system.block(v))
            if key > best_key:
                best, best_key = v, key
        remaining.remove(best)
        placed |= system.block(best)
        order.sequence.append(best)
        order.keys.append(best_key)
    return order


class AdmissibleFunctionAdapter(ABC):
    """Produces orders whose last two elements form a pendant pair."""

    name = "adapter"

    @abstractmethod
    def order(self, system: ContractedSystem, first: int) -> LegalOrder:
        """Order the current elements of ``system`` starting from ``first``."""

    @property
    def calls(self) -> int:
        """Oracle queries issued outside the value oracle of the system."""
        return 0


class QueyranneAdapter(AdmissibleFunctionAdapter):
    """Legal orders of a symmetric crossing submodular function."""

    name = "queyranne"

    def order(self, system: ContractedSystem, first: int) -> LegalOrder:
        return legal_order(system, first)


class RizziAdapter(AdmissibleFunctionAdapter):
    """Max-back orders of the distance map behind a boundary function."""

    name = "rizzi"

    def __init__(self, distance_map: DistanceMap):
        self.distance_map = CountingDistanceMap(distance_map)

    def order(self, system: ContractedSystem, first: int) -> LegalOrder:
        return max_back_order(system, self.distance_map, first)

    @property
    def calls(self) -> int:
        return self.distance_map.calls


def make_adapter(name: str, f: SetFunctionOracle) -> AdmissibleFunctionAdapter:
    """
    Build the adapter called ``name`` for ``f``.

    "auto" picks rizzi when ``f`` is a boundary function of a distance map
    and queyranne otherwise.
    """
    distance_map = getattr(f, "distance_map", None)
    if name == "auto":
        name = "rizzi" if distance_map is not None else "queyranne"
    if name == "queyranne":
        return QueyranneAdapter()
    if name == "rizzi":
        if distance_map is None:
            raise AdapterError(
                f"The rizzi adapter needs a distance-map boundary function, "
                f"got {type(f).__name__}"
            )
        return RizziAdapter(distance_map)
    raise AdapterError(
        f"Unknown adapter '{name}'. Choose from {', '.join(ADAPTER_NAMES)}"
    )


def resolve_adapter(
    adapter: Union[None, str, AdmissibleFunctionAdapter],
    f: SetFunctionOracle,
    default: str = "auto",
) -> AdmissibleFunctionAdapter:
    if isinstance(adapter, AdmissibleFunctionAdapter):
        return adapter
    return make_adapter(adapter or default, f)


def pendant_pair(
    system: ContractedSystem,
    avoid: Optional[int] = None,
    adapter: Optional[AdmissibleFunctionAdapter] = None,
) -> Tuple[int, int]:
    """
    Last two elements of an order starting at ``avoid``, or at the smallest
    current element when nothing is avoided.
    """
    elements = system.elements()
    if len(elements) < 2:
        raise OrderingError("A pendant pair needs at least two current elements")
    if avoid is not None and len(elements) < 3:
        raise OrderingError(
            "A pendant pair avoiding an element needs at least three current elements"
        )
    first = elements[0] if avoid is None else avoid
    order = (adapter or QueyranneAdapter()).order(system, first)
    t, u = order.pendant_pair
    logger.debug(f"Pendant pair ({t}, {u}) from order {order.sequence}")
    return t, u
