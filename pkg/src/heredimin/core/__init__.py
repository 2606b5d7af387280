"""Ground sets, exact values, oracle interfaces and property validators."""

from .errors import (
    AdapterError,
    ContractionError,
    DegenerateFamilyError,
    DisconnectedGraphError,
    EnumerationCapError,
    HerediminError,
    InfeasibleError,
    InvariantError,
    OrderingError,
    TrivialFamilyError,
)
from .oracles import (
    CoHereditaryFamilyOracle,
    CountingOracle,
    HereditaryFamilyOracle,
    MemoizedOracle,
    SetFamilyOracle,
    SetFunctionOracle,
    memoized,
    with_counter,
)
from .subsets import GroundSet, Subset, iter_bits, mask_of, popcount
from .validators import (
    validate_co_hereditary,
    validate_crossing_submodular,
    validate_hereditary,
    validate_intersecting_posimodular,
    validate_submodular,
    validate_symmetric,
)
from .values import Value, encode_value, format_value, to_value

__all__ = [
    "AdapterError",
    "CoHereditaryFamilyOracle",
    "ContractionError",
    "CountingOracle",
    "DegenerateFamilyError",
    "DisconnectedGraphError",
    "EnumerationCapError",
    "GroundSet",
    "HereditaryFamilyOracle",
    "HerediminError",
    "InfeasibleError",
    "InvariantError",
    "MemoizedOracle",
    "OrderingError",
    "SetFamilyOracle",
    "SetFunctionOracle",
    "Subset",
    "TrivialFamilyError",
    "Value",
    "encode_value",
    "format_value",
    "iter_bits",
    "mask_of",
    "memoized",
    "popcount",
    "to_value",
    "validate_co_hereditary",
    "validate_crossing_submodular",
    "validate_hereditary",
    "validate_intersecting_posimodular",
    "validate_submodular",
    "validate_symmetric",
    "with_counter",
]
