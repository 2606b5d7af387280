"""Hereditary family oracles and the combinators the reductions need."""

from .basic import (
    CallbackFamily,
    CardinalityFamily,
    CoComplementFamily,
    ComplementFamily,
    ExcludeElementFamily,
    ForbiddenSubsetsFamily,
    IntersectionFamily,
    KnapsackFamily,
    MinimumCardinalityFamily,
    SupersetFamily,
    complement_family,
    loops_of,
    matching_family,
    triangle_free_family,
)
from .matroids import (
    GraphicMatroidFamily,
    MatroidFamily,
    PartitionMatroidFamily,
    UniformMatroidFamily,
)

__all__ = [
    "CallbackFamily",
    "CardinalityFamily",
    "CoComplementFamily",
    "ComplementFamily",
    "ExcludeElementFamily",
    "ForbiddenSubsetsFamily",
    "GraphicMatroidFamily",
    "IntersectionFamily",
    "KnapsackFamily",
    "MatroidFamily",
    "MinimumCardinalityFamily",
    "PartitionMatroidFamily",
    "SupersetFamily",
    "UniformMatroidFamily",
    "complement_family",
    "loops_of",
    "matching_family",
    "triangle_free_family",
]
