"""Concrete set-function oracles: cuts, tables, modular offsets and distance maps."""

from .derived import (
    ContractedFunction,
    ModularOffsetFunction,
    RestrictedFunction,
    add_modular,
    contracted_function,
    restricted_function,
)
from .distances import (
    BoundaryFunction,
    CountingDistanceMap,
    DistanceMap,
    FunctionDistanceMap,
    ShortestPathDistanceMap,
    boundary_function,
    map_from_function,
    shortest_path_distance_map,
    validate_distance_map,
)
from .graphs import (
    GraphCutFunction,
    HypergraphCutFunction,
    WeightedGraph,
    WeightedHypergraph,
    graph_cut,
    hypergraph_cut,
)
from .tables import ExplicitTable, TableFunction, table_function

__all__ = [
    "BoundaryFunction",
    "ContractedFunction",
    "CountingDistanceMap",
    "DistanceMap",
    "ExplicitTable",
    "FunctionDistanceMap",
    "GraphCutFunction",
    "HypergraphCutFunction",
    "ModularOffsetFunction",
    "RestrictedFunction",
    "ShortestPathDistanceMap",
    "TableFunction",
    "WeightedGraph",
    "WeightedHypergraph",
    "add_modular",
    "boundary_function",
    "contracted_function",
    "graph_cut",
    "hypergraph_cut",
    "map_from_function",
    "restricted_function",
    "shortest_path_distance_map",
    "table_function",
    "validate_distance_map",
]
