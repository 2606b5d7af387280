"""Parsing, building and serializing instance files and solve reports."""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Union

import pydantic

from ..core.errors import HerediminError
from ..core.oracles import HereditaryFamilyOracle, SetFunctionOracle
from ..core.subsets import GroundSet
from ..families import (
    CardinalityFamily,
    ExcludeElementFamily,
    ForbiddenSubsetsFamily,
    GraphicMatroidFamily,
    IntersectionFamily,
    KnapsackFamily,
    PartitionMatroidFamily,
    UniformMatroidFamily,
)
from ..functions import (
    ExplicitTable,
    WeightedGraph,
    WeightedHypergraph,
    add_modular,
    boundary_function,
    graph_cut,
    hypergraph_cut,
    shortest_path_distance_map,
    table_function,
)
from .schemas import (
    CardinalitySchema,
    DistanceBoundarySchema,
    ExcludeSchema,
    ForbiddenSchema,
    GraphCutSchema,
    HypergraphCutSchema,
    InstanceFile,
    IntersectionSchema,
    KnapsackSchema,
    MatroidSchema,
    ModularOffsetSchema,
    SolveReport,
    TableSchema,
)

logger = logging.getLogger(__name__)


class ValidationError(HerediminError):
    """Invalid instance file or report."""

    pass


@dataclass
class Instance:
    """A built instance: the oracles an instance file describes."""

    universe: GroundSet
    function: SetFunctionOracle
    family: HereditaryFamilyOracle
    model: InstanceFile


def _format_pydantic_error(error: pydantic.ValidationError) -> str:
    errors = error.errors()
    # Union members whose "type" tag does not match only add noise: their
    # tag mismatches and, when anything else failed, their missing fields.
    relevant = [e for e in errors if e["type"] != "value_error.const"] or errors
    specific = [e for e in relevant if e["type"] != "value_error.missing"]
    relevant = specific or relevant
    lines = []
    for e in relevant:
        location = ".".join(str(part) for part in e["loc"])
        line = f"{location}: {e['msg']}"
        if line not in lines:
            lines.append(line)
    return "; ".join(lines)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(
            f"Invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        )


def parse_instance_text(text: str) -> InstanceFile:
    """Validate instance JSON text against the schema."""
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ValidationError("An instance file must contain a JSON object")
    try:
        return InstanceFile(**data)
    except pydantic.ValidationError as e:
        raise ValidationError(_format_pydantic_error(e))


def load_instance(path: Union[str, Path]) -> InstanceFile:
    """Read and validate an instance file."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ValidationError(f"Cannot read {path}: {e}")
    return parse_instance_text(text)


def parse_report_text(text: str) -> SolveReport:
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ValidationError("A report must contain a JSON object")
    try:
        report = SolveReport(**data)
    except pydantic.ValidationError as e:
        raise ValidationError(_format_pydantic_error(e))
    return report


def load_report(path: Union[str, Path]) -> SolveReport:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ValidationError(f"Cannot read {path}: {e}")
    return parse_report_text(text)


def _graph(n: int, edges: List[Any]) -> WeightedGraph:
    return WeightedGraph.from_edges(n, edges)


def _build_graph_cut(spec: GraphCutSchema, universe: GroundSet) -> SetFunctionOracle:
    return graph_cut(_graph(universe.n, spec.edges), universe)


def _build_hypergraph_cut(
    spec: HypergraphCutSchema, universe: GroundSet
) -> SetFunctionOracle:
    hypergraph = WeightedHypergraph(
        universe.n, [(edge.members, edge.w) for edge in spec.hyperedges]
    )
    return hypergraph_cut(hypergraph, universe)


def _build_table(spec: TableSchema, universe: GroundSet) -> SetFunctionOracle:
    return table_function(ExplicitTable.from_values(universe.n, spec.values), universe)


def _build_modular_offset(
    spec: ModularOffsetSchema, universe: GroundSet
) -> SetFunctionOracle:
    return add_modular(build_function(spec.base, universe), spec.weights)


def _build_distance_boundary(
    spec: DistanceBoundarySchema, universe: GroundSet
) -> SetFunctionOracle:
    distance_map = shortest_path_distance_map(_graph(universe.n, spec.edges), universe)
    return boundary_function(distance_map)


FUNCTION_BUILDERS: Dict[type, Callable[[Any, GroundSet], SetFunctionOracle]] = {
    GraphCutSchema: _build_graph_cut,
    HypergraphCutSchema: _build_hypergraph_cut,
    TableSchema: _build_table,
    ModularOffsetSchema: _build_modular_offset,
    DistanceBoundarySchema: _build_distance_boundary,
}


def _build_matroid(spec: MatroidSchema, universe: GroundSet) -> HereditaryFamilyOracle:
    if spec.kind == "uniform":
        return UniformMatroidFamily(universe, spec.k)
    if spec.kind == "partition":
        return PartitionMatroidFamily(universe, spec.blocks, spec.capacities)
    return GraphicMatroidFamily(universe, spec.vertex_count, spec.edges)


def _build_knapsack(
    spec: KnapsackSchema, universe: GroundSet
) -> HereditaryFamilyOracle:
    budget = spec.budget if spec.budget is not None else 1
    return KnapsackFamily(universe, spec.weights, budget)


FAMILY_BUILDERS: Dict[type, Callable[[Any, GroundSet], HereditaryFamilyOracle]] = {
    CardinalitySchema: lambda spec, universe: CardinalityFamily(universe, spec.k),
    KnapsackSchema: _build_knapsack,
    MatroidSchema: _build_matroid,
    ForbiddenSchema: lambda spec, universe: ForbiddenSubsetsFamily(
        universe, spec.obstructions
    ),
    ExcludeSchema: lambda spec, universe: ExcludeElementFamily(universe, spec.s),
    IntersectionSchema: lambda spec, universe: IntersectionFamily(
        [build_family(part, universe) for part in spec.parts]
    ),
}


def build_function(spec: Any, universe: GroundSet) -> SetFunctionOracle:
    """Build the value oracle a function schema describes."""
    try:
        return FUNCTION_BUILDERS[type(spec)](spec, universe)
    except (ValueError, TypeError) as e:
        raise ValidationError(f"function ({spec.type}): {e}")


def build_family(spec: Any, universe: GroundSet) -> HereditaryFamilyOracle:
    """Build the membership oracle a family schema describes."""
    try:
        return FAMILY_BUILDERS[type(spec)](spec, universe)
    except (ValueError, TypeError) as e:
        raise ValidationError(f"family ({spec.type}): {e}")


def build_instance(model: InstanceFile) -> Instance:
    labels = model.ground_set.labels
    universe = GroundSet(model.ground_set.n, tuple(labels) if labels else None)
    function = build_function(model.function, universe)
    family = build_family(model.family, universe)
    logger.debug(
        f"Built {type(function).__name__} and {type(family).__name__} "
        f"on {universe.n} elements"
    )
    return Instance(universe, function, family, model)


def serialize_instance(model: InstanceFile) -> str:
    """Canonical JSON form of an instance file."""
    return json.dumps(model.dict(exclude_none=True), indent=2) + "\n"


def serialize_report(report: SolveReport) -> str:
    return json.dumps(report.dict(exclude_none=True), indent=2) + "\n"
