from typing import List, Literal, Optional, Tuple, Union

from pydantic import (
    BaseModel,
    Field,
    StrictInt,
    StrictStr,
    conint,
    root_validator,
    validator,
)

from ..core.values import to_value


class Rational:
    """An integer or a "p/q" string; the raw form is kept for round-tripping."""

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def validate(cls, v):
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise TypeError("rational must be an integer or a 'p/q' string")
        to_value(v)
        return v


WeightedEdge = Tuple[StrictInt, StrictInt, Rational]


class GroundSetSchema(BaseModel):
    """Schema for the ground set."""

    n: conint(strict=True, ge=1)
    labels: Optional[List[StrictStr]] = None

    @validator("labels")
    def validate_labels(cls, v, values):
        if v is None:
            return v
        n = values.get("n")
        if n is not None and len(v) != n:
            raise ValueError(f"expected {n} labels, got {len(v)}")
        if len(set(v)) != len(v):
            raise ValueError("labels must be distinct")
        return v


class GraphCutSchema(BaseModel):
    type: Literal["graph_cut"]
    edges: List[WeightedEdge]


class HyperedgeSchema(BaseModel):
    members: List[StrictInt] = Field(..., min_items=2)
    w: Rational


class HypergraphCutSchema(BaseModel):
    type: Literal["hypergraph_cut"]
    hyperedges: List[HyperedgeSchema]


class TableSchema(BaseModel):
    type: Literal["table"]
    values: List[Rational]


class ModularOffsetSchema(BaseModel):
    type: Literal["modular_offset"]
    base: "FunctionSchema"
    weights: List[Rational]


class DistanceBoundarySchema(BaseModel):
    type: Literal["distance_boundary"]
    edges: List[WeightedEdge]


FunctionSchema = Union[
    GraphCutSchema,
    HypergraphCutSchema,
    TableSchema,
    ModularOffsetSchema,
    DistanceBoundarySchema,
]


class CardinalitySchema(BaseModel):
    type: Literal["cardinality"]
    k: conint(strict=True, ge=0)


class KnapsackSchema(BaseModel):
    type: Literal["knapsack"]
    weights: List[Rational]
    budget: Optional[Rational] = None


class MatroidSchema(BaseModel):
    """Uniform (k), partition (blocks, capacities) or graphic (vertex_count, edges)."""

    type: Literal["matroid"]
    kind: Literal["uniform", "partition", "graphic"]
    k: Optional[StrictInt] = None
    blocks: Optional[List[List[StrictInt]]] = None
    capacities: Optional[List[StrictInt]] = None
    vertex_count: Optional[StrictInt] = None
    edges: Optional[List[Tuple[StrictInt, StrictInt]]] = None

    @root_validator(skip_on_failure=True)
    def validate_kind_fields(cls, values):
        required = {
            "uniform": ("k",),
            "partition": ("blocks", "capacities"),
            "graphic": ("vertex_count", "edges"),
        }[values["kind"]]
        missing = [name for name in required if values.get(name) is None]
        if missing:
            raise ValueError(f"{values['kind']} matroid needs {', '.join(missing)}")
        return values


class ForbiddenSchema(BaseModel):
    type: Literal["forbidden"]
    obstructions: List[List[StrictInt]]


class ExcludeSchema(BaseModel):
    type: Literal["exclude"]
    s: conint(strict=True, ge=0)


class IntersectionSchema(BaseModel):
    type: Literal["intersection"]
    parts: List["FamilySchema"]

    @validator("parts")
    def validate_parts(cls, v):
        if not v:
            raise ValueError("an intersection needs at least one part")
        return v


FamilySchema = Union[
    CardinalitySchema,
    KnapsackSchema,
    MatroidSchema,
    ForbiddenSchema,
    ExcludeSchema,
    IntersectionSchema,
]

ModularOffsetSchema.update_forward_refs(FunctionSchema=FunctionSchema)
IntersectionSchema.update_forward_refs(FamilySchema=FamilySchema)


class InstanceFile(BaseModel):
    """Schema for a complete instance file."""

    ground_set: GroundSetSchema
    function: FunctionSchema
    family: FamilySchema


Label = Union[StrictStr, StrictInt]


class SolveReport(BaseModel):
    """Schema for the JSON report written by ``solve``."""

    algorithm: Literal["find_optimal", "find_minimals"]
    adapter: StrictStr
    value: StrictStr
    set: Optional[List[Label]] = None
    sets: Optional[List[List[Label]]] = None
    oracle_calls: StrictInt
    wall_time_ms: float

    @validator("value")
    def validate_value(cls, v):
        to_value(v)
        return v

    @root_validator(skip_on_failure=True)
    def validate_one_result(cls, values):
        if (values.get("set") is None) == (values.get("sets") is None):
            raise ValueError("a report carries exactly one of 'set' and 'sets'")
        return values
