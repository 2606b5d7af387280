import json
from fractions import Fraction

import pytest

from ..core.errors import DisconnectedGraphError
from ..core.subsets import Subset
from .handlers import (
    ValidationError,
    build_instance,
    load_instance,
    parse_instance_text,
    parse_report_text,
    serialize_instance,
    serialize_report,
)
from .schemas import IntersectionSchema


def _text(function=None, family=None, ground_set=None):
    return json.dumps(
        {
            "ground_set": ground_set or {"n": 3, "labels": ["a", "b", "c"]},
            "function": function
            or {"type": "graph_cut", "edges": [[0, 1, 1], [1, 2, "1/2"]]},
            "family": family or {"type": "cardinality", "k": 2},
        }
    )


def _report(**fields):
    data = {
        "algorithm": "find_minimals",
        "adapter": "queyranne",
        "value": "1",
        "sets": [["a"], ["c"]],
        "oracle_calls": 3,
        "wall_time_ms": 0.1,
    }
    data.update(fields)
    return json.dumps({k: v for k, v in data.items() if v is not None})


def test_parse_instance_valid():
    """Test parsing a labeled graph cut instance."""
    instance = build_instance(parse_instance_text(_text()))
    assert instance.universe.labels == ("a", "b", "c")
    assert instance.function(Subset.of(3, [2])) == Fraction(1, 2)
    assert instance.family.contains(Subset.of(3, [0, 1]))


def test_parse_instance_reports_json_position():
    with pytest.raises(ValidationError) as excinfo:
        parse_instance_text('{\n  "ground_set": }')
    assert "line 2" in str(excinfo.value)


def test_parse_instance_rejects_non_objects():
    with pytest.raises(ValidationError):
        parse_instance_text("[1, 2]")


def test_parse_instance_rejects_floats():
    """Test that weights must be integers or "p/q" strings."""
    with pytest.raises(ValidationError):
        parse_instance_text(
            _text(function={"type": "graph_cut", "edges": [[0, 1, 0.5]]})
        )


def test_parse_instance_missing_field():
    data = json.loads(_text())
    del data["family"]
    with pytest.raises(ValidationError) as excinfo:
        parse_instance_text(json.dumps(data))
    assert "family" in str(excinfo.value)


def test_parse_instance_unknown_type():
    with pytest.raises(ValidationError):
        parse_instance_text(_text(function={"type": "matrix"}))


def test_parse_instance_bad_labels():
    with pytest.raises(ValidationError):
        parse_instance_text(_text(ground_set={"n": 3, "labels": ["a", "a", "b"]}))
    with pytest.raises(ValidationError):
        parse_instance_text(_text(ground_set={"n": 3, "labels": ["a"]}))


def test_matroid_needs_kind_fields():
    """Test a partition matroid without capacities."""
    family = {"type": "matroid", "kind": "partition", "blocks": [[0, 1], [2]]}
    with pytest.raises(ValidationError) as excinfo:
        parse_instance_text(_text(family=family))
    assert "capacities" in str(excinfo.value)


def test_matroid_rejects_unknown_kind():
    with pytest.raises(ValidationError):
        parse_instance_text(_text(family={"type": "matroid", "kind": "vector"}))


def test_build_rejects_out_of_range_edges():
    model = parse_instance_text(
        _text(function={"type": "graph_cut", "edges": [[0, 5, 1]]})
    )
    with pytest.raises(ValidationError) as excinfo:
        build_instance(model)
    assert "graph_cut" in str(excinfo.value)


def test_build_rejects_disconnected_distance_graph():
    model = parse_instance_text(
        _text(function={"type": "distance_boundary", "edges": [[0, 1, 1]]})
    )
    with pytest.raises(DisconnectedGraphError):
        build_instance(model)


def test_build_every_family():
    families = [
        {"type": "knapsack", "weights": ["1/2", "1/2", "3/4"]},
        {"type": "matroid", "kind": "uniform", "k": 1},
        {
            "type": "matroid",
            "kind": "partition",
            "blocks": [[0], [1, 2]],
            "capacities": [1, 1],
        },
        {
            "type": "matroid",
            "kind": "graphic",
            "vertex_count": 3,
            "edges": [[0, 1], [1, 2], [2, 0]],
        },
        {"type": "forbidden", "obstructions": [[0, 1]]},
        {"type": "exclude", "s": 1},
        {
            "type": "intersection",
            "parts": [{"type": "cardinality", "k": 2}, {"type": "exclude", "s": 0}],
        },
    ]
    for family in families:
        instance = build_instance(parse_instance_text(_text(family=family)))
        assert not instance.family.contains(instance.universe.full())


def test_build_modular_offset_and_table():
    offset = {
        "type": "modular_offset",
        "base": {"type": "graph_cut", "edges": [[0, 1, 1]]},
        "weights": [1, 0, 0],
    }
    instance = build_instance(parse_instance_text(_text(function=offset)))
    assert instance.function(Subset.of(3, [0])) == 2
    assert not instance.function.symmetric

    table = {"type": "table", "values": [0, 1, 1, 1, 1, 1, 1, 0]}
    instance = build_instance(parse_instance_text(_text(function=table)))
    assert instance.function(Subset.of(3, [1, 2])) == 1
    assert instance.function.symmetric

    skewed = {"type": "table", "values": [0, 1, 1, 1, 1, 1, 1, 1]}
    instance = build_instance(parse_instance_text(_text(function=skewed)))
    assert not instance.function.symmetric


def test_serialize_instance_is_canonical(tmp_path):
    path = tmp_path / "instance.json"
    path.write_text(_text())
    model = load_instance(path)
    text = serialize_instance(model)
    assert serialize_instance(parse_instance_text(text)) == text
    assert '"1/2"' in text


def test_load_instance_missing_file(tmp_path):
    with pytest.raises(ValidationError):
        load_instance(tmp_path / "nothing.json")


def test_parse_report():
    report = parse_report_text(_report())
    assert report.sets == [["a"], ["c"]]
    assert json.loads(serialize_report(report))["value"] == "1"


def test_report_needs_exactly_one_result():
    with pytest.raises(ValidationError):
        parse_report_text(_report(set=["a"]))
    with pytest.raises(ValidationError):
        parse_report_text(_report(sets=None))


def test_report_value_must_be_rational():
    with pytest.raises(ValidationError):
        parse_report_text(_report(value="one"))


def test_schema_bounds_are_enforced():
    """Test the integer bounds and the nonempty intersection."""
    assert set(IntersectionSchema.__fields__) == {"type", "parts"}
    for ground_set in ({"n": 0}, {"n": "3"}, {"n": True}):
        with pytest.raises(ValidationError):
            parse_instance_text(_text(ground_set=ground_set))
    for family in (
        {"type": "cardinality", "k": -1},
        {"type": "exclude", "s": -2},
        {"type": "intersection", "parts": []},
    ):
        with pytest.raises(ValidationError):
            parse_instance_text(_text(family=family))

    nested = {"type": "intersection", "parts": [{"type": "exclude", "s": 2}]}
    instance = build_instance(parse_instance_text(_text(family=nested)))
    assert not instance.family.contains(Subset.of(3, [2]))
