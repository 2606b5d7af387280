import random
from itertools import combinations

import pytest

from heredimin.config import get_config
from heredimin.core import (
    EnumerationCapError,
    GroundSet,
    InfeasibleError,
    Subset,
    validate_hereditary,
    validate_symmetric,
)
from heredimin.families import CardinalityFamily
from heredimin.functions import WeightedGraph, graph_cut
from heredimin.reference import (
    FAMILY_CLASSES,
    FUNCTION_CLASSES,
    brute_force,
    compare_report_with_brute_force,
    compare_with_brute_force,
    random_instance,
    random_instance_spec,
)
from heredimin.validation import SolveReport, ValidationError, serialize_instance


def _report(**fields):
    base = {
        "algorithm": "find_minimals",
        "adapter": "queyranne",
        "value": "1",
        "oracle_calls": 10,
        "wall_time_ms": 0.5,
    }
    base.update(fields)
    return SolveReport(**base)


def test_brute_force_on_path(path_cut, abc):
    report = brute_force(path_cut, CardinalityFamily(abc, 2))
    assert report.min_value == 1
    assert set(report.minimizers) == {
        abc.subset([0]),
        abc.subset([2]),
        abc.subset([0, 1]),
        abc.subset([1, 2]),
    }
    assert set(report.minimal_minimizers) == {abc.subset([0]), abc.subset([2])}


def test_brute_force_on_empty_family(path_cut, abc):
    with pytest.raises(InfeasibleError):
        brute_force(path_cut, CardinalityFamily(abc, 0))


def test_brute_force_on_single_element():
    f = graph_cut(WeightedGraph(1))
    report = brute_force(f, CardinalityFamily(f.universe, 1))
    assert report.min_value == 0
    assert report.minimal_minimizers == [Subset.of(1, [0])]


def test_brute_force_skips_ground_set_of_boundary_functions(cycle4_boundary):
    universe = cycle4_boundary.universe
    report = brute_force(cycle4_boundary, CardinalityFamily(universe, 4))
    assert universe.full() not in report.minimizers


def test_brute_force_respects_cap():
    f = graph_cut(WeightedGraph(21))
    with pytest.raises(EnumerationCapError) as excinfo:
        brute_force(f, CardinalityFamily(f.universe, 1))
    assert excinfo.value.cap == 20

    with pytest.raises(EnumerationCapError):
        brute_force(
            graph_cut(WeightedGraph(4)), CardinalityFamily(GroundSet(4), 1), cap=3
        )


def test_brute_force_cap_cannot_exceed_twenty():
    get_config().set("reference.max_universe", 30)
    f = graph_cut(WeightedGraph(21))
    family = CardinalityFamily(f.universe, 1)
    with pytest.raises(EnumerationCapError) as excinfo:
        brute_force(f, family)
    assert excinfo.value.cap == 20

    with pytest.raises(EnumerationCapError):
        brute_force(f, family, cap=25)


def _scan_by_size(f, family):
    """Minimum and minimal minimizers, scanning element tuples by size."""
    n = f.universe.n
    top = n if f.defined_on_trivial_sets else n - 1
    feasible = []
    for size in range(top, 0, -1):
        for members in combinations(range(n), size):
            subset = Subset.of(n, members)
            if family.contains(subset):
                feasible.append((frozenset(members), f(subset)))
    best = min(value for _, value in feasible)
    optimal = [members for members, value in feasible if value == best]
    minimal = {m for m in optimal if not any(other < m for other in optimal)}
    return best, set(optimal), minimal


@pytest.mark.parametrize("batch", range(4))
def test_brute_force_agrees_with_size_scan(batch):
    """Compare brute_force with an independent scan on 25 instances per batch."""
    rng = random.Random(f"scan:{batch}")
    for _ in range(25):
        n = rng.randint(2, 8)
        function_class = rng.choice(FUNCTION_CLASSES)
        family_class = rng.choice(FAMILY_CLASSES)
        seed = rng.randrange(10**6)
        f, family = random_instance(seed, n, function_class, family_class)
        report = brute_force(f, family)
        best, optimal, minimal = _scan_by_size(f, family)
        assert report.min_value == best
        assert {frozenset(s) for s in report.minimizers} == optimal
        assert {frozenset(s) for s in report.minimal_minimizers} == minimal


def test_generators_are_deterministic():
    first = random_instance_spec(11, 6, "hypergraph", "partition")
    second = random_instance_spec(11, 6, "hypergraph", "partition")
    assert serialize_instance(first) == serialize_instance(second)
    assert serialize_instance(first) != serialize_instance(
        random_instance_spec(12, 6, "hypergraph", "partition")
    )


@pytest.mark.parametrize("family_class", FAMILY_CLASSES)
def test_generated_families_are_usable(family_class):
    """Test hereditary families that exclude V and admit a singleton."""
    for seed in range(5):
        _, family = random_instance(seed, 5, "graph", family_class)
        assert validate_hereditary(family)
        assert not family.contains(family.universe.full())
        assert any(family.contains(family.universe.singleton(v)) for v in range(5))


@pytest.mark.parametrize("function_class", FUNCTION_CLASSES)
def test_generated_functions(function_class):
    f, _ = random_instance(3, 5, function_class, "cardinality")
    assert f.universe.n == 5
    assert f.symmetric == (function_class != "modular")
    if function_class in ("graph", "hypergraph"):
        assert validate_symmetric(f)


def test_generators_reject_unknown_classes():
    with pytest.raises(ValueError):
        random_instance_spec(0, 4, "matrix", "cardinality")
    with pytest.raises(ValueError):
        random_instance_spec(0, 4, "graph", "lattice")
    with pytest.raises(ValueError):
        random_instance_spec(0, 1)


def test_compare_with_brute_force(path_cut, abc):
    result = compare_with_brute_force(path_cut, CardinalityFamily(abc, 2))
    assert result.match
    assert result.value == 1
    assert result.sets == [abc.subset([0]), abc.subset([2])]


def test_compare_report_with_brute_force(path_cut, abc):
    family = CardinalityFamily(abc, 2)
    good = _report(sets=[["a"], ["c"]])
    assert compare_report_with_brute_force(good, path_cut, family).match

    single = _report(algorithm="find_optimal", set=["c"])
    assert compare_report_with_brute_force(single, path_cut, family).match

    wrong = compare_report_with_brute_force(
        _report(value="2", sets=[["a"], ["b"]]), path_cut, family
    )
    assert not wrong.match
    assert any(d.startswith("value") for d in wrong.differences)
    assert any(d.startswith("minimal minimizers") for d in wrong.differences)

    not_minimal = _report(algorithm="find_optimal", set=["a", "b"])
    assert not compare_report_with_brute_force(not_minimal, path_cut, family).match


def test_compare_report_with_unknown_labels(path_cut, abc):
    with pytest.raises(ValidationError):
        compare_report_with_brute_force(
            _report(sets=[["z"]]), path_cut, CardinalityFamily(abc, 2)
        )
