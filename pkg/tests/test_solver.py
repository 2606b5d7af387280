import random
from fractions import Fraction

import pytest

from heredimin.core import (
    GroundSet,
    InfeasibleError,
    Subset,
    TrivialFamilyError,
    with_counter,
)
from heredimin.families import (
    CardinalityFamily,
    ExcludeElementFamily,
    ForbiddenSubsetsFamily,
    KnapsackFamily,
)
from heredimin.functions import (
    ExplicitTable,
    WeightedGraph,
    graph_cut,
    table_function,
)
from heredimin.reference import (
    FAMILY_CLASSES,
    brute_force,
    compare_with_brute_force,
    random_instance,
)
from heredimin.solver import (
    QueyranneAdapter,
    find_minimals,
    find_optimal,
    unconstrained_min,
    unconstrained_minimals,
)


def test_find_optimal_on_path(path_cut, abc):
    """Test value 1 and a minimal optimal singleton at the end of the path."""
    solution = find_optimal(path_cut, CardinalityFamily(abc, 2), check_invariants=True)
    assert solution.value == 1
    assert solution.set in (abc.subset([0]), abc.subset([2]))
    assert solution.adapter == "queyranne"
    assert solution.oracle_calls > 0
    assert solution.candidates


def test_find_optimal_is_deterministic(path_cut, abc):
    first = find_optimal(path_cut, CardinalityFamily(abc, 2))
    second = find_optimal(path_cut, CardinalityFamily(abc, 2))
    assert first.set == second.set
    assert first.oracle_calls == second.oracle_calls


def test_find_optimal_on_triangle(triangle_cut):
    universe = triangle_cut.universe
    solution = find_optimal(triangle_cut, CardinalityFamily(universe, 1))
    assert solution.value == 2
    assert len(solution.set) == 1


def test_find_minimals_on_path(path_cut, abc):
    result = find_minimals(path_cut, CardinalityFamily(abc, 2), check_invariants=True)
    assert result.value == 1
    assert result.sets == [abc.subset([0]), abc.subset([2])]


def test_find_minimals_on_cycle(cycle4_cut):
    """Test that the four singletons are the minimal optima of the unit 4-cycle."""
    universe = cycle4_cut.universe
    result = find_minimals(cycle4_cut, CardinalityFamily(universe, 2))
    assert result.value == 2
    assert result.sets == [universe.singleton(v) for v in range(4)]


def test_find_minimals_on_weighted_path():
    """Test the path a -5- b -1- c under cardinality 1."""
    f = graph_cut(WeightedGraph.from_edges(3, [(0, 1, 5), (1, 2, 1)]))
    result = find_minimals(f, CardinalityFamily(f.universe, 1))
    assert result.value == 1
    assert result.sets == [Subset.of(3, [2])]


def test_find_minimals_with_distance_boundary(cycle4_boundary):
    """Test the rizzi adapter on the unit 4-cycle boundary function."""
    universe = cycle4_boundary.universe
    result = find_minimals(cycle4_boundary, CardinalityFamily(universe, 2))
    assert result.adapter == "rizzi"
    assert result.value == 1
    assert result.sets == [universe.subset([0, 2]), universe.subset([1, 3])]


def test_knapsack_instance(path_cut, abc):
    """Test weights (1/2, 1/2, 3/4): {a, b} is feasible and {a, c} is not."""
    family = KnapsackFamily(abc, ["1/2", "1/2", "3/4"])
    assert compare_with_brute_force(path_cut, family, check_invariants=True).match


def test_trivial_family_is_rejected(path_cut, abc):
    with pytest.raises(TrivialFamilyError):
        find_optimal(path_cut, CardinalityFamily(abc, 3))
    with pytest.raises(TrivialFamilyError):
        find_minimals(path_cut, CardinalityFamily(abc, 3))


def test_all_loops_is_infeasible(path_cut, abc):
    with pytest.raises(InfeasibleError):
        find_optimal(path_cut, CardinalityFamily(abc, 0))
    with pytest.raises(InfeasibleError):
        find_minimals(path_cut, ForbiddenSubsetsFamily(abc, [[0], [1], [2]]))


def test_mismatched_universes(path_cut):
    with pytest.raises(ValueError):
        find_optimal(path_cut, CardinalityFamily(GroundSet(4), 1))


def test_explicit_adapter_instance(cycle4_cut):
    solution = find_optimal(
        cycle4_cut, CardinalityFamily(cycle4_cut.universe, 2), QueyranneAdapter()
    )
    assert solution.value == 2


def test_adapter_default_from_config(cycle4_boundary):
    """Test that "solver.default_adapter" applies when no adapter is given."""
    from heredimin.config import get_config

    get_config().set("solver.default_adapter", "queyranne")
    solution = find_optimal(
        cycle4_boundary, CardinalityFamily(cycle4_boundary.universe, 2)
    )
    assert solution.adapter == "queyranne"


def test_unconstrained_min(path_cut, cycle4_cut):
    """Test the nontrivial minimum of the path and of the 4-cycle."""
    path = unconstrained_min(path_cut)
    assert path.value == 1
    assert unconstrained_min(cycle4_cut).value == 2

    pair = graph_cut(WeightedGraph.from_edges(2, [(0, 1, 4)]))
    solution = unconstrained_min(pair)
    assert solution.value == 4
    assert solution.set == Subset.of(2, [1])


def test_unconstrained_needs_two_elements():
    with pytest.raises(InfeasibleError):
        unconstrained_min(graph_cut(WeightedGraph(1)))


def test_oracle_calls_count_only_this_run(path_cut, abc):
    counted = with_counter(path_cut)
    solution = find_optimal(counted, CardinalityFamily(abc, 2))
    assert solution.oracle_calls == counted.calls


SOLVER_FUNCTIONS = ("graph", "hypergraph", "modular")
SOLVER_FAMILIES = ("cardinality", "knapsack", "partition", "forbidden", "intersection")


@pytest.mark.parametrize("batch", range(10))
def test_oracle_equivalence(batch):
    """Compare both algorithms with brute force on 50 random instances."""
    rng = random.Random(f"equivalence:{batch}")
    for _ in range(50):
        n = rng.randint(2, 9)
        function_class = rng.choice(SOLVER_FUNCTIONS)
        family_class = rng.choice(SOLVER_FAMILIES)
        seed = rng.randrange(10**6)
        f, family = random_instance(seed, n, function_class, family_class)
        result = compare_with_brute_force(f, family, check_invariants=True)
        assert result.match, (seed, n, function_class, family_class, result.differences)


@pytest.mark.parametrize("family_class", FAMILY_CLASSES)
def test_distance_boundary_equivalence(family_class):
    """Compare the rizzi adapter with brute force on every family class."""
    rng = random.Random(f"distance:{family_class}")
    for _ in range(40):
        n = rng.randint(2, 8)
        seed = rng.randrange(10**6)
        f, family = random_instance(seed, n, "distance", family_class)
        result = compare_with_brute_force(f, family)
        assert result.match, (seed, n, result.differences)


@pytest.mark.parametrize("function_class", SOLVER_FUNCTIONS)
def test_exclude_family_equivalence(function_class):
    """Compare both algorithms with brute force when one element is excluded."""
    rng = random.Random(f"exclude:{function_class}")
    for _ in range(40):
        n = rng.randint(2, 9)
        seed = rng.randrange(10**6)
        f, family = random_instance(seed, n, function_class, "exclude")
        result = compare_with_brute_force(f, family, check_invariants=True)
        assert result.match, (seed, n, result.differences)


@pytest.mark.parametrize("function_class", ["graph", "hypergraph"])
def test_find_minimals_is_scale_invariant(function_class):
    """Test that a positive rational factor scales the value and keeps the sets."""
    rng = random.Random(f"scaling:{function_class}")
    for _ in range(25):
        n = rng.randint(2, 8)
        seed = rng.randrange(10**6)
        f, family = random_instance(
            seed, n, function_class, rng.choice(SOLVER_FAMILIES)
        )
        factor = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        values = [factor * value for value in ExplicitTable.tabulate(f).values]
        scaled = table_function(ExplicitTable(n, values))

        expected = find_minimals(f, family)
        result = find_minimals(scaled, family)
        assert result.value == factor * expected.value
        assert result.sets == expected.sets, (seed, n, factor)


@pytest.mark.parametrize("batch", range(4))
def test_unconstrained_recovery(batch):
    """Match brute force with a single excluded element on 25 random graphs."""
    rng = random.Random(f"unconstrained:{batch}")
    for _ in range(25):
        n = rng.randint(2, 8)
        f, _ = random_instance(rng.randrange(10**6), n, "graph", "cardinality")
        universe = f.universe

        s = rng.randrange(n)
        family = ExcludeElementFamily(universe, s)
        expected = brute_force(f, family)
        assert set(find_minimals(f, family).sets) == set(expected.minimal_minimizers)

        nontrivial = min(f.evaluate_mask(m) for m in range(1, universe.full_mask))
        assert unconstrained_min(f).value == nontrivial
        minimals = unconstrained_minimals(f)
        assert minimals.value == nontrivial
        assert all(0 not in subset for subset in minimals.sets)


@pytest.mark.slow
@pytest.mark.parametrize("solve", [find_optimal, find_minimals])
def test_oracle_call_bound(solve):
    """Check calls <= 5n^3 + 10n^2 on every trial and a non-growing calls/n^3."""
    ratios = []
    for n in (10, 20, 40, 80, 120):
        trials = 3 if n <= 40 else 2
        worst = 0
        for seed in range(trials):
            f, family = random_instance(seed, n, "graph", "cardinality")
            calls = solve(f, family).oracle_calls
            assert calls <= 5 * n**3 + 10 * n**2, (n, seed, calls)
            worst = max(worst, calls)
        ratios.append(worst / n**3)
    assert ratios[-1] <= ratios[0]
