import random
from itertools import combinations

import pytest

from heredimin.core import ContractionError, GroundSet, InfeasibleError, Subset
from heredimin.families import CardinalityFamily, ExcludeElementFamily
from heredimin.functions import WeightedGraph, graph_cut
from heredimin.reference import FAMILY_CLASSES, random_instance
from heredimin.solver import ContractedSystem


def _zero(universe):
    return graph_cut(WeightedGraph(universe.n), universe)


def _separates(system, y, t, u):
    """Y separates t and u: one block lies inside Y and the other misses it."""
    x_t, x_u = system.block(t), system.block(u)
    inside_t, inside_u = x_t & ~y == 0, x_u & ~y == 0
    if inside_t == inside_u:
        return False
    other = x_u if inside_t else x_t
    return other & y == 0


@pytest.fixture
def path_system(path_cut, abc):
    return ContractedSystem(path_cut, CardinalityFamily(abc, 2), check_invariants=True)


def test_init_is_the_identity_partition(path_system, path_cut, abc):
    """Test singleton blocks, identical values and identical membership."""
    assert path_system.active == [0, 1, 2]
    assert path_system.s is None
    for v in range(3):
        assert path_system.expand([v]) == abc.singleton(v)
        assert path_system.evaluate([v]) == path_cut(abc.singleton(v))
    for subset in abc.subsets():
        assert path_system.member(subset.indices()) == (len(subset) <= 2)


def test_evaluate_and_expand_after_contraction(path_system, abc):
    """Test f'({a}) = f({a, b}) after contracting {a, b} into a."""
    path_system.contract_into([0, 1], 0)
    assert path_system.active == [0, 2]
    assert path_system.expand([0]) == abc.subset([0, 1])
    assert path_system.evaluate([0]) == 1
    assert path_system.evaluate([]) == 0
    assert path_system.expand([]) == abc.empty()
    assert path_system.merges == 1


def test_contract_everything(path_system, path_cut, abc):
    path_system.contract_into([2, 0, 1], 1)
    assert path_system.active == [1]
    assert path_system.evaluate([1]) == path_cut(abc.full())
    assert path_system.is_loop(1)


def test_contract_into_rejects_bad_requests(path_system):
    with pytest.raises(ContractionError):
        path_system.contract_into([], 0)
    with pytest.raises(ContractionError):
        path_system.contract_into([0, 1], 2)
    with pytest.raises(ContractionError):
        path_system.contract_into([0, 5], 0)


def test_member_and_loops():
    """Test loops of a k=1 cardinality family after one pair contraction."""
    universe = GroundSet(4)
    system = ContractedSystem(
        _zero(universe), CardinalityFamily(universe, 1), check_invariants=True
    )
    assert system.member([])
    system.contract_into([1, 2], 1)
    assert system.is_loop(1)
    assert not system.is_loop(0)

    assert system.absorb_loops() == [1]
    assert system.s == 1
    assert system.active == [0, 3]
    assert system.elements() == [0, 1, 3]
    assert system.is_loop(system.s)


def test_absorb_loops_merges_every_loop_and_is_idempotent():
    universe = GroundSet(5)
    system = ContractedSystem(
        _zero(universe), CardinalityFamily(universe, 1), check_invariants=True
    )
    system.contract_into([0, 1], 0)
    system.contract_into([3, 4], 3)
    assert system.absorb_loops() == [0, 3]
    assert system.s == 0
    assert system.expand([0]) == Subset.of(5, [0, 1, 3, 4])

    blocks = dict(system.blocks)
    assert system.absorb_loops() == []
    assert system.blocks == blocks
    # s stays a loop through later merges
    system.contract_into([0, 2], 0)
    assert system.is_loop(system.s)


def test_contractions_with_s_go_into_s():
    universe = GroundSet(4)
    system = ContractedSystem(
        _zero(universe), ExcludeElementFamily(universe, 3), check_invariants=True
    )
    system.absorb_loops()
    assert system.s == 3
    with pytest.raises(ContractionError):
        system.contract_into([3, 0], 0)
    system.contract_into([3, 0, 1], 3)
    assert system.active == [2]
    assert system.expand([3]) == Subset.of(4, [0, 1, 3])


def test_absorb_loops_without_loops_fails(path_system):
    with pytest.raises(ContractionError):
        path_system.absorb_loops()


def test_absorb_loops_when_everything_is_a_loop(abc, path_cut):
    system = ContractedSystem(path_cut, CardinalityFamily(abc, 0))
    with pytest.raises(InfeasibleError):
        system.absorb_loops()


def test_forced_loop_hides_sets_touching_s(path_system):
    """Test that a forced s makes every set containing it infeasible."""
    path_system.absorb([2], force_loop=True)
    assert path_system.s == 2
    assert path_system.is_loop(2)
    assert not path_system.member([0, 2])
    assert path_system.member([0, 1])


def test_mismatched_universes_are_rejected(path_cut):
    with pytest.raises(ContractionError):
        ContractedSystem(path_cut, CardinalityFamily(GroundSet(4), 1))


def test_separation_needs_whole_blocks(path_system, abc):
    path_system.contract_into([0, 1], 0)
    assert _separates(path_system, abc.subset([0, 1]).members, 0, 2)
    assert _separates(path_system, abc.subset([2]).members, 0, 2)
    assert not _separates(path_system, abc.subset([0]).members, 0, 2)
    assert not _separates(path_system, abc.subset([0, 2]).members, 0, 2)


@pytest.mark.parametrize("seed", range(25))
def test_queries_expand_through_random_contractions(seed):
    """Test evaluate, member and separation on unions of blocks."""
    rng = random.Random(f"contraction:{seed}")
    n = rng.randint(2, 8)
    function_class = rng.choice(["graph", "hypergraph", "modular"])
    f, family = random_instance(seed, n, function_class, rng.choice(FAMILY_CLASSES))
    system = ContractedSystem(f, family, check_invariants=True)
    for _ in range(rng.randint(0, n - 2)):
        t, u = rng.sample(system.active, 2)
        system.contract_into([t, u], t)
    if len(system.active) >= 2 and rng.random() < 0.5:
        system.absorb([rng.choice(system.active)])

    elements = system.elements()
    for _ in range(30):
        chosen = [v for v in elements if rng.random() < 0.5]
        x = system.expand(chosen)
        assert system.evaluate(chosen) == f(x)
        assert system.member(chosen) == family.contains(x)
        for t, u in combinations(elements, 2):
            split = (t in chosen) != (u in chosen)
            assert _separates(system, x.members, t, u) == split
