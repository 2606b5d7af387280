import os
from pathlib import Path

import pytest
from dotenv import load_dotenv

from heredimin.config import reset_config
from heredimin.core import GroundSet
from heredimin.functions import (
    WeightedGraph,
    boundary_function,
    graph_cut,
    shortest_path_distance_map,
)

FIXTURES = Path(__file__).parent / "fixtures"

CYCLE4_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0)]


@pytest.fixture(autouse=True)
def setup_test_env(tmp_path):
    """Point the configuration at a scratch directory."""
    # Load environment variables from .env file if it exists
    load_dotenv()

    os.environ["HEREDIMIN_CONFIG_DIR"] = str(tmp_path / "heredimin-config")
    for var in ["HEREDIMIN_ENUMERATION_CAP", "HEREDIMIN_LOG_LEVEL"]:
        os.environ.pop(var, None)
    reset_config()

    yield

    os.environ.pop("HEREDIMIN_CONFIG_DIR", None)
    reset_config()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def abc():
    return GroundSet(3, ("a", "b", "c"))


@pytest.fixture
def path_cut(abc):
    """Unit path a-b-c."""
    return graph_cut(WeightedGraph.from_edges(3, [(0, 1), (1, 2)]), abc)


@pytest.fixture
def triangle_cut():
    return graph_cut(WeightedGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


@pytest.fixture
def cycle4_cut():
    """Unit 4-cycle a-b-c-d-a."""
    return graph_cut(
        WeightedGraph.from_edges(4, CYCLE4_EDGES), GroundSet(4, ("a", "b", "c", "d"))
    )


@pytest.fixture
def cycle4_boundary():
    """f(S) = d(S, V - S) for the shortest-path distances of the unit 4-cycle."""
    distances = shortest_path_distance_map(
        WeightedGraph.from_edges(4, CYCLE4_EDGES), GroundSet(4, ("a", "b", "c", "d"))
    )
    return boundary_function(distances)
