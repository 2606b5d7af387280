"""Seeded random instances for property tests, ``verify`` and ``bench``."""

import logging
import random
from typing import Any, Dict, List, Tuple, Union

from ..core.oracles import HereditaryFamilyOracle, SetFunctionOracle
from ..validation.handlers import build_instance
from ..validation.schemas import InstanceFile

logger = logging.getLogger(__name__)

FUNCTION_CLASSES = ("graph", "hypergraph", "modular", "distance")
FAMILY_CLASSES = (
    "cardinality",
    "knapsack",
    "partition",
    "uniform",
    "forbidden",
    "exclude",
    "intersection",
)

RawRational = Union[int, str]


def _rational(rng: random.Random, low: int, high: int) -> RawRational:
    """A random rational in [low, high] with denominator 1, 2 or 3."""
    q = rng.choice((1, 1, 2, 3))
    p = rng.randint(low * q, high * q)
    if p % q == 0:
        return p // q
    return f"{p}/{q}"


def _edges(rng: random.Random, n: int, connected: bool) -> List[List[RawRational]]:
    pairs = set()
    if connected:
        path = list(range(n))
        rng.shuffle(path)
        pairs.update((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
    # Average degree stays near 3 on large ground sets.
    density = min(0.4, 3 / n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                pairs.add((u, v))
    low = 1 if connected else 0
    return [[u, v, _rational(rng, low, 4)] for u, v in sorted(pairs)]


def _function(rng: random.Random, n: int, function_class: str) -> Dict[str, Any]:
    if function_class == "graph":
        return {"type": "graph_cut", "edges": _edges(rng, n, connected=False)}
    if function_class == "hypergraph":
        hyperedges = []
        for _ in range(rng.randint(1, n + 2)):
            size = rng.randint(2, min(n, 4))
            members = sorted(rng.sample(range(n), size))
            hyperedges.append({"members": members, "w": _rational(rng, 0, 4)})
        return {"type": "hypergraph_cut", "hyperedges": hyperedges}
    if function_class == "modular":
        return {
            "type": "modular_offset",
            "base": _function(rng, n, "graph"),
            "weights": [_rational(rng, 0, 3) for _ in range(n)],
        }
    if function_class == "distance":
        return {"type": "distance_boundary", "edges": _edges(rng, n, connected=True)}
    raise ValueError(
        f"Unknown function class '{function_class}'. "
        f"Choose from {', '.join(FUNCTION_CLASSES)}"
    )


def _family(rng: random.Random, n: int, family_class: str) -> Dict[str, Any]:
    if family_class == "cardinality":
        return {"type": "cardinality", "k": rng.randint(1, n - 1)}
    if family_class == "uniform":
        return {"type": "matroid", "kind": "uniform", "k": rng.randint(1, n - 1)}
    if family_class == "knapsack":
        weights = [rng.choice(("1/4", "1/2", "3/4", 1)) for _ in range(n)]
        return {"type": "knapsack", "weights": weights}
    if family_class == "partition":
        order = list(range(n))
        rng.shuffle(order)
        cuts = sorted(rng.sample(range(1, n), rng.randint(0, min(2, n - 1))))
        blocks = [
            sorted(order[a:b]) for a, b in zip([0] + cuts, cuts + [n]) if order[a:b]
        ]
        capacities = [rng.randint(0, len(block)) for block in blocks]
        return {
            "type": "matroid",
            "kind": "partition",
            "blocks": blocks,
            "capacities": capacities,
        }
    if family_class == "forbidden":
        obstructions = []
        for _ in range(rng.randint(1, 3)):
            size = rng.randint(1, min(3, n))
            obstructions.append(sorted(rng.sample(range(n), size)))
        return {"type": "forbidden", "obstructions": obstructions}
    if family_class == "exclude":
        return {"type": "exclude", "s": rng.randrange(n)}
    if family_class == "intersection":
        kinds = rng.sample(("cardinality", "knapsack", "partition", "forbidden"), 2)
        return {
            "type": "intersection",
            "parts": [_family(rng, n, kind) for kind in kinds],
        }
    raise ValueError(
        f"Unknown family class '{family_class}'. "
        f"Choose from {', '.join(FAMILY_CLASSES)}"
    )


def _usable(family: HereditaryFamilyOracle) -> bool:
    n = family.universe.n
    if family.contains_mask((1 << n) - 1):
        return False
    return any(family.contains_mask(1 << v) for v in range(n))


def random_instance_spec(
    seed: int, n: int, function_class: str = "graph", family_class: str = "cardinality"
) -> InstanceFile:
    """
    A reproducible instance file. Families are re-drawn until they exclude
    the whole ground set and admit at least one singleton.
    """
    if n < 2:
        raise ValueError("Random instances need at least two elements")
    rng = random.Random(f"{seed}:{n}:{function_class}:{family_class}")
    function = _function(rng, n, function_class)
    attempt = 0
    while True:
        model = InstanceFile(
            ground_set={"n": n},
            function=function,
            family=_family(rng, n, family_class),
        )
        instance = build_instance(model)
        if _usable(instance.family):
            if attempt:
                logger.debug(f"Family accepted after {attempt} re-draws")
            return model
        attempt += 1


def random_instance(
    seed: int, n: int, function_class: str = "graph", family_class: str = "cardinality"
) -> Tuple[SetFunctionOracle, HereditaryFamilyOracle]:
    """Build the oracles of ``random_instance_spec``."""
    instance = build_instance(
        random_instance_spec(seed, n, function_class, family_class)
    )
    return instance.function, instance.family
