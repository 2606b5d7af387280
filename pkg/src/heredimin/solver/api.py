"""Single entry point choosing the algorithm and reduction for an instance."""

import logging
from typing import Optional, Union

from ..core.errors import AdapterError
from ..core.oracles import SetFamilyOracle, SetFunctionOracle
from .algorithms import (
    AdapterLike,
    Solution,
    SolutionFamily,
    find_minimals,
    find_optimal,
)
from .ordering import AdmissibleFunctionAdapter
from .reductions import find_minimals_posimodular, find_optimal_posimodular

logger = logging.getLogger(__name__)


def minimize(
    f: SetFunctionOracle,
    family: SetFamilyOracle,
    all_minimal: bool = False,
    adapter: AdapterLike = None,
    check_invariants: Optional[bool] = None,
) -> Union[Solution, SolutionFamily]:
    """
    Solve the hereditary minimization problem for (f, family).

    Functions that are not symmetric are routed through the antirestriction,
    where only the queyranne adapter applies.
    """
    if f.symmetric:
        solve = find_minimals if all_minimal else find_optimal
        return solve(f, family, adapter, check_invariants)

    requested = adapter
    if isinstance(adapter, AdmissibleFunctionAdapter):
        requested = adapter.name
    if requested == "rizzi":
        raise AdapterError("The rizzi adapter needs a symmetric boundary function")
    logger.debug(f"{type(f).__name__} is not symmetric; using the antirestriction")
    if all_minimal:
        return find_minimals_posimodular(f, family, "queyranne", check_invariants)
    return find_optimal_posimodular(f, family, "queyranne", check_invariants)
