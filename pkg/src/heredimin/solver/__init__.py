"""Contracted systems, pendant pairs and the minimization algorithms."""

from .algorithms import (
    Candidate,
    Solution,
    SolutionFamily,
    find_minimals,
    find_optimal,
    unconstrained_min,
    unconstrained_minimals,
)
from .api import minimize
from .contraction import ContractedSystem
from .ordering import (
    ADAPTER_NAMES,
    AdmissibleFunctionAdapter,
    LegalOrder,
    QueyranneAdapter,
    RizziAdapter,
    legal_order,
    make_adapter,
    max_back_order,
    pendant_pair,
    resolve_adapter,
)
from .reductions import (
    AntirestrictionFunction,
    LiftedFamily,
    antirestriction,
    find_minimals_posimodular,
    find_optimal_posimodular,
    lift_family,
    maximal_minimizers_of_contraction,
)

__all__ = [
    "ADAPTER_NAMES",
    "AdmissibleFunctionAdapter",
    "AntirestrictionFunction",
    "Candidate",
    "ContractedSystem",
    "LegalOrder",
    "LiftedFamily",
    "QueyranneAdapter",
    "RizziAdapter",
    "Solution",
    "SolutionFamily",
    "antirestriction",
    "find_minimals",
    "find_minimals_posimodular",
    "find_optimal",
    "find_optimal_posimodular",
    "legal_order",
    "lift_family",
    "make_adapter",
    "max_back_order",
    "maximal_minimizers_of_contraction",
    "minimize",
    "pendant_pair",
    "resolve_adapter",
    "unconstrained_min",
    "unconstrained_minimals",
]
