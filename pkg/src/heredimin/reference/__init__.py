"""Exhaustive reference oracles and random instance generation."""

from .brute_force import BruteForceReport, brute_force, certify_pendant_pair
from .generators import (
    FAMILY_CLASSES,
    FUNCTION_CLASSES,
    random_instance,
    random_instance_spec,
)
from .verification import (
    VerificationResult,
    compare_report_with_brute_force,
    compare_with_brute_force,
)

__all__ = [
    "BruteForceReport",
    "FAMILY_CLASSES",
    "FUNCTION_CLASSES",
    "VerificationResult",
    "brute_force",
    "certify_pendant_pair",
    "compare_report_with_brute_force",
    "compare_with_brute_force",
    "random_instance",
    "random_instance_spec",
]
