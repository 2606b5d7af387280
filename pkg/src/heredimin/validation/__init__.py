"""Instance-file schemas and handlers for heredimin."""

from .handlers import (
    Instance,
    ValidationError,
    build_family,
    build_function,
    build_instance,
    load_instance,
    load_report,
    parse_instance_text,
    parse_report_text,
    serialize_instance,
    serialize_report,
)
from .schemas import InstanceFile, SolveReport

__all__ = [
    "Instance",
    "InstanceFile",
    "SolveReport",
    "ValidationError",
    "build_family",
    "build_function",
    "build_instance",
    "load_instance",
    "load_report",
    "parse_instance_text",
    "parse_report_text",
    "serialize_instance",
    "serialize_report",
]
