"""Utilities for loading descriptors and rendering reports."""

from .descriptors import (
    DESCRIPTOR_SCHEMA,
    SCHEMA_VERSION,
    build,
    build_action,
    build_algebra,
    build_crossed_module,
    build_group,
    load_descriptor,
    validate_descriptor,
)
from .viz import ReportPrinter

__all__ = [
    "DESCRIPTOR_SCHEMA",
    "ReportPrinter",
    "SCHEMA_VERSION",
    "build",
    "build_action",
    "build_algebra",
    "build_crossed_module",
    "build_group",
    "load_descriptor",
    "validate_descriptor",
]
