"""Strict extensions, partial crossed products and the four-step factorization."""

from crossmod.modules import make_strict_extension

from .partial import (
    base_copy,
    naturality_check,
    partial_crossed,
    restrict_strict_action,
    transport_action,
    verify_partial_crossed,
)
from .pipeline import full_decomposition

__all__ = [
    "base_copy",
    "full_decomposition",
    "make_strict_extension",
    "naturality_check",
    "partial_crossed",
    "restrict_strict_action",
    "transport_action",
    "verify_partial_crossed",
]
