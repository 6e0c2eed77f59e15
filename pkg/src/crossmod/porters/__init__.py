"""Module for crossmod's Porters."""

from .base import BasePorter
from .json import FLOAT_DIGITS, JSONPorter, jsonable

__all__ = [
    "BasePorter",
    "FLOAT_DIGITS",
    "JSONPorter",
    "jsonable",
]
