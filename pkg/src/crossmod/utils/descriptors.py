"""Load groups, crossed modules, algebras and strict actions from JSON descriptors.

A descriptor file is read, checked against ``DESCRIPTOR_SCHEMA`` with
jsonschema and only then turned into validated objects. Schema failures raise
:class:`~crossmod.errors.ParseError` carrying the JSON path of the offending
value; failures of the mathematical checks surface as the library's own
errors. The full format is documented in ``docs/schema.md``.
"""

import json
from functools import reduce
from pathlib import Path
from typing import Any, Dict, Union

import jsonschema
import numpy as np
from jsonschema.exceptions import best_match

from crossmod.algebra import (
    complex_numbers,
    direct_sum,
    functions_on,
    group_algebra,
    make_algebra,
    matrix_algebra,
    tensor,
)
from crossmod.bundles import make_strict_action
from crossmod.errors import ParseError
from crossmod.groups import (
    cyclic,
    direct_product,
    make_group,
    semidirect_product,
    symmetric,
    trivial_group,
)
from crossmod.modules import make_crossed_module
from crossmod.types import CrossedModule, FiniteGroup, StarAlgebra, StrictAction

SCHEMA_VERSION = 1


def _only(key: str, value: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "type": "object",
        "required": [key],
        "properties": {key: value},
        "additionalProperties": False,
    }


DESCRIPTOR_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "definitions": {
        "index": {"type": "integer", "minimum": 0},
        "positive": {"type": "integer", "minimum": 1},
        "tensor": {
            "oneOf": [
                {"type": "number"},
                {"type": "array", "items": {"$ref": "#/definitions/tensor"}},
            ]
        },
        "permutations": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "items": {"$ref": "#/definitions/index"}},
        },
        "group": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["table"],
                    "properties": {
                        "name": {"type": "string"},
                        "table": {"$ref": "#/definitions/permutations"},
                    },
                    "additionalProperties": False,
                },
                _only("cyclic", {"$ref": "#/definitions/positive"}),
                _only("symmetric", {"$ref": "#/definitions/positive"}),
                _only("trivial", {"const": True}),
                _only(
                    "product",
                    {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/group"}},
                ),
                _only(
                    "semidirect",
                    {
                        "type": "object",
                        "required": ["G", "H", "act"],
                        "properties": {
                            "G": {"$ref": "#/definitions/group"},
                            "H": {"$ref": "#/definitions/group"},
                            "act": {"$ref": "#/definitions/permutations"},
                        },
                        "additionalProperties": False,
                    },
                ),
            ]
        },
        "algebra": {
            "oneOf": [
                _only("complex", {"const": True}),
                _only("matrix", {"$ref": "#/definitions/positive"}),
                _only("functions", {"$ref": "#/definitions/positive"}),
                _only("group_algebra", {"$ref": "#/definitions/group"}),
                _only(
                    "direct_sum",
                    {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/algebra"}},
                ),
                _only(
                    "tensor",
                    {"type": "array", "minItems": 1, "items": {"$ref": "#/definitions/algebra"}},
                ),
                _only(
                    "structure",
                    {
                        "type": "object",
                        "required": ["mul", "star"],
                        "properties": {
                            "mul": {"$ref": "#/definitions/tensor"},
                            "star": {"$ref": "#/definitions/tensor"},
                            "unit": {"$ref": "#/definitions/tensor"},
                            "name": {"type": "string"},
                        },
                        "additionalProperties": False,
                    },
                ),
            ]
        },
        "crossed_module": {
            "type": "object",
            "required": ["G", "H", "boundary"],
            "properties": {
                "schema": {"const": SCHEMA_VERSION},
                "name": {"type": "string"},
                "G": {"$ref": "#/definitions/group"},
                "H": {"$ref": "#/definitions/group"},
                "boundary": {"type": "array", "items": {"$ref": "#/definitions/index"}},
                "conj": {
                    "oneOf": [
                        {"const": "trivial"},
                        {"$ref": "#/definitions/permutations"},
                    ]
                },
            },
            "additionalProperties": False,
        },
        "strict_action": {
            "type": "object",
            "required": ["crossed_module", "algebra", "alpha", "u"],
            "properties": {
                "schema": {"const": SCHEMA_VERSION},
                "name": {"type": "string"},
                "crossed_module": {"$ref": "#/definitions/crossed_module"},
                "algebra": {"$ref": "#/definitions/algebra"},
                "alpha": {
                    "oneOf": [{"const": "trivial"}, {"$ref": "#/definitions/tensor"}]
                },
                "u": {"oneOf": [{"const": "trivial"}, {"$ref": "#/definitions/tensor"}]},
            },
            "additionalProperties": False,
        },
    },
    "oneOf": [
        {"$ref": "#/definitions/strict_action"},
        {"$ref": "#/definitions/crossed_module"},
    ],
}


def _json_path(parts: Any) -> str:
    path = "$"
    for part in parts:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def validate_descriptor(descriptor: Any) -> None:
    """Check a parsed descriptor against the schema.

    Raises:
        ParseError: With the JSON path of the most relevant failure.

    """
    validator = jsonschema.Draft7Validator(DESCRIPTOR_SCHEMA)
    error = best_match(validator.iter_errors(descriptor))
    if error is not None:
        path = _json_path(error.absolute_path)
        raise ParseError(f"Descriptor is invalid at {path}: {error.message}", (path,))


def load_descriptor(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a JSON descriptor and validate it against the schema.

    Args:
        path: The descriptor file.

    Returns:
        Dict[str, Any]: The parsed descriptor.

    Raises:
        ParseError: If the file is missing, is not JSON, or fails the schema.

    """
    path = Path(path)
    if not path.is_file():
        raise ParseError(f"Descriptor file {path} does not exist.", ("$",))
    try:
        descriptor = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as error:
        location = f"line {error.lineno}, column {error.colno}"
        raise ParseError(f"Descriptor {path} is not valid JSON at {location}: {error.msg}", (location,))
    validate_descriptor(descriptor)
    return descriptor


def _complex_array(value: Any, rank: int, where: str) -> np.ndarray:
    """Read an array of complex scalars given as numbers or ``[re, im]`` pairs."""
    try:
        array = np.asarray(value, dtype=np.float64)
    except ValueError:
        raise ParseError(f"{where} is not a rectangular array of scalars.", (where,))
    if array.ndim == rank + 1 and array.shape[-1] == 2:
        return array[..., 0] + 1j * array[..., 1]
    if array.ndim == rank:
        return array.astype(np.complex128)
    raise ParseError(f"{where} should have {rank} axes of scalars.", (where,))


def build_group(descriptor: Dict[str, Any]) -> FiniteGroup:
    """Build a finite group from its descriptor."""
    if "table" in descriptor:
        return make_group(descriptor["table"], descriptor.get("name", ""))
    if "cyclic" in descriptor:
        return cyclic(descriptor["cyclic"])
    if "symmetric" in descriptor:
        return symmetric(descriptor["symmetric"])
    if "trivial" in descriptor:
        return trivial_group()
    if "product" in descriptor:
        return direct_product(*(build_group(part) for part in descriptor["product"]))
    semi = descriptor["semidirect"]
    return semidirect_product(build_group(semi["G"]), build_group(semi["H"]), semi["act"])


def build_algebra(descriptor: Dict[str, Any]) -> StarAlgebra:
    """Build a finite-dimensional C*-algebra from its descriptor."""
    if "complex" in descriptor:
        return complex_numbers()
    if "matrix" in descriptor:
        return matrix_algebra(descriptor["matrix"])
    if "functions" in descriptor:
        return functions_on(descriptor["functions"])
    if "group_algebra" in descriptor:
        return group_algebra(build_group(descriptor["group_algebra"]))
    if "direct_sum" in descriptor:
        return direct_sum(*(build_algebra(part) for part in descriptor["direct_sum"]))
    if "tensor" in descriptor:
        return reduce(tensor, (build_algebra(part) for part in descriptor["tensor"]))
    entry = descriptor["structure"]
    unit = entry.get("unit")
    return make_algebra(
        _complex_array(entry["mul"], 3, "$.algebra.structure.mul"),
        _complex_array(entry["star"], 2, "$.algebra.structure.star"),
        None if unit is None else _complex_array(unit, 1, "$.algebra.structure.unit"),
        entry.get("name", ""),
    )


def build_crossed_module(descriptor: Dict[str, Any]) -> CrossedModule:
    """Build a crossed module from its descriptor; ``conj`` defaults to trivial."""
    return make_crossed_module(
        build_group(descriptor["G"]),
        build_group(descriptor["H"]),
        descriptor["boundary"],
        descriptor.get("conj", "trivial"),
        descriptor.get("name", ""),
    )


def build_action(descriptor: Dict[str, Any]) -> StrictAction:
    """Build a strict action from its descriptor.

    ``"trivial"`` for ``alpha`` means every α_g is the identity, and for ``u``
    that every u_h is the unit. The result is validated as a strict action.
    """
    C = build_crossed_module(descriptor["crossed_module"])
    A = build_algebra(descriptor["algebra"])
    if descriptor["alpha"] == "trivial":
        alpha = np.broadcast_to(np.eye(A.dim), (C.G.order, A.dim, A.dim))
    else:
        alpha = _complex_array(descriptor["alpha"], 3, "$.alpha")
    if descriptor["u"] == "trivial":
        u = np.broadcast_to(A.unit, (C.H.order, A.dim))
    else:
        u = _complex_array(descriptor["u"], 2, "$.u")
    return make_strict_action(A, C, alpha, u, descriptor.get("name", ""))


def build(descriptor: Dict[str, Any]) -> Union[CrossedModule, StrictAction]:
    """Build whatever a validated descriptor describes."""
    if "crossed_module" in descriptor:
        return build_action(descriptor)
    return build_crossed_module(descriptor)
