"""Test loading crossed modules and strict actions from JSON descriptors."""

import json
from pathlib import Path

import numpy as np
import pytest

from crossmod.bundles import finite_torus_action
from crossmod.errors import NotHomomorphism, ParseError
from crossmod.types import CrossedModule, StrictAction
from crossmod.utils import (
    build,
    build_algebra,
    build_group,
    load_descriptor,
    validate_descriptor,
)

SAMPLES = Path(__file__).parent / "samples"


def test_load_crossed_module() -> None:
    """Test that a crossed module descriptor builds a validated crossed module."""
    C = build(load_descriptor(SAMPLES / "doubling.json"))
    assert isinstance(C, CrossedModule)
    assert C.name == "doubling"
    assert (C.G.order, C.H.order) == (4, 2)
    assert C.boundary.map.tolist() == [0, 2]


def test_load_strict_action() -> None:
    """Test that the torus descriptor reproduces the built-in finite torus."""
    act = build(load_descriptor(SAMPLES / "torus.json"))
    assert isinstance(act, StrictAction)
    expected = finite_torus_action(2)
    assert act.A.dim == 4
    assert np.allclose(act.alpha, expected.alpha)
    assert np.allclose(act.u, expected.u)


def test_complex_pairs() -> None:
    """Test that ``[re, im]`` pairs are read as complex scalars."""
    act = build(load_descriptor(SAMPLES / "phase.json"))
    assert isinstance(act, StrictAction)
    assert np.allclose(act.u[:, 0], [1.0, -1.0])
    assert np.allclose(act.alpha, 1.0)


@pytest.mark.parametrize(
    "descriptor, order, abelian",
    [
        ({"cyclic": 5}, 5, True),
        ({"symmetric": 3}, 6, False),
        ({"trivial": True}, 1, True),
        ({"product": [{"cyclic": 2}, {"cyclic": 2}]}, 4, True),
        ({"table": [[0, 1], [1, 0]], "name": "Z2"}, 2, True),
        ({"semidirect": {"G": {"cyclic": 2}, "H": {"cyclic": 3}, "act": [[0, 1, 2], [0, 2, 1]]}}, 6, False),
    ],
)
def test_build_group(descriptor: dict, order: int, abelian: bool) -> None:
    """Test every way of describing a group."""
    G = build_group(descriptor)
    assert G.order == order
    assert G.is_abelian == abelian


@pytest.mark.parametrize(
    "descriptor, dim",
    [
        ({"complex": True}, 1),
        ({"matrix": 3}, 9),
        ({"functions": 4}, 4),
        ({"group_algebra": {"cyclic": 3}}, 3),
        ({"direct_sum": [{"complex": True}, {"matrix": 2}]}, 5),
        ({"tensor": [{"matrix": 2}, {"functions": 2}]}, 8),
        ({"structure": {"mul": [[[1]]], "star": [[1]], "unit": [1]}}, 1),
    ],
)
def test_build_algebra(descriptor: dict, dim: int) -> None:
    """Test every way of describing an algebra."""
    assert build_algebra(descriptor).dim == dim


def test_malformed_json() -> None:
    """Test that broken JSON is a parse error pointing at a line."""
    with pytest.raises(ParseError) as info:
        load_descriptor(SAMPLES / "malformed.json")
    assert "line" in info.value.witness[0]


def test_schema_violation() -> None:
    """Test that a schema failure is a parse error carrying a JSON path."""
    with pytest.raises(ParseError) as info:
        load_descriptor(SAMPLES / "bad_schema.json")
    assert info.value.witness[0].startswith("$")


def test_missing_file(tmp_path: Path) -> None:
    """Test that a missing descriptor file is a parse error."""
    with pytest.raises(ParseError, match="does not exist"):
        load_descriptor(tmp_path / "nowhere.json")


def test_unknown_keys_are_rejected() -> None:
    """Test that keys outside the schema fail validation."""
    with pytest.raises(ParseError):
        validate_descriptor({"G": {"cyclic": 2}, "H": {"cyclic": 2}, "boundary": [0, 1], "extra": 1})


def test_schema_version() -> None:
    """Test that only schema version 1 is accepted."""
    with pytest.raises(ParseError):
        validate_descriptor({"schema": 2, "G": {"cyclic": 2}, "H": {"cyclic": 2}, "boundary": [0, 1]})


def test_ragged_structure_constants(tmp_path: Path) -> None:
    """Test that structure constants must form a rectangular array."""
    path = tmp_path / "ragged.json"
    path.write_text(
        json.dumps(
            {
                "crossed_module": {"G": {"trivial": True}, "H": {"trivial": True}, "boundary": [0]},
                "algebra": {"structure": {"mul": [[[1]], [[1, 2]]], "star": [[1]]}},
                "alpha": "trivial",
                "u": "trivial",
            }
        )
    )
    with pytest.raises(ParseError, match="rectangular"):
        build(load_descriptor(path))


def test_wrong_rank() -> None:
    """Test that an involution given as a vector is rejected."""
    with pytest.raises(ParseError, match="axes"):
        build_algebra({"structure": {"mul": [[[1]]], "star": [1]}})


def test_invalid_crossed_module() -> None:
    """Test that mathematical failures surface as library errors with witnesses."""
    with pytest.raises(NotHomomorphism) as info:
        build(load_descriptor(SAMPLES / "not_a_hom.json"))
    assert info.value.witness == (1, 1)
