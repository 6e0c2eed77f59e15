"""Test for the JSONPorter class."""

import json
from pathlib import Path
from typing import List

import numpy as np
import pytest

from crossmod.porters import FLOAT_DIGITS, JSONPorter, jsonable
from crossmod.types import Report


@pytest.fixture
def sample_reports() -> List[Report]:
    """Create sample reports for testing."""
    return [
        Report("invariants", True, {"pi1": {"order": 2, "invariant_factors": [2]}}),
        Report("crossed-product", False, {"dimension_vector": np.array([1, 2]), "ideal_dim": np.int64(4)}),
    ]


def test_json_porter_initialization() -> None:
    """Test JSONPorter initialization."""
    porter = JSONPorter()
    assert porter.lines is False
    assert porter.indent == 4

    porter = JSONPorter(lines=True)
    assert porter.lines is True


def test_jsonable_numpy_values() -> None:
    """Test that numpy scalars and arrays become plain JSON values."""
    value = jsonable({"a": np.arange(3), "b": np.float64(0.5), "c": np.bool_(True), 1: (1, 2)})
    assert value == {"a": [0, 1, 2], "b": 0.5, "c": True, "1": [1, 2]}
    assert isinstance(value["c"], bool)


def test_jsonable_rounding() -> None:
    """Test that floats are rounded and negative zero disappears."""
    assert jsonable(1 / 3) == round(1 / 3, FLOAT_DIGITS)
    assert jsonable(1e-12) == 0.0
    assert str(jsonable(-1e-13)) == "0.0"
    assert jsonable(0.123456, digits=2) == 0.12


def test_jsonable_complex() -> None:
    """Test that complex numbers become ``[re, im]`` pairs."""
    assert jsonable(1 + 2j) == [1.0, 2.0]
    assert jsonable(np.array([1j])) == [[0.0, 1.0]]


def test_json_porter_export_json(sample_reports: List[Report], tmp_path: Path) -> None:
    """Test exporting reports as one JSON document."""
    output_file = tmp_path / "reports.json"
    JSONPorter().export(sample_reports, output_file)

    data = json.loads(output_file.read_text())
    assert isinstance(data, list)
    assert [entry["command"] for entry in data] == ["invariants", "crossed-product"]
    assert data[1]["data"]["dimension_vector"] == [1, 2]
    assert data[1]["data"]["ideal_dim"] == 4
    assert data[0]["schema"] == 1


def test_json_porter_single_report(sample_reports: List[Report]) -> None:
    """Test that a single report is written as an object."""
    data = json.loads(JSONPorter().dumps(sample_reports[:1]))
    assert data["passed"] is True
    assert data["data"]["pi1"]["invariant_factors"] == [2]


def test_json_porter_export_lines(sample_reports: List[Report], tmp_path: Path) -> None:
    """Test exporting reports as JSON lines."""
    output_file = tmp_path / "reports.jsonl"
    JSONPorter(lines=True)(sample_reports, file=output_file)

    lines = output_file.read_text().splitlines()
    assert len(lines) == len(sample_reports)
    assert json.loads(lines[1])["passed"] is False


def test_json_porter_is_deterministic(sample_reports: List[Report]) -> None:
    """Test that the same reports always give the same bytes."""
    porter = JSONPorter()
    assert porter.dumps(sample_reports) == porter.dumps(sample_reports)
    keys = list(json.loads(porter.dumps(sample_reports[:1])))
    assert keys == sorted(keys)


def test_json_porter_stdout(sample_reports: List[Report], capsys: pytest.CaptureFixture) -> None:
    """Test that reports go to stdout when no file is given."""
    JSONPorter(lines=True).export(sample_reports)
    captured = capsys.readouterr()
    assert len(captured.out.splitlines()) == 2
