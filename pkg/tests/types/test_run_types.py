"""Tests for the run, result and report types."""

from pathlib import Path

import pytest

from crossmod.types import (
    CheckResult,
    CorpusInstance,
    DecompositionReport,
    Report,
    RunConfig,
    StepRecord,
)


def test_run_config_defaults() -> None:
    """Test RunConfig defaults and path conversion."""
    config = RunConfig("invariants", input_path="tests/samples/doubling.json")
    assert config.tolerance == 1e-9
    assert config.seed == 42
    assert config.format == "human"
    assert config.suite is None
    assert isinstance(config.input_path, Path)
    assert config.to_dict()["input"] == "tests/samples/doubling.json"


def test_run_config_raises_error() -> None:
    """Test RunConfig raises error for illegal field values."""
    with pytest.raises(ValueError, match="Unknown command"):
        RunConfig("explode")
    with pytest.raises(ValueError, match="Unknown format"):
        RunConfig("corpus", format="xml")
    with pytest.raises(ValueError, match="Tolerance"):
        RunConfig("corpus", tolerance=0.0)
    with pytest.raises(ValueError, match="Seed"):
        RunConfig("corpus", seed=-1)
    with pytest.raises(ValueError, match="Workers"):
        RunConfig("verify", workers=0)
    with pytest.raises(ValueError, match="Unknown suite"):
        RunConfig("verify", suite="everything")
    with pytest.raises(ValueError, match="requires --input"):
        RunConfig("validate")


def test_check_result() -> None:
    """Test CheckResult status handling and serialization."""
    result = CheckResult("torus", "finite-torus-2", "passed", {"dimension_vector": [2]})
    assert result.passed
    assert CheckResult("torus", "trivial", "skipped").passed
    assert not CheckResult("torus", "trivial", "failed").passed
    assert result.to_dict() == {
        "suite": "torus",
        "instance": "finite-torus-2",
        "status": "passed",
        "details": {"dimension_vector": [2]},
    }
    with pytest.raises(ValueError):
        CheckResult("torus", "trivial", "maybe")


def test_report_to_dict() -> None:
    """Test Report serialization."""
    report = Report("corpus", True, {"instances": []}, {"command": "corpus"})
    assert report.to_dict() == {
        "schema": 1,
        "command": "corpus",
        "passed": True,
        "config": {"command": "corpus"},
        "data": {"instances": []},
    }


def test_step_record_omits_missing_ideal() -> None:
    """Test that a step without an ideal leaves ``ideal_dim`` out."""
    assert "ideal_dim" not in StepRecord("thin", 2, [1, 1]).to_dict()
    assert StepRecord("fiber", 1, [1], 0).to_dict()["ideal_dim"] == 0


def test_decomposition_report_to_dict() -> None:
    """Test DecompositionReport serialization."""
    direct = StepRecord("direct", 4, [2], 4)
    report = DecompositionReport([StepRecord("final", 4, [2])], direct, 42, True)
    data = report.to_dict()
    assert data["direct"]["ideal_dim"] == 4
    assert data["steps"][0]["name"] == "final"
    assert data["seed"] == 42


def test_corpus_instance_repr() -> None:
    """Test the CorpusInstance representation."""
    instance = CorpusInstance("x", "An instance.", lambda: None)  # type: ignore[arg-type, return-value]
    assert repr(instance) == "CorpusInstance(name='x')"
    assert instance.skip == ()
