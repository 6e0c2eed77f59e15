"""Test the verification suites."""

from typing import Any, Dict

import pytest

from crossmod.decomposition import verify_partial_crossed
from crossmod.groups import cyclic
from crossmod.modules import green_extension
from crossmod.types import CorpusInstance, StrictAction
from crossmod.verify import (
    SUITE_CLASSES,
    BaseCheck,
    FiberCheck,
    TakesakiCheck,
    TorusCheck,
    library_self_checks,
    run_suite,
)


class FailingCheck(BaseCheck):
    """A suite that always fails, for exercising the error paths."""

    name = "failing"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for every instance."""
        return True

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Fail with a detail."""
        return {"passed": False, "reason": "always"}


class ForeignExtensionCheck(BaseCheck):
    """A partial suite run against an extension of another crossed module."""

    name = "foreign-extension"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for every instance."""
        return True

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Verify against the Green extension of Z/4."""
        return {"passed": verify_partial_crossed(act, green_extension(cyclic(4), [0, 2]))}


def test_suite_classes() -> None:
    """Test that every suite name maps to a check with that name."""
    assert len(SUITE_CLASSES) == 9
    for name, cls in SUITE_CLASSES.items():
        assert cls.name == name


def test_torus_suite() -> None:
    """Test that the torus suite passes on the torus and skips other instances."""
    results = run_suite("torus", ["trivial", "finite-torus-2"], show_progress=False)
    assert [(r.instance, r.status) for r in results] == [
        ("finite-torus-2", "passed"),
        ("trivial", "skipped"),
    ]
    assert results[0].details["dimension_vector"] == [2]


def test_skip_lists_are_honoured() -> None:
    """Test that instances marking a suite as too heavy are skipped."""
    assert TakesakiCheck().check("finite-torus-3").status == "skipped"


def test_fiber_suite_needs_two_abelian() -> None:
    """Test that the fibre suite skips crossed modules with a non-trivial action."""
    check = FiberCheck(tol=1e-9, seed=1)
    assert check.check("thin-s3").status == "skipped"
    result = check.check("finite-torus-2")
    assert result.status == "passed"
    assert result.details["fiber_dimensions"] == [4, 4]


def test_failing_check() -> None:
    """Test that a failed verdict keeps the remaining details."""
    result = FailingCheck().check("trivial")
    assert result.status == "failed"
    assert result.details == {"reason": "always"}


def test_check_records_library_errors() -> None:
    """Test that an error raised inside a check is recorded with its class."""
    result = ForeignExtensionCheck().check("finite-torus-2")
    assert result.status == "failed"
    assert result.details["error"] == "Mismatch"
    assert "witness" in result.details


def test_check_batch_sorts_names() -> None:
    """Test that batches come back sorted by instance name."""
    results = TorusCheck()(["finite-torus-3", "finite-torus-2"], show_progress=False)
    assert [r.instance for r in results] == ["finite-torus-2", "finite-torus-3"]
    assert all(r.status == "passed" for r in results)


def test_parallel_batch() -> None:
    """Test that a worker pool gives the same results as a sequential run."""
    names = ["finite-torus-2", "group-z2-swap", "trivial"]
    sequential = TorusCheck(workers=1)(names, show_progress=False)
    parallel = TorusCheck(workers=2)(names, show_progress=False)
    assert [r.to_dict() for r in parallel] == [r.to_dict() for r in sequential]


def test_library_self_checks() -> None:
    """Test the checks that do not depend on a corpus instance."""
    result = library_self_checks(1e-9, 42)
    assert result.instance == "(library)"
    assert result.status == "passed"
    assert result.details["group_algebra_s3"] == [1, 1, 2]


def test_algebra_suite_includes_library_checks() -> None:
    """Test that the algebra suite appends the library result."""
    results = run_suite("algebra", ["trivial"], show_progress=False)
    assert [r.instance for r in results] == ["trivial", "(library)"]
    assert all(r.passed for r in results)


def test_unknown_suite() -> None:
    """Test that an unknown suite raises a ValueError."""
    with pytest.raises(ValueError, match="Unknown suite"):
        run_suite("nothing", show_progress=False)


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["partial", "equivalence", "universal"])
def test_suites_on_small_instances(suite: str) -> None:
    """Test that the structural suites pass on small instances."""
    results = run_suite(suite, ["trivial", "group-z2-swap", "finite-torus-2"], show_progress=False)
    assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]


def test_equivalence_suite_uses_proper_subgroups() -> None:
    """Test that the torus is divided by all of H and restricted to the trivial subgroup."""
    (result,) = run_suite("equivalence", ["finite-torus-2"], show_progress=False)
    assert result.passed, result.to_dict()
    assert result.details["N"] == [0, 1]
    assert result.details["G1"] == [0]


def test_universal_suite_factors_a_conjugate() -> None:
    """Test that a representation conjugated by δ₁ factors through Ad(δ₁) on the torus."""
    (result,) = run_suite("universal", ["finite-torus-2"], show_progress=False)
    assert result.passed, result.to_dict()
    assert result.details["identity"] and result.details["conjugate"]
    assert result.details["conjugated_by"] == 1
