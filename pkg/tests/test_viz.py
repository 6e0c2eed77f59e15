"""Tests for the rich report printer."""

from io import StringIO

import pytest
from rich.console import Console

from crossmod.types import Report
from crossmod.utils import ReportPrinter


@pytest.fixture
def buffer() -> StringIO:
    """Return a buffer to print into."""
    return StringIO()


@pytest.fixture
def printer(buffer: StringIO) -> ReportPrinter:
    """Return a printer writing into the buffer without colour."""
    return ReportPrinter(Console(file=buffer, width=120, color_system=None))


def test_printer_repr() -> None:
    """Test the printer representation."""
    assert repr(ReportPrinter()) == "ReportPrinter()"


def test_print_values(printer: ReportPrinter, buffer: StringIO) -> None:
    """Test that nested data is flattened into dotted keys."""
    report = Report("invariants", True, {"pi1": {"order": 2, "abelian": True}, "thin": False})
    printer(report)
    out = buffer.getvalue()
    assert "crossmod invariants passed" in out
    assert "pi1.order" in out
    assert "pi1.abelian" in out
    assert "yes" in out
    assert "no" in out


def test_print_results(printer: ReportPrinter, buffer: StringIO) -> None:
    """Test the table of suite results."""
    results = [
        {"suite": "torus", "instance": "finite-torus-2", "status": "passed", "details": {"ok": True}},
        {"suite": "torus", "instance": "trivial", "status": "skipped", "details": {}},
    ]
    printer.print(Report("verify", False, {"suite": "torus", "results": results}))
    out = buffer.getvalue()
    assert "crossmod verify failed" in out
    assert "finite-torus-2" in out
    assert "skipped" in out
    assert "ok=yes" in out


def test_print_steps(printer: ReportPrinter, buffer: StringIO) -> None:
    """Test the table of decomposition steps."""
    steps = [
        {"name": "fiber", "dim": 1, "dimension_vector": [1], "ideal_dim": 0, "checks": {}},
        {"name": "final", "dim": 2, "dimension_vector": [1, 1], "checks": {"matches_direct": True}},
    ]
    printer.print(Report("decompose", True, {"steps": steps, "success": True}))
    out = buffer.getvalue()
    assert "Decomposition" in out
    assert "[1, 1]" in out
    assert "matches_direct=yes" in out


def test_print_corpus(printer: ReportPrinter, buffer: StringIO) -> None:
    """Test the corpus table, including invalid instances."""
    instances = [
        {"name": "trivial", "description": "(1, 1) acting on ℂ.", "valid": True},
        {"name": "broken", "description": "Broken.", "valid": False, "error": "NotUnitary"},
    ]
    printer.print(Report("corpus", False, {"instances": instances}))
    out = buffer.getvalue()
    assert "Corpus" in out
    assert "NotUnitary" in out
