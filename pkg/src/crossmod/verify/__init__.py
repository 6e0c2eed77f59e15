"""Verification suites over the bundled corpus."""

from typing import List, Optional, Sequence

from crossmod.types import SUITES, CheckResult

from .base import BaseCheck
from .suites import (
    SUITE_CLASSES,
    AlgebraCheck,
    DecompositionCheck,
    EquivalenceCheck,
    FiberCheck,
    PartialCheck,
    RoundtripCheck,
    TakesakiCheck,
    TorusCheck,
    UniversalCheck,
    library_self_checks,
)


def run_suite(
    suite: str = "all",
    instances: Optional[Sequence[str]] = None,
    tol: Optional[float] = None,
    seed: Optional[int] = None,
    workers: int = 1,
    show_progress: bool = True,
) -> List[CheckResult]:
    """Run one suite, or every suite for ``"all"``, over the corpus.

    Args:
        suite: A name from ``SUITES``.
        instances: Instance names; the whole corpus when None.
        tol: Tolerance; defaults to the active setting.
        seed: Seed for Wedderburn sampling; defaults to the active setting.
        workers: Worker processes per suite.
        show_progress: Whether to show progress bars.

    Returns:
        List[CheckResult]: Results grouped by suite in ``SUITES`` order, then by instance name.

    Raises:
        ValueError: If the suite is unknown.

    """
    if suite not in SUITES:
        raise ValueError(f"Unknown suite '{suite}'. Choose from {list(SUITES)}.")
    names = [name for name in SUITES if name != "all"] if suite == "all" else [suite]
    results: List[CheckResult] = []
    for name in names:
        check = SUITE_CLASSES[name](tol, seed, workers)
        results.extend(check(instances, show_progress))
        if name == "algebra":
            results.append(library_self_checks(check.tol, check.seed))
    return results


__all__ = [
    "AlgebraCheck",
    "BaseCheck",
    "DecompositionCheck",
    "EquivalenceCheck",
    "FiberCheck",
    "PartialCheck",
    "RoundtripCheck",
    "SUITE_CLASSES",
    "TakesakiCheck",
    "TorusCheck",
    "UniversalCheck",
    "library_self_checks",
    "run_suite",
]
