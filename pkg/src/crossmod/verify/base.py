"""Base class for all verification suites."""

import warnings
from abc import ABC, abstractmethod
from multiprocessing import Pool, cpu_count
from typing import Any, Dict, List, Optional, Sequence

from tqdm import tqdm

from crossmod.config import resolve_tolerance, settings, use_settings
from crossmod.corpus import bundled_corpus, get_instance
from crossmod.errors import CrossmodError
from crossmod.types import CheckResult, CorpusInstance, StrictAction

BAR_FORMAT = (
    "{desc} ch{bar:20}ck {percentage:3.0f}% • {n_fmt}/{total_fmt} instances "
    "[{elapsed}<{remaining}, {rate_fmt}]"
)


class BaseCheck(ABC):
    """Base class for all suites.

    A suite looks at one corpus instance at a time. ``applies`` decides
    whether the instance is in scope, ``run`` returns named details with a
    ``passed`` entry. Errors raised by the library turn into failed results
    carrying the error name and witness.
    """

    name: str = ""

    def __init__(
        self, tol: Optional[float] = None, seed: Optional[int] = None, workers: int = 1
    ) -> None:
        """Initialize the suite.

        Args:
            tol: Tolerance; defaults to the active setting.
            seed: Seed for Wedderburn sampling; defaults to the active setting.
            workers: Worker processes for batch runs; 1 runs sequentially.

        """
        self.tol = resolve_tolerance(tol)
        self.seed = settings.seed if seed is None else seed
        self.workers = workers

    def __repr__(self) -> str:
        """Return a string representation of the suite."""
        return f"{self.__class__.__name__}(tol={self.tol}, seed={self.seed})"

    def __call__(
        self, instances: Optional[Sequence[str]] = None, show_progress: bool = True
    ) -> List[CheckResult]:
        """Run the suite on the named instances, or on the whole corpus."""
        return self.check_batch(instances, show_progress)

    def _get_optimal_worker_count(self) -> int:
        """Get the number of workers for parallel runs."""
        try:
            return min(self.workers, max(1, cpu_count() * 3 // 4))
        except Exception as e:
            warnings.warn(f"Proceeding with 1 worker. Error calculating optimal worker count: {e}")
            return 1

    @abstractmethod
    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True if the suite is meaningful for this instance."""
        pass

    @abstractmethod
    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Run the suite on one instance.

        Returns:
            Dict[str, Any]: Named details; ``passed`` holds the verdict.

        """
        pass

    def check(self, name: str) -> CheckResult:
        """Build the instance called ``name`` and run the suite on it."""
        instance = get_instance(name)
        with use_settings(tolerance=self.tol, seed=self.seed):
            try:
                act = instance.build()
                if self.name in instance.skip or not self.applies(instance, act):
                    return CheckResult(self.name, name, "skipped")
                details = self.run(instance, act)
            except CrossmodError as error:
                details = {
                    "passed": False,
                    "error": type(error).__name__,
                    "witness": list(error.witness),
                }
        status = "passed" if details.pop("passed") else "failed"
        return CheckResult(self.name, name, status, details)

    def _sequential_batch_processing(
        self, names: Sequence[str], show_progress: bool = True
    ) -> List[CheckResult]:
        """Check a batch of instances one after another."""
        return [
            self.check(name)
            for name in tqdm(
                names,
                desc=self.name,
                disable=not show_progress,
                unit="instance",
                bar_format=BAR_FORMAT,
                ascii=" o",
            )
        ]

    def _parallel_batch_processing(
        self, names: Sequence[str], show_progress: bool = True
    ) -> List[CheckResult]:
        """Check a batch of instances on a worker pool; results keep the input order."""
        num_workers = self._get_optimal_worker_count()
        with Pool(processes=num_workers) as pool:
            results = []
            with tqdm(
                total=len(names),
                desc=self.name,
                disable=not show_progress,
                unit="instance",
                bar_format=BAR_FORMAT,
                ascii=" o",
            ) as progress_bar:
                for result in pool.imap(self.check, names):
                    results.append(result)
                    progress_bar.update()
            return results

    def check_batch(
        self, names: Optional[Sequence[str]] = None, show_progress: bool = True
    ) -> List[CheckResult]:
        """Run the suite on several instances, sorted by name.

        Args:
            names: Instance names; the whole corpus when None.
            show_progress: Whether to show a progress bar.

        Returns:
            List[CheckResult]: One result per instance, in name order.

        """
        if names is None:
            names = [instance.name for instance in bundled_corpus()]
        names = sorted(names)
        if len(names) == 0:
            return []
        if self.workers > 1 and len(names) > 1:
            return self._parallel_batch_processing(names, show_progress)
        return self._sequential_batch_processing(names, show_progress)
