"""Module for crossmod's Porters.

Porters _export_ reports to disk or to a stream. They make the implicit
assumption that the output is read by people or by other tools, never loaded
back into crossmod.
"""

from abc import ABC, abstractmethod
from typing import Any, Sequence

from crossmod.types import Report


class BasePorter(ABC):
    """Abstract base class for crossmod's Porters.

    The main method to implement is `export`, which takes a list of Reports
    and a destination and writes them in the porter's format.
    """

    @abstractmethod
    def export(self, reports: Sequence[Report], **kwargs: Any) -> None:
        """Export the reports to the desired format.

        Args:
            reports: The reports to export.
            **kwargs: Additional keyword arguments.

        Raises:
            NotImplementedError: If the subclass does not implement this method.

        """
        raise NotImplementedError("Subclasses must implement this method.")

    def __call__(self, reports: Sequence[Report], **kwargs: Any) -> None:
        """Export the reports to the desired format."""
        return self.export(reports, **kwargs)
