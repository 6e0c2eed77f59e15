"""JSONPorter to write Reports as JSON or JSON lines."""

import json
import sys
from io import StringIO
from pathlib import Path
from typing import Any, List, Optional, Sequence, TextIO, Union

import numpy as np

from crossmod.types import Report

from .base import BasePorter

# Digits kept for floats, so that repeated runs give identical bytes.
FLOAT_DIGITS = 10


def jsonable(value: Any, digits: int = FLOAT_DIGITS) -> Any:
    """Return ``value`` with numpy scalars, arrays and tuples turned into JSON types.

    Floats are rounded to ``digits`` places and complex numbers become
    ``[re, im]`` pairs. Dictionary keys are turned into strings.
    """
    if isinstance(value, dict):
        return {str(k): jsonable(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v, digits) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist(), digits)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        rounded = round(float(value), digits)
        return 0.0 if rounded == 0 else rounded
    if isinstance(value, (complex, np.complexfloating)):
        return [jsonable(value.real, digits), jsonable(value.imag, digits)]
    if value is None or isinstance(value, str):
        return value
    return str(value)


class JSONPorter(BasePorter):
    """Porter to write Reports as JSON for storage or for other tools."""

    def __init__(self, lines: bool = False) -> None:
        """Initialize the JSONPorter.

        Args:
            lines: Write one compact report per line instead of an indented document.

        """
        super().__init__()
        self.lines = lines

        # Setting the default indent to 4, as it's the most common.
        self.indent = 4

    def _export_lines(self, reports: Sequence[Report], stream: TextIO) -> None:
        """Write one report per line."""
        for report in reports:
            stream.write(json.dumps(jsonable(report.to_dict()), sort_keys=True) + "\n")

    def _export_json(self, reports: Sequence[Report], stream: TextIO) -> None:
        """Write a single report as an object, several as a list."""
        payload: Union[Any, List[Any]] = [jsonable(r.to_dict()) for r in reports]
        if len(reports) == 1:
            payload = payload[0]
        stream.write(json.dumps(payload, indent=self.indent, sort_keys=True) + "\n")

    def dumps(self, reports: Sequence[Report]) -> str:
        """Return the reports as a string in this porter's format."""
        buffer = StringIO()
        self._write(reports, buffer)
        return buffer.getvalue()

    def _write(self, reports: Sequence[Report], stream: TextIO) -> None:
        if self.lines:
            self._export_lines(reports, stream)
        else:
            self._export_json(reports, stream)

    def export(  # type: ignore[override]
        self, reports: Sequence[Report], file: Optional[Union[str, Path]] = None
    ) -> None:
        """Export the Reports as JSON.

        Args:
            reports: The reports to export.
            file: The file to write; stdout when None.

        """
        if file is None:
            self._write(reports, sys.stdout)
            return
        with open(file, "w", encoding="utf-8") as f:
            self._write(reports, f)
