"""Render reports on the terminal with rich."""

from typing import Any, Dict, List, Optional, Tuple

from crossmod.types import Report

STATUS_STYLES = {
    "passed": "bold green",
    "failed": "bold red",
    "skipped": "dim",
}


def _flatten(data: Dict[str, Any], prefix: str = "") -> List[Tuple[str, Any]]:
    rows: List[Tuple[str, Any]] = []
    for key in sorted(data):
        value = data[key]
        label = f"{prefix}{key}"
        if isinstance(value, dict) and value:
            rows.extend(_flatten(value, f"{label}."))
        else:
            rows.append((label, value))
    return rows


class ReportPrinter:
    """Print crossmod reports as rich tables.

    The human format is derived from the same dictionary the JSON format
    writes, so both carry the same information.

    Methods:
        print(report): Print the report to the console.

    """

    def __init__(self, console: Optional[Any] = None) -> None:
        """Initialize the printer.

        Args:
            console: A ``rich.console.Console``; a new one writing to stdout when None.

        """
        # Lazy import the dependencies
        self._import_dependencies()
        self.console = console if console is not None else Console()  # type: ignore

    def _import_dependencies(self) -> None:
        """Import the dependencies."""
        try:
            global Console, Table
            from rich.console import Console
            from rich.table import Table
        except ImportError as e:
            raise ImportError(
                f"Could not import dependencies with error: {e}. Please install rich with `pip install rich`"
            )

    def _format(self, value: Any) -> str:
        if isinstance(value, bool):
            return "[green]yes[/green]" if value else "[red]no[/red]"
        if isinstance(value, float):
            return f"{value:.6g}"
        if isinstance(value, list):
            return "[" + ", ".join(self._format(v) for v in value) + "]"
        return str(value)

    def _status(self, status: str) -> str:
        style = STATUS_STYLES.get(status, "")
        return f"[{style}]{status}[/{style}]" if style else status

    def _results_table(self, results: List[Dict[str, Any]]) -> Any:
        table = Table(title="Checks")  # type: ignore
        table.add_column("Suite")
        table.add_column("Instance")
        table.add_column("Status")
        table.add_column("Details")
        for result in results:
            details = ", ".join(
                f"{k}={self._format(v)}" for k, v in sorted(result["details"].items())
                if not isinstance(v, (dict, list))
            )
            table.add_row(result["suite"], result["instance"], self._status(result["status"]), details)
        return table

    def _steps_table(self, steps: List[Dict[str, Any]]) -> Any:
        table = Table(title="Decomposition")  # type: ignore
        table.add_column("Step")
        table.add_column("Dim", justify="right")
        table.add_column("Dimension vector")
        table.add_column("Ideal", justify="right")
        table.add_column("Checks")
        for step in steps:
            checks = ", ".join(f"{k}={self._format(v)}" for k, v in sorted(step["checks"].items()))
            ideal = step.get("ideal_dim")
            table.add_row(
                step["name"],
                str(step["dim"]),
                self._format(step["dimension_vector"]),
                "" if ideal is None else str(ideal),
                checks,
            )
        return table

    def _instances_table(self, instances: List[Dict[str, Any]]) -> Any:
        table = Table(title="Corpus")  # type: ignore
        table.add_column("Name")
        table.add_column("Valid")
        table.add_column("Description")
        for instance in instances:
            valid = self._format(instance["valid"])
            if "error" in instance:
                valid += f" ({instance['error']})"
            table.add_row(instance["name"], valid, instance["description"])
        return table

    def _values_table(self, data: Dict[str, Any]) -> Any:
        table = Table(show_header=False)  # type: ignore
        table.add_column("Key", style="bold")
        table.add_column("Value")
        for key, value in _flatten(data):
            table.add_row(key, self._format(value))
        return table

    def print(self, report: Report) -> None:
        """Print the report to the console."""
        data = dict(report.data)
        verdict = self._status("passed" if report.passed else "failed")
        self.console.print(f"[bold]crossmod {report.command}[/bold] {verdict}")
        if "results" in data:
            self.console.print(self._results_table(data.pop("results")))
        if "steps" in data:
            self.console.print(self._steps_table(data.pop("steps")))
        if "instances" in data:
            self.console.print(self._instances_table(data.pop("instances")))
        if data:
            self.console.print(self._values_table(data))

    def __call__(self, report: Report) -> None:
        """Print the report to the console."""
        self.print(report)

    def __repr__(self) -> str:
        """Return the string representation of the printer."""
        return "ReportPrinter()"
