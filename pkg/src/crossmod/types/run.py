"""Run configuration for the command line."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, Dict, Optional, Tuple, Union

if TYPE_CHECKING:
    from crossmod.types.bundle import StrictAction
    from crossmod.types.extension import StrictExtension

COMMANDS = ("validate", "invariants", "crossed-product", "decompose", "verify", "corpus")
FORMATS = ("human", "json")
SUITES = (
    "fiber",
    "torus",
    "takesaki",
    "roundtrip",
    "partial",
    "decomposition",
    "equivalence",
    "universal",
    "algebra",
    "all",
)


@dataclass
class RunConfig:
    """One invocation of the crossmod command line.

    Attributes:
        command (str): One of ``COMMANDS``.
        input_path (Optional[Path]): Descriptor file, for commands that read one.
        tolerance (float): Numerical tolerance.
        seed (int): Seed for Wedderburn sampling.
        output (Optional[Path]): Report destination; stdout when None.
        format (str): ``"human"`` or ``"json"``.
        suite (Optional[str]): Suite for ``verify``; ``"all"`` when None.
        workers (int): Worker processes for suite runs.

    """

    command: str
    input_path: Optional[Union[str, Path]] = None
    tolerance: float = 1e-9
    seed: int = 42
    output: Optional[Union[str, Path]] = None
    format: str = "human"
    suite: Optional[str] = None
    workers: int = 1

    def __post_init__(self) -> None:
        """Validate the configuration."""
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command '{self.command}'. Choose from {list(COMMANDS)}.")
        if self.format not in FORMATS:
            raise ValueError(f"Unknown format '{self.format}'. Choose from {list(FORMATS)}.")
        if not self.tolerance > 0:
            raise ValueError("Tolerance must be a positive number.")
        if self.seed < 0:
            raise ValueError("Seed must be a non-negative integer.")
        if self.workers < 1:
            raise ValueError("Workers must be at least 1.")
        if self.suite is not None and self.suite not in SUITES:
            raise ValueError(f"Unknown suite '{self.suite}'. Choose from {list(SUITES)}.")
        if self.command in ("validate", "invariants", "crossed-product", "decompose"):
            if self.input_path is None:
                raise ValueError(f"Command '{self.command}' requires --input.")
        if self.input_path is not None:
            self.input_path = Path(self.input_path)
        if self.output is not None:
            self.output = Path(self.output)

    def to_dict(self) -> Dict[str, Any]:
        """Return the configuration as a dictionary."""
        return {
            "command": self.command,
            "input": str(self.input_path) if self.input_path else None,
            "tolerance": self.tolerance,
            "seed": self.seed,
            "format": self.format,
            "suite": self.suite,
        }


@dataclass(frozen=True)
class CorpusInstance:
    """A named strict action bundled with crossmod.

    Attributes:
        name (str): Unique identifier, used on the command line and in reports.
        description (str): One line for humans.
        build (Callable[[], StrictAction]): Builds and validates the action.
        extension (Optional[Callable[[StrictAction], StrictExtension]]): A
            strict extension whose middle term is the acting crossed module.
        automorphism (Optional[int]): An element g whose α_g is an equivariant
            automorphism, used for naturality checks.
        skip (Tuple[str, ...]): Suites too expensive for this instance.

    """

    name: str
    description: str
    build: Callable[[], "StrictAction"]
    extension: Optional[Callable[["StrictAction"], "StrictExtension"]] = None
    automorphism: Optional[int] = None
    skip: Tuple[str, ...] = ()

    def __repr__(self) -> str:
        """Return a string representation of the instance."""
        return f"CorpusInstance(name={self.name!r})"


STATUSES = ("passed", "failed", "skipped")


@dataclass
class CheckResult:
    """Outcome of one suite on one corpus instance.

    Attributes:
        suite (str): The suite that ran.
        instance (str): The corpus instance checked.
        status (str): ``"passed"``, ``"failed"`` or ``"skipped"``.
        details (Dict[str, Any]): Named booleans, dimension vectors and errors.

    """

    suite: str
    instance: str
    status: str
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate the status."""
        if self.status not in STATUSES:
            raise ValueError(f"Unknown status '{self.status}'. Choose from {list(STATUSES)}.")

    @property
    def passed(self) -> bool:
        """Return True unless the check failed."""
        return self.status != "failed"

    def to_dict(self) -> Dict[str, Any]:
        """Return the result as a dictionary."""
        return {
            "suite": self.suite,
            "instance": self.instance,
            "status": self.status,
            "details": dict(self.details),
        }


@dataclass
class Report:
    """Everything one command line run produced.

    Attributes:
        command (str): The command that ran.
        passed (bool): Whether every requested check passed.
        data (Dict[str, Any]): Command-specific content.
        config (Dict[str, Any]): The run configuration, for provenance.
        schema (int): Report schema version.

    """

    command: str
    passed: bool
    data: Dict[str, Any] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)
    schema: int = 1

    def to_dict(self) -> Dict[str, Any]:
        """Return the report as a dictionary."""
        return {
            "schema": self.schema,
            "command": self.command,
            "passed": self.passed,
            "config": dict(self.config),
            "data": dict(self.data),
        }
