"""Numerical settings shared by every crossmod computation."""

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass
class Settings:
    """Global numerical settings.

    Attributes:
        tolerance (float): Relative threshold for every rank and zero decision.
        seed (int): Seed for the pseudo-random central elements used by Wedderburn.

    """

    tolerance: float = 1e-9
    seed: int = 42

    def __post_init__(self) -> None:
        """Validate the settings."""
        if not self.tolerance > 0:
            raise ValueError("Tolerance must be a positive number.")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError("Seed must be a non-negative integer.")

    def to_dict(self) -> dict:
        """Return the settings as a dictionary."""
        return {"tolerance": self.tolerance, "seed": self.seed}


settings = Settings()


def resolve_tolerance(tol: Optional[float] = None) -> float:
    """Return ``tol`` if given, otherwise the active tolerance."""
    return settings.tolerance if tol is None else tol


@contextmanager
def use_settings(
    tolerance: Optional[float] = None, seed: Optional[int] = None
) -> Iterator[Settings]:
    """Temporarily replace the active settings.

    Args:
        tolerance: New tolerance, or None to keep the current one.
        seed: New seed, or None to keep the current one.

    Yields:
        Settings: The active settings inside the block.

    """
    previous = Settings(settings.tolerance, settings.seed)
    updated = Settings(
        tolerance=previous.tolerance if tolerance is None else tolerance,
        seed=previous.seed if seed is None else seed,
    )
    settings.tolerance, settings.seed = updated.tolerance, updated.seed
    try:
        yield settings
    finally:
        settings.tolerance, settings.seed = previous.tolerance, previous.seed
