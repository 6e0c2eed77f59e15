"""Rank decisions by singular values.

Every rank decision in crossmod goes through this module: a singular value
counts as nonzero when it exceeds ``tol · max(1, largest singular value)``.
"""

from typing import Optional

import numpy as np
from scipy import linalg as sla

from crossmod.config import resolve_tolerance


def _cutoff(singular_values: np.ndarray, tol: float) -> float:
    return tol * max(1.0, float(singular_values.max(initial=0.0)))


def column_space(matrix: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    """Return an orthonormal basis of the column span of ``matrix``."""
    tol = resolve_tolerance(tol)
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim == 1:
        a = a[:, None]
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=np.complex128)
    u, s, _ = sla.svd(a, full_matrices=False, lapack_driver="gesvd")
    rank = int((s > _cutoff(s, tol)).sum())
    return u[:, :rank]


def null_space(matrix: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    """Return an orthonormal basis of the kernel of ``matrix``."""
    tol = resolve_tolerance(tol)
    a = np.asarray(matrix, dtype=np.complex128)
    rows, cols = a.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    if rows == 0:
        return np.eye(cols, dtype=np.complex128)
    if rows < cols:
        a = np.vstack([a, np.zeros((cols - rows, cols), dtype=np.complex128)])
    _, s, vh = sla.svd(a, full_matrices=False, lapack_driver="gesvd")
    rank = int((s > _cutoff(s, tol)).sum())
    return vh[rank:].conj().T


def rank(matrix: np.ndarray, tol: Optional[float] = None) -> int:
    """Return the numerical rank of ``matrix``."""
    a = np.asarray(matrix, dtype=np.complex128)
    if a.size == 0:
        return 0
    s = sla.svdvals(a)
    return int((s > _cutoff(s, resolve_tolerance(tol))).sum())


def solve_least_squares(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Return the least-squares solution of ``a @ x = b``."""
    solution, *_ = sla.lstsq(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))
    return solution
