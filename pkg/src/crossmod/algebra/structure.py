"""Centers, Wedderburn decompositions, ideals and quotients."""

import warnings
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg as sla

from crossmod.algebra.base import make_algebra, make_star_hom
from crossmod.algebra.linalg import column_space, null_space
from crossmod.config import resolve_tolerance, settings
from crossmod.errors import (
    DegenerateQuotientWarning,
    NonIntegerBlock,
    NotIdeal,
    WedderburnRetryWarning,
)
from crossmod.types import (
    DimensionVector,
    StarAlgebra,
    StarHom,
    Subspace,
    WedderburnDecomposition,
)

MAX_ATTEMPTS = 5


def center(a: StarAlgebra, tol: Optional[float] = None) -> np.ndarray:
    """Return an orthonormal basis of the center, one element per column."""
    d = a.dim
    if d == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    commutators = a.mul.transpose(1, 2, 0) - a.mul.transpose(0, 2, 1)
    return null_space(commutators.reshape(d * d, d), tol)


def wedderburn(
    a: StarAlgebra, tol: Optional[float] = None, seed: Optional[int] = None
) -> WedderburnDecomposition:
    """Split a C*-algebra into matrix blocks.

    A pseudo-random self-adjoint central element is diagonalized on the
    center; its spectral projections are the minimal central idempotents,
    and the block behind ``pᵢ`` has size ``sqrt(trace(L_{pᵢ}))``.

    Args:
        a: A validated C*-algebra.
        tol: Tolerance; defaults to the active setting.
        seed: Seed of the first sample; defaults to the active setting.

    Returns:
        WedderburnDecomposition: Sorted block sizes, idempotents, the seed used
        and the number of samples drawn.

    Raises:
        NonIntegerBlock: If a block size is not an integer or the sizes do not
            add up, or every sample had a degenerate spectrum.

    """
    tol = resolve_tolerance(tol)
    seed = settings.seed if seed is None else seed
    if a.dim == 0:
        return WedderburnDecomposition(DimensionVector(()), [], seed, 0)
    basis = center(a, tol)
    z = basis.shape[1]

    for attempt in range(MAX_ATTEMPTS):
        rng = np.random.default_rng(seed + attempt)
        x = basis @ (rng.standard_normal(z) + 1j * rng.standard_normal(z))
        h = x + a.adjoint(x)
        restricted = basis.conj().T @ a.left_matrix(h) @ basis
        eigenvalues, eigenvectors = sla.eig(restricted)
        values = np.sort(eigenvalues.real)
        spread = max(1.0, float(np.abs(values).max()))
        if z > 1 and float(np.diff(values).min()) <= 1e-6 * spread:
            warnings.warn(
                f"Degenerate spectrum for seed {seed + attempt}; drawing a new central element.",
                WedderburnRetryWarning,
            )
            continue

        blocks = []
        for j in range(z):
            w = basis @ eigenvectors[:, j]
            scale = np.vdot(w, a.product(w, w)) / np.vdot(w, w)
            p = w / scale
            size_sq = float(np.real(a.trace_functional @ p))
            n = int(round(np.sqrt(max(size_sq, 0.0))))
            if n < 1 or abs(size_sq - n * n) > 1e-6 * max(1.0, size_sq):
                raise NonIntegerBlock(
                    f"Block trace {size_sq:.6f} is not a perfect square.", (size_sq,)
                )
            blocks.append((n, float(eigenvalues[j].real), p))
        blocks.sort(key=lambda item: (item[0], item[1]))
        sizes = DimensionVector(tuple(n for n, _, _ in blocks))
        if sizes.total_dim != a.dim:
            raise NonIntegerBlock(
                f"Block sizes {sizes.to_list()} do not account for dimension {a.dim}."
            )
        return WedderburnDecomposition(
            sizes, [p for _, _, p in blocks], seed + attempt, attempt + 1, basis
        )
    raise NonIntegerBlock(f"No separating central element found in {MAX_ATTEMPTS} attempts.")


def dimension_vector(a: StarAlgebra, tol: Optional[float] = None) -> DimensionVector:
    """Return the Wedderburn dimension vector of ``a``."""
    return wedderburn(a, tol).dimension_vector


def is_isomorphic(a: StarAlgebra, b: StarAlgebra, tol: Optional[float] = None) -> bool:
    """Return True if the algebras have equal dimension vectors."""
    if a.dim != b.dim:
        return False
    return dimension_vector(a, tol) == dimension_vector(b, tol)


def _as_columns(a: StarAlgebra, gens: Sequence[np.ndarray]) -> np.ndarray:
    if len(gens) == 0:
        return np.zeros((a.dim, 0), dtype=np.complex128)
    return np.column_stack([np.asarray(g, dtype=np.complex128).reshape(-1) for g in gens])


def _closure_images(a: StarAlgebra, basis: np.ndarray) -> np.ndarray:
    """Return ``basis`` together with its left, right and adjoint images."""
    d = a.dim
    left = (a.left_stack @ basis).transpose(1, 0, 2).reshape(d, -1)
    right = (a.right_stack @ basis).transpose(1, 0, 2).reshape(d, -1)
    return np.concatenate([basis, left, right, a.star @ basis.conj()], axis=1)


def ideal_generated(
    a: StarAlgebra, gens: Sequence[np.ndarray], tol: Optional[float] = None
) -> Subspace:
    """Return the smallest two-sided *-ideal containing ``gens``.

    The span is closed under left and right multiplication by basis elements
    and under the adjoint until its dimension stops growing, which takes at
    most ``dim a`` rounds.
    """
    current = column_space(_as_columns(a, gens), tol)
    for _ in range(a.dim + 1):
        if current.shape[1] in (0, a.dim):
            break
        grown = column_space(_closure_images(a, current), tol)
        if grown.shape[1] == current.shape[1]:
            break
        current = grown
    return Subspace(current)


def brute_force_ideal(
    a: StarAlgebra, gens: Sequence[np.ndarray], tol: Optional[float] = None
) -> Subspace:
    """Return the span of all ``eᵢ·g·eⱼ``, computed without iteration."""
    columns: List[np.ndarray] = []
    for g in gens:
        g = np.asarray(g, dtype=np.complex128).reshape(-1)
        g_times = a.right_stack @ g  # row j is g·eⱼ
        both = a.left_stack @ g_times.T  # [i, :, j] is eᵢ·g·eⱼ
        columns.append(both.transpose(1, 0, 2).reshape(a.dim, -1))
    if not columns:
        return Subspace(np.zeros((a.dim, 0), dtype=np.complex128))
    return Subspace(column_space(np.concatenate(columns, axis=1), tol))


def is_ideal(a: StarAlgebra, ideal: Subspace, tol: Optional[float] = None) -> bool:
    """Return True if ``ideal`` is closed under basis products and the adjoint."""
    if ideal.dim == 0:
        return True
    return ideal.contains(_closure_images(a, ideal.basis), resolve_tolerance(tol))


def zero_algebra() -> StarAlgebra:
    """Return the zero-dimensional algebra."""
    return StarAlgebra(np.zeros((0, 0, 0)), np.zeros((0, 0)), np.zeros(0), "0")


def quotient_algebra(
    a: StarAlgebra, ideal: Subspace, tol: Optional[float] = None
) -> Tuple[StarAlgebra, StarHom]:
    """Return ``a / ideal`` and the projection onto it.

    The quotient is realized on the orthogonal complement of the ideal, so
    the projection is the adjoint of an isometry.

    Raises:
        NotIdeal: If ``ideal`` is not a two-sided *-ideal.

    """
    tol = resolve_tolerance(tol)
    if ideal.ambient_dim != a.dim or not is_ideal(a, ideal, tol):
        raise NotIdeal("Subspace is not a two-sided *-ideal.")
    complement = null_space(ideal.basis.conj().T, tol)
    q = complement.shape[1]
    projection = complement.conj().T
    if q == 0:
        warnings.warn("Quotient by the whole algebra is zero-dimensional.", DegenerateQuotientWarning)
        zero = zero_algebra()
        return zero, StarHom(a, zero, np.zeros((0, a.dim)))
    mul = np.einsum("ia,jb,ijk,ck->abc", complement, complement, a.mul, projection, optimize=True)
    star = projection @ a.star @ complement.conj()
    name = f"{a.name}/I" if a.name else ""
    quot = make_algebra(mul, star, projection @ a.unit, name, tol)
    return quot, make_star_hom(a, quot, projection, tol)
