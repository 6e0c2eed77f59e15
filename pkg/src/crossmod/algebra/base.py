"""Validation of *-algebras and *-homomorphisms given by structure constants."""

from typing import Any, Optional

import numpy as np
from scipy import linalg as sla

from crossmod.algebra.linalg import solve_least_squares
from crossmod.config import resolve_tolerance
from crossmod.errors import (
    AlgebraError,
    BadInvolution,
    NoUnit,
    NotAssociative,
    NotCStar,
    StarHomError,
)
from crossmod.types import StarAlgebra, StarHom


def _scale(*arrays: np.ndarray) -> float:
    return max([1.0] + [float(np.abs(a).max(initial=0.0)) for a in arrays])


def check_associative(mul: np.ndarray, tol: Optional[float] = None) -> None:
    """Check ``(eᵢeⱼ)eₖ = eᵢ(eⱼeₖ)`` on every basis triple.

    Raises:
        NotAssociative: With the first offending triple.

    """
    tol = resolve_tolerance(tol)
    d = mul.shape[0]
    limit = tol * _scale(mul) ** 2 * max(1, d)
    for i in range(d):
        lhs = np.tensordot(mul[i], mul, axes=(1, 0))
        rhs = np.tensordot(mul, mul[i], axes=(2, 0))
        bad = np.argwhere(np.abs(lhs - rhs) > limit)
        if bad.size:
            j, k = int(bad[0][0]), int(bad[0][1])
            raise NotAssociative(
                f"Product is not associative on basis triple ({i}, {j}, {k}).", (i, j, k)
            )


def check_involution(mul: np.ndarray, star: np.ndarray, tol: Optional[float] = None) -> None:
    """Check ``a** = a`` and ``(eᵢeⱼ)* = eⱼ*eᵢ*`` on basis elements.

    Raises:
        BadInvolution: With the offending basis element or pair.

    """
    tol = resolve_tolerance(tol)
    d = mul.shape[0]
    limit = tol * _scale(mul, star) ** 3 * max(1, d)
    twice = star @ np.conj(star)
    bad = np.argwhere(np.abs(twice - np.eye(d)) > limit)
    if bad.size:
        j = int(bad[0][1])
        raise BadInvolution(f"Involution is not of order two on basis element {j}.", (j,))
    lhs = np.einsum("ijk,mk->ijm", np.conj(mul), star)
    rhs = np.einsum("aj,bi,abm->ijm", star, star, mul, optimize=True)
    bad = np.argwhere(np.abs(lhs - rhs) > limit)
    if bad.size:
        i, j = int(bad[0][0]), int(bad[0][1])
        raise BadInvolution(
            f"Involution does not reverse the product of basis pair ({i}, {j}).", (i, j)
        )


def solve_unit(mul: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    """Return the two-sided unit of the algebra with structure constants ``mul``.

    Raises:
        NoUnit: If no element acts as the identity on both sides.

    """
    tol = resolve_tolerance(tol)
    d = mul.shape[0]
    left = mul.reshape(d, d * d).T
    right = mul.transpose(1, 0, 2).reshape(d, d * d).T
    target = np.eye(d).reshape(-1)
    system = np.vstack([left, right])
    unit = solve_least_squares(system, np.concatenate([target, target]))
    residual = float(np.abs(system @ unit - np.concatenate([target, target])).max())
    if residual > tol * _scale(mul) * max(1, d) * 10:
        raise NoUnit(f"No two-sided unit exists (residual {residual:.3e}).")
    return unit


def check_unit(mul: np.ndarray, unit: np.ndarray, tol: Optional[float] = None) -> None:
    """Check that ``unit`` is a two-sided identity.

    Raises:
        NoUnit: With the first basis element it fails on.

    """
    tol = resolve_tolerance(tol)
    d = mul.shape[0]
    limit = tol * _scale(mul, unit) ** 2 * max(1, d)
    left = np.einsum("i,ijk->jk", unit, mul)
    right = np.einsum("j,ijk->ik", unit, mul)
    for side, matrix in (("left", left), ("right", right)):
        bad = np.argwhere(np.abs(matrix - np.eye(d)) > limit)
        if bad.size:
            j = int(bad[0][0])
            raise NoUnit(f"Given unit is not a {side} identity on basis element {j}.", (j,))


def check_cstar(algebra: StarAlgebra, tol: Optional[float] = None) -> float:
    """Check that the trace form ``trace(L_{a*b})`` is positive definite.

    Returns:
        float: The smallest eigenvalue of the trace form.

    Raises:
        NotCStar: With the offending eigenvalue.

    """
    tol = resolve_tolerance(tol)
    gram = algebra.trace_form
    scale = _scale(gram)
    if np.abs(gram - gram.conj().T).max(initial=0.0) > tol * scale * 10:
        raise NotCStar("Trace form is not Hermitian.")
    eigenvalues = sla.eigvalsh((gram + gram.conj().T) / 2)
    smallest = float(eigenvalues[0])
    if smallest <= tol * scale:
        raise NotCStar(
            f"Trace form is not positive definite (eigenvalue {smallest:.3e}).", (smallest,)
        )
    return smallest


def make_algebra(
    mul: Any,
    star: Any,
    unit: Optional[Any] = None,
    name: str = "",
    tol: Optional[float] = None,
) -> StarAlgebra:
    """Validate structure constants and return the C*-algebra they define.

    Args:
        mul: Structure constants, ``eᵢeⱼ = Σₖ mul[i, j, k]·eₖ``.
        star: ``star[:, j]`` holds the coefficients of ``eⱼ*``.
        unit: Coefficients of the unit; solved for when omitted.
        name: Optional label.
        tol: Tolerance; defaults to the active setting.

    Returns:
        StarAlgebra: The validated algebra. The zero algebra is allowed.

    Raises:
        AlgebraError: If the arrays are badly shaped.
        NotAssociative: With the offending basis triple.
        BadInvolution: If the involution is not an anti-multiplicative involution.
        NoUnit: If no unit exists or the given one is wrong.
        NotCStar: If the trace form is not positive definite.

    """
    mul = np.asarray(mul, dtype=np.complex128)
    star = np.asarray(star, dtype=np.complex128)
    if mul.ndim != 3 or len(set(mul.shape)) != 1:
        raise AlgebraError("Structure constants must have shape (d, d, d).")
    d = mul.shape[0]
    if star.shape != (d, d):
        raise AlgebraError(f"Involution matrix must have shape ({d}, {d}).")
    if d == 0:
        return StarAlgebra(mul, star, np.zeros(0), name)
    check_associative(mul, tol)
    check_involution(mul, star, tol)
    if unit is None:
        unit_vec = solve_unit(mul, tol)
    else:
        unit_vec = np.asarray(unit, dtype=np.complex128).reshape(-1)
        if unit_vec.shape != (d,):
            raise AlgebraError(f"Unit must have {d} coefficients.")
        check_unit(mul, unit_vec, tol)
    algebra = StarAlgebra(mul, star, unit_vec, name)
    check_cstar(algebra, tol)
    return algebra


def make_star_hom(
    src: StarAlgebra, dst: StarAlgebra, matrix: Any, tol: Optional[float] = None
) -> StarHom:
    """Validate a linear map as a unital *-homomorphism.

    Args:
        src: Domain.
        dst: Codomain.
        matrix: Shape ``(dst.dim, src.dim)``.
        tol: Tolerance; defaults to the active setting.

    Returns:
        StarHom: The validated map.

    Raises:
        StarHomError: Naming the violated condition and the witness basis pair.

    """
    tol = resolve_tolerance(tol)
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (dst.dim, src.dim):
        raise StarHomError(f"Matrix must have shape ({dst.dim}, {src.dim}), got {m.shape}.")
    limit = tol * _scale(m, src.mul, dst.mul) ** 3 * max(1, src.dim, dst.dim)

    image_of_product = np.einsum("ijk,lk->ijl", src.mul, m)
    product_of_images = np.einsum("ai,bj,abm->ijm", m, m, dst.mul, optimize=True)
    bad = np.argwhere(np.abs(image_of_product - product_of_images) > limit)
    if bad.size:
        i, j = int(bad[0][0]), int(bad[0][1])
        raise StarHomError(f"Map is not multiplicative on basis pair ({i}, {j}).", (i, j))

    bad = np.argwhere(np.abs(m @ src.star - dst.star @ np.conj(m)) > limit)
    if bad.size:
        j = int(bad[0][1])
        raise StarHomError(f"Map does not preserve the adjoint of basis element {j}.", (j,))

    if np.abs(m @ src.unit - dst.unit).max(initial=0.0) > limit:
        raise StarHomError("Map is not unital.")
    return StarHom(src, dst, m)


def identity_star_hom(algebra: StarAlgebra) -> StarHom:
    """Return the identity map of ``algebra``."""
    return StarHom(algebra, algebra, np.eye(algebra.dim))


def compose_star(second: StarHom, first: StarHom) -> StarHom:
    """Return ``second ∘ first``.

    Raises:
        AlgebraError: If the algebras in the middle differ in dimension.

    """
    if first.dst.dim != second.src.dim:
        raise AlgebraError("Cannot compose: codomain and domain differ.")
    return StarHom(first.src, second.dst, second.matrix @ first.matrix)


def is_central(algebra: StarAlgebra, x: np.ndarray, tol: Optional[float] = None) -> bool:
    """Return True if ``x`` commutes with every basis element."""
    tol = resolve_tolerance(tol)
    return algebra.commutator_norm(x) <= tol * _scale(algebra.mul, x) ** 2 * max(1, algebra.dim)
