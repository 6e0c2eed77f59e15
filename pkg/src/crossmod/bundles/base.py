"""Fell bundles over finite groups and crossed modules, and their crossed products."""

from typing import Any, List, Optional, Tuple

import numpy as np
from scipy import linalg as sla

from crossmod.algebra import (
    brute_force_ideal,
    ideal_generated,
    make_algebra,
    quotient_algebra,
    rank,
)
from crossmod.algebra.base import check_associative, check_involution, check_unit
from crossmod.config import resolve_tolerance
from crossmod.errors import (
    AlgebraError,
    EquivarianceViolation,
    GradingViolation,
    Mismatch,
    NotHom,
    NotPositive,
    NotUnitary,
    UnitFiberInvalid,
)
from crossmod.types import (
    CrossedModule,
    FellBundle,
    FellBundleCM,
    FiniteGroup,
    StarAlgebra,
    StarHom,
    Subspace,
)


def _limit(tol: float, *arrays: np.ndarray) -> float:
    scale = max([1.0] + [float(np.abs(a).max(initial=0.0)) for a in arrays])
    return tol * scale**3 * 10


def _check_grading(g: FiniteGroup, grade: np.ndarray, mul: np.ndarray, star: np.ndarray, tol: float) -> None:
    expected = g.table[grade[:, None], grade[None, :]]
    off_grade = grade[None, None, :] != expected[:, :, None]
    bad = np.argwhere(off_grade & (np.abs(mul) > tol))
    if bad.size:
        i, j = int(bad[0][0]), int(bad[0][1])
        raise GradingViolation(
            f"Product of basis elements {i} and {j} leaves the fibre over "
            f"{int(expected[i, j])}.",
            (i, j),
        )
    off_grade = grade[:, None] != g.inverse[grade][None, :]
    bad = np.argwhere(off_grade & (np.abs(star) > tol))
    if bad.size:
        i = int(bad[0][1])
        raise GradingViolation(
            f"Adjoint of basis element {i} leaves the fibre over {int(g.inverse[grade[i]])}.",
            (i,),
        )


def _check_positivity(bundle: FellBundle, tol: float) -> None:
    unit_slice = bundle.fiber_slice(0)
    unit_fiber = bundle.unit_fiber
    tau = unit_fiber.trace_functional
    for x in range(bundle.G.order):
        part = bundle.fiber_slice(x)
        if part.stop == part.start:
            continue
        adjoints = bundle.star[:, part]
        squares = np.einsum("ai,ajk->ijk", adjoints, bundle.mul[:, part, unit_slice], optimize=True)
        gram = squares @ tau
        eigenvalues = sla.eigvalsh((gram + gram.conj().T) / 2)
        if eigenvalues[0] <= tol * max(1.0, float(np.abs(eigenvalues).max())):
            raise NotPositive(
                f"Trace form on the fibre over {x} is not positive definite "
                f"(eigenvalue {eigenvalues[0]:.3e}).",
                (x,),
            )
        for i in range(squares.shape[0]):
            spectrum = sla.eigvals(unit_fiber.left_matrix(squares[i, i]))
            if spectrum.real.min() < -tol * max(1.0, float(np.abs(spectrum).max())) * 10:
                raise NotPositive(
                    f"a*a is not positive for basis element {part.start + i} of the fibre over {x}.",
                    (x, part.start + i),
                )


def _is_saturated(bundle: FellBundle, tol: float) -> bool:
    unit_slice = bundle.fiber_slice(0)
    n1 = bundle.unit_fiber.dim
    for x in range(bundle.G.order):
        left, right = bundle.fiber_slice(x), bundle.fiber_slice(bundle.G.inv(x))
        products = bundle.mul[left, right, unit_slice].reshape(-1, n1)
        if products.shape[0] == 0 or rank(products.T, tol) < n1:
            return False
    return True


def make_fell_bundle(
    G: FiniteGroup,
    fiber_dims: Any,
    mul: Any,
    star: Any,
    name: str = "",
    tol: Optional[float] = None,
) -> FellBundle:
    """Validate a graded algebra as a Fell bundle over G.

    Args:
        G: The grading group.
        fiber_dims: Dimension of each fibre, in element order.
        mul: Structure constants on the total space, basis ordered by grade.
        star: Involution on the total space.
        name: Optional label.
        tol: Tolerance; defaults to the active setting.

    Returns:
        FellBundle: The validated bundle, with saturation computed.

    Raises:
        GradingViolation: If the product or involution leaves the expected fibre.
        UnitFiberInvalid: If the fibre over the identity is not a unital C*-algebra.
        NotPositive: If a fibre fails the positivity checks.
        NotAssociative: If the total product is not associative.
        BadInvolution: If the involution is not an anti-multiplicative involution.
        NoUnit: If the unit of the unit fibre does not act as the identity.

    """
    tol = resolve_tolerance(tol)
    dims = np.asarray(fiber_dims, dtype=np.int64).reshape(-1)
    mul = np.asarray(mul, dtype=np.complex128)
    star = np.asarray(star, dtype=np.complex128)
    if dims.shape != (G.order,) or (dims < 0).any():
        raise GradingViolation("One non-negative fibre dimension per group element is required.")
    d = int(dims.sum())
    if mul.shape != (d, d, d) or star.shape != (d, d):
        raise GradingViolation(f"Total structure arrays must have dimension {d}.")
    grade = np.repeat(np.arange(G.order), dims)
    _check_grading(G, grade, mul, star, tol)

    unit_slice = slice(0, int(dims[0]))
    try:
        unit_fiber = make_algebra(
            mul[unit_slice, unit_slice, unit_slice], star[unit_slice, unit_slice], tol=tol
        )
    except AlgebraError as error:
        raise UnitFiberInvalid(f"Fibre over the identity is invalid: {error}") from error
    if unit_fiber.dim == 0:
        raise UnitFiberInvalid("Fibre over the identity must be non-zero.")

    check_associative(mul, tol)
    check_involution(mul, star, tol)
    total_unit = np.zeros(d, dtype=np.complex128)
    total_unit[unit_slice] = unit_fiber.unit
    check_unit(mul, total_unit, tol)

    bundle = FellBundle(G, dims, mul, star, unit_fiber, False, name)
    _check_positivity(bundle, tol)
    bundle.saturated = _is_saturated(bundle, tol)
    return bundle


def make_cm_bundle(
    C: CrossedModule, bundle: FellBundle, u: Any, tol: Optional[float] = None
) -> FellBundleCM:
    """Validate unitaries 𝔲_h that turn a Fell bundle over G into one over C.

    Args:
        C: The crossed module.
        bundle: A Fell bundle over ``C.G``.
        u: Total-space vectors, one per element of H; 𝔲_h must lie in 𝒜_{∂(h)}.
        tol: Tolerance; defaults to the active setting.

    Returns:
        FellBundleCM: The validated bundle.

    Raises:
        Mismatch: If the bundle is graded by a different group.
        GradingViolation: If some 𝔲_h lies outside 𝒜_{∂(h)}.
        NotUnitary: With the first h for which 𝔲_h is not unitary.
        NotHom: With a pair (h₁, h₂) where 𝔲_{h₁}𝔲_{h₂} ≠ 𝔲_{h₁h₂}.
        EquivarianceViolation: With a pair (g, h) where a·𝔲_h ≠ 𝔲_{c_g(h)}·a for a in 𝒜_g.

    """
    tol = resolve_tolerance(tol)
    if bundle.G != C.G:
        raise Mismatch("Bundle is not graded by the base group of the crossed module.")
    u = np.asarray(u, dtype=np.complex128).reshape(C.H.order, bundle.total_dim)
    expected = C.boundary.map[:, None]
    stray = (bundle.grade[None, :] != expected) & (np.abs(u) > tol)
    if stray.any():
        h = int(np.argwhere(stray)[0][0])
        raise GradingViolation(f"𝔲_{h} does not lie in the fibre over ∂({h}).", (h,))
    limit = _limit(tol, bundle.mul, u)

    adjoints = np.conj(u) @ bundle.star.T
    left = np.einsum("hi,hj,ijk->hk", adjoints, u, bundle.mul)
    right = np.einsum("hi,hj,ijk->hk", u, adjoints, bundle.mul)
    for h in range(C.H.order):
        if max(np.abs(left[h] - bundle.unit).max(), np.abs(right[h] - bundle.unit).max()) > limit:
            raise NotUnitary(f"𝔲_{h} is not unitary.", (h,))

    products = np.einsum("ai,bj,ijk->abk", u, u, bundle.mul, optimize=True)
    bad = np.argwhere(np.abs(products - u[C.H.table]).max(axis=2) > limit)
    if bad.size:
        h1, h2 = (int(v) for v in bad[0])
        raise NotHom(f"𝔲_{h1}·𝔲_{h2} differs from 𝔲 of their product.", (h1, h2))

    basis_times_u = np.einsum("hj,ijk->hik", u, bundle.mul)
    u_times_basis = np.einsum("hj,jik->hik", u, bundle.mul)
    moved = C.conj[bundle.grade[None, :], np.arange(C.H.order)[:, None]]
    idx = np.arange(bundle.total_dim)[None, :]
    deviation = np.abs(basis_times_u - u_times_basis[moved, idx]).max(axis=2)
    bad = np.argwhere(deviation > limit)
    if bad.size:
        h, i = (int(v) for v in bad[0])
        g = int(bundle.grade[i])
        raise EquivarianceViolation(
            f"a·𝔲_{h} differs from 𝔲_c({g},{h})·a for basis element {i} of the fibre over {g}.",
            (g, h),
        )
    return FellBundleCM(C, bundle, u)


def cross_sectional(
    bundle: FellBundle, tol: Optional[float] = None
) -> Tuple[StarAlgebra, List[np.ndarray]]:
    """Return the cross-sectional algebra and the fibre embeddings.

    Convolution uses counting measure without normalization, so the algebra
    is the graded total space itself.

    Returns:
        Tuple[StarAlgebra, List[np.ndarray]]: The algebra and, per group
        element, the ``(total_dim, dim 𝒜_g)`` matrix embedding its fibre.

    Raises:
        NotCStar: If the convolution algebra is not a C*-algebra.

    """
    algebra = make_algebra(bundle.mul, bundle.star, bundle.unit, bundle.name, tol)
    identity = np.eye(bundle.total_dim, dtype=np.complex128)
    return algebra, [identity[:, bundle.fiber_slice(g)] for g in range(bundle.G.order)]


def crossed_product_generators(cmb: FellBundleCM) -> List[np.ndarray]:
    """Return the elements 𝔲_h − 1 whose ideal the crossed product divides out."""
    return [cmb.u[h] - cmb.bundle.unit for h in range(cmb.C.H.order)]


def crossed_product_ideal(cmb: FellBundleCM, tol: Optional[float] = None) -> Subspace:
    """Return the ideal I_u of the cross-sectional algebra."""
    algebra, _ = cross_sectional(cmb.bundle, tol)
    return ideal_generated(algebra, crossed_product_generators(cmb), tol)


def crossed_product(
    cmb: FellBundleCM, tol: Optional[float] = None
) -> Tuple[StarAlgebra, StarHom]:
    """Return the crossed product C*(𝒜)/I_u and the projection onto it."""
    algebra, _ = cross_sectional(cmb.bundle, tol)
    ideal = ideal_generated(algebra, crossed_product_generators(cmb), tol)
    return quotient_algebra(algebra, ideal, tol)


def brute_force_crossed_product(
    cmb: FellBundleCM, tol: Optional[float] = None
) -> Tuple[StarAlgebra, StarHom]:
    """Return the crossed product with the ideal spanned directly by eᵢ(𝔲_h − 1)eⱼ."""
    algebra, _ = cross_sectional(cmb.bundle, tol)
    ideal = brute_force_ideal(algebra, crossed_product_generators(cmb), tol)
    return quotient_algebra(algebra, ideal, tol)
