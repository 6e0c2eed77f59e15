"""Representations of Fell bundles and the universal property of crossed products."""

from typing import Any, Optional, Tuple

import numpy as np

from crossmod.algebra import (
    algebra_from_matrices,
    faithful_representation,
    make_star_hom,
    rank,
    solve_least_squares,
)
from crossmod.bundles.base import crossed_product
from crossmod.config import resolve_tolerance
from crossmod.errors import (
    Mismatch,
    NoFactorization,
    NotUnique,
    RepresentationError,
)
from crossmod.types import (
    FellBundleCM,
    FiniteGroup,
    Representation,
    StarAlgebra,
    StarHom,
)


def make_representation(
    cmb: FellBundleCM, target: StarAlgebra, matrix: Any, tol: Optional[float] = None
) -> Representation:
    """Validate a representation of a Fell bundle over a crossed module.

    Linearity holds by construction and continuity is vacuous for finite
    groups; the remaining conditions are checked on basis elements.

    Args:
        cmb: The bundle.
        target: The target algebra.
        matrix: The per-fibre maps side by side, shape ``(target.dim, total_dim)``.
        tol: Tolerance; defaults to the active setting.

    Returns:
        Representation: The validated representation.

    Raises:
        RepresentationError: Naming the violated condition, with its witness.

    """
    tol = resolve_tolerance(tol)
    bundle = cmb.bundle
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (target.dim, bundle.total_dim):
        raise RepresentationError(
            f"shape: expected ({target.dim}, {bundle.total_dim}), got {m.shape}."
        )
    limit = tol * max(1.0, float(np.abs(m).max(initial=0.0))) ** 2 * max(1, target.dim) * 10

    bad = np.argwhere(np.abs(m @ bundle.star - target.star @ np.conj(m)) > limit)
    if bad.size:
        j = int(bad[0][1])
        raise RepresentationError(f"adjoint: ρ(a*) ≠ ρ(a)* for basis element {j}.", ("adjoint", j))

    image_of_product = np.einsum("ijk,lk->ijl", bundle.mul, m)
    product_of_images = np.einsum("ai,bj,abm->ijm", m, m, target.mul, optimize=True)
    bad = np.argwhere(np.abs(image_of_product - product_of_images) > limit)
    if bad.size:
        i, j = int(bad[0][0]), int(bad[0][1])
        raise RepresentationError(
            f"multiplicative: ρ(ab) ≠ ρ(a)ρ(b) for basis pair ({i}, {j}).",
            ("multiplicative", i, j),
        )

    if np.abs(m @ bundle.unit - target.unit).max(initial=0.0) > limit:
        raise RepresentationError("nondegenerate: ρ(1) is not the unit.", ("nondegenerate",))

    for h in range(cmb.C.H.order):
        if np.abs(m @ cmb.u[h] - target.unit).max(initial=0.0) > limit:
            raise RepresentationError(f"unitaries: ρ(𝔲_{h}) ≠ 1.", ("unitaries", h))
    return Representation(cmb, target, m)


def canonical_representation(
    cmb: FellBundleCM, tol: Optional[float] = None
) -> Tuple[Representation, StarHom]:
    """Return the representation into the crossed product and the projection behind it."""
    algebra, projection = crossed_product(cmb, tol)
    return make_representation(cmb, algebra, projection.matrix, tol), projection


def conjugate_representation(
    rep: Representation, w: Any, tol: Optional[float] = None
) -> Representation:
    """Return Ad(w)∘ρ for a unitary ``w`` of the target algebra.

    Raises:
        RepresentationError: If ``w`` is not unitary.

    """
    tol = resolve_tolerance(tol)
    target = rep.target
    w = np.asarray(w, dtype=np.complex128)
    if not target.is_unitary(w, tol * 1e3):
        raise RepresentationError("unitary: the conjugating element is not unitary.", ("unitary",))
    ad = target.left_matrix(w) @ target.right_matrix(target.adjoint(w))
    return make_representation(rep.cmb, target, ad @ rep.matrix, tol)


def covariant_representation(
    cmb: FellBundleCM, target: StarAlgebra, pi: StarHom, V: Any, tol: Optional[float] = None
) -> Representation:
    """Return ρ(a, g) = π(a)·V_g for the semidirect bundle of a strict action.

    Args:
        cmb: A semidirect product bundle; every fibre is a copy of the acted-on algebra.
        target: The target algebra.
        pi: A unital *-homomorphism from the acted-on algebra into ``target``.
        V: One unitary of ``target`` per element of G.
        tol: Tolerance; defaults to the active setting.

    Returns:
        Representation: The validated representation.

    Raises:
        Mismatch: If the fibres do not all have the dimension of ``pi.src``.
        RepresentationError: If (π, V) is not covariant or does not send 𝔲 to 1.

    """
    bundle = cmb.bundle
    d = pi.src.dim
    if pi.dst.dim != target.dim or not np.all(bundle.fiber_dims == d):
        raise Mismatch("Covariant pairs need a semidirect bundle over the domain of π.")
    V = np.asarray(V, dtype=np.complex128).reshape(bundle.G.order, target.dim)
    blocks = [target.right_matrix(V[g]) @ pi.matrix for g in range(bundle.G.order)]
    return make_representation(cmb, target, np.concatenate(blocks, axis=1), tol)


def universal_factorization(
    cmb: FellBundleCM,
    rep: Representation,
    crossed: Optional[Tuple[StarAlgebra, StarHom]] = None,
    tol: Optional[float] = None,
) -> StarHom:
    """Return the unique f: A⋊𝒞 → target with f∘P = ρ.

    Args:
        cmb: The bundle.
        rep: A validated representation of ``cmb``.
        crossed: The crossed product and its projection P, if already computed.
        tol: Tolerance; defaults to the active setting.

    Returns:
        StarHom: The factorization, validated as a unital *-homomorphism.

    Raises:
        Mismatch: If ``rep`` represents a different bundle.
        NoFactorization: If ρ does not vanish on the kernel of P.
        NotUnique: If the constraint system f·P = ρ has a non-zero kernel.

    """
    tol = resolve_tolerance(tol)
    if rep.matrix.shape[1] != cmb.bundle.total_dim:
        raise Mismatch("Representation belongs to a different bundle.")
    algebra, projection = crossed if crossed is not None else crossed_product(cmb, tol)
    p = projection.matrix
    if rank(p, tol) < algebra.dim:
        raise NotUnique(
            f"Projection has rank below {algebra.dim}; the factorization is not unique.",
            (algebra.dim - rank(p, tol),),
        )
    f = solve_least_squares(p.T, rep.matrix.T).T
    residual = float(np.abs(f @ p - rep.matrix).max(initial=0.0))
    if residual > tol * max(1.0, float(np.abs(rep.matrix).max(initial=0.0))) * 100:
        raise NoFactorization(
            f"Representation does not vanish on the ideal (residual {residual:.3e}).",
            (residual,),
        )
    return make_star_hom(algebra, rep.target, f, tol)


def classical_crossed_product(
    A: StarAlgebra, G: FiniteGroup, alpha: Any, tol: Optional[float] = None
) -> Tuple[StarAlgebra, np.ndarray]:
    """Return A⋊G as the image of its regular covariant representation.

    A acts on K ⊗ ℓ²(G) by π(a) = ⊕ₓ ρ(α_{x⁻¹}(a)), for a faithful
    representation ρ on K, and G by λ_g eₓ = e_{gx}. The basis element
    a_i δ_g is π(eᵢ)λ_g, at index ``g·dim A + i``, so the result shares its
    basis with the semidirect product bundle.

    Args:
        A: The algebra.
        G: The group.
        alpha: One ``(dim A, dim A)`` automorphism matrix per element of G.
        tol: Tolerance; defaults to the active setting.

    Returns:
        Tuple[StarAlgebra, np.ndarray]: The crossed product and its matrices.

    """
    n, d = G.order, A.dim
    alpha = np.asarray(alpha, dtype=np.complex128).reshape(n, d, d)
    rho = faithful_representation(A)
    k = rho.shape[1]
    pi = np.zeros((d, n * k, n * k), dtype=np.complex128)
    for x in range(n):
        moved = np.einsum("ji,jab->iab", alpha[G.inv(x)], rho)
        pi[:, x * k:(x + 1) * k, x * k:(x + 1) * k] = moved
    shift = np.zeros((n, n))
    matrices = []
    for g in range(n):
        shift[:] = 0.0
        shift[G.table[g], np.arange(n)] = 1.0
        lam = np.kron(shift, np.eye(k))
        matrices.append(pi @ lam)
    name = f"{A.name} ⋊ {G.name}" if A.name and G.name else ""
    return algebra_from_matrices(np.concatenate(matrices), name, tol)
