"""Strict actions of crossed modules and their semidirect product bundles."""

from typing import Any, Optional, Tuple

import numpy as np

from crossmod.algebra import functions_on, make_star_hom, matrix_algebra
from crossmod.bundles.base import make_cm_bundle, make_fell_bundle
from crossmod.config import resolve_tolerance
from crossmod.errors import (
    EquivarianceViolation,
    InnerMismatch,
    Mismatch,
    NotAction,
    NotHom,
    NotUnitary,
)
from crossmod.groups import cyclic
from crossmod.modules import group_crossed_module, identity_crossed_module
from crossmod.types import (
    CrossedModule,
    CrossedModuleHom,
    FellBundleCM,
    FiniteGroup,
    StarAlgebra,
    StrictAction,
)


def _inner(A: StarAlgebra, u: np.ndarray) -> np.ndarray:
    """Return the matrix of a ↦ u·a·u*."""
    return A.left_matrix(u) @ A.right_matrix(A.adjoint(u))


def make_strict_action(
    A: StarAlgebra,
    C: CrossedModule,
    alpha: Any,
    u: Any,
    name: str = "",
    tol: Optional[float] = None,
) -> StrictAction:
    """Validate a strict action (α, u) of C on A.

    Args:
        A: The algebra.
        C: The acting crossed module.
        alpha: One ``(dim A, dim A)`` matrix per element of G.
        u: One coefficient vector per element of H.
        name: Optional label.
        tol: Tolerance; defaults to the active setting.

    Returns:
        StrictAction: The validated action.

    Raises:
        StarHomError: If some α_g is not a unital *-homomorphism.
        NotAction: With a pair (g, k) where α_{gk} ≠ α_g∘α_k.
        NotUnitary: With the first h for which u_h is not unitary.
        NotHom: With a pair (h₁, h₂) where u_{h₁}u_{h₂} ≠ u_{h₁h₂}.
        InnerMismatch: With the first h for which α_{∂(h)} ≠ Ad(u_h).
        EquivarianceViolation: With a pair (g, h) where α_g(u_h) ≠ u_{c_g(h)}.

    """
    tol = resolve_tolerance(tol)
    d = A.dim
    alpha = np.asarray(alpha, dtype=np.complex128).reshape(C.G.order, d, d)
    u = np.asarray(u, dtype=np.complex128).reshape(C.H.order, d)
    for g in range(C.G.order):
        make_star_hom(A, A, alpha[g], tol)
    limit = tol * max(1.0, float(np.abs(alpha).max())) ** 2 * max(1, d)

    if np.abs(alpha[0] - np.eye(d)).max() > limit:
        raise NotAction("α of the identity is not the identity map.", (0, 0))
    composed = np.einsum("gab,kbc->gkac", alpha, alpha)
    deviation = np.abs(composed - alpha[C.G.table]).max(axis=(2, 3))
    bad = np.argwhere(deviation > limit)
    if bad.size:
        g, k = (int(v) for v in bad[0])
        raise NotAction(f"α_{g}∘α_{k} differs from α of their product.", (g, k))

    for h in range(C.H.order):
        if not A.is_unitary(u[h], tol):
            raise NotUnitary(f"u_{h} is not unitary.", (h,))
    products = np.einsum("ai,bj,ijk->abk", u, u, A.mul, optimize=True)
    bad = np.argwhere(np.abs(products - u[C.H.table]).max(axis=2) > limit)
    if bad.size:
        h1, h2 = (int(v) for v in bad[0])
        raise NotHom(f"u_{h1}·u_{h2} differs from u of their product.", (h1, h2))

    for h in range(C.H.order):
        if np.abs(alpha[C.d(h)] - _inner(A, u[h])).max() > limit:
            raise InnerMismatch(f"α_∂({h}) differs from Ad(u_{h}).", (h,))

    moved = np.einsum("gab,hb->gha", alpha, u)
    bad = np.argwhere(np.abs(moved - u[C.conj]).max(axis=2) > limit)
    if bad.size:
        g, h = (int(v) for v in bad[0])
        raise EquivarianceViolation(f"α_{g}(u_{h}) differs from u_c({g},{h}).", (g, h))
    return StrictAction(A, C, alpha, u, name)


def trivial_action(A: StarAlgebra, C: CrossedModule, name: str = "") -> StrictAction:
    """Return the action with α_g = id and u_h = 1."""
    alpha = np.broadcast_to(np.eye(A.dim), (C.G.order, A.dim, A.dim))
    u = np.broadcast_to(A.unit, (C.H.order, A.dim))
    return make_strict_action(A, C, alpha, u, name)


def group_action(A: StarAlgebra, G: FiniteGroup, alpha: Any, name: str = "") -> StrictAction:
    """Return an ordinary group action as a strict action of (G, 1)."""
    return make_strict_action(A, group_crossed_module(G), alpha, A.unit[None, :], name)


def translation_action(G: FiniteGroup, name: str = "") -> StrictAction:
    """Return G acting on functions on G by left translation, δₓ ↦ δ_{gx}."""
    n = G.order
    alpha = np.zeros((n, n, n))
    idx = np.arange(n)
    alpha[idx[:, None], G.table, idx[None, :]] = 1.0
    return group_action(functions_on(n), G, alpha, name or f"translation({G.name})")


def inner_action(
    A: StarAlgebra, C: CrossedModule, unitaries: Any, name: str = ""
) -> StrictAction:
    """Return α_g = Ad(U_g) and u_h = U_{∂(h)} for a unitary representation U of G."""
    U = np.asarray(unitaries, dtype=np.complex128).reshape(C.G.order, A.dim)
    alpha = np.stack([_inner(A, U[g]) for g in range(C.G.order)])
    return make_strict_action(A, C, alpha, U[C.boundary.map], name)


def clock_and_shift(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Return the clock Q = diag(ωᵃ) and shift S = Σ E_{a+1,a}, so QS = ωSQ."""
    omega = np.exp(2j * np.pi / n)
    clock = np.diag(omega ** np.arange(n))
    shift = np.roll(np.eye(n), 1, axis=0)
    return clock, shift


def finite_torus_action(n: int) -> StrictAction:
    """Return Z/n acting on M_n by α_z = Ad(S⁻ᶻ), with u_m = S⁻ᵐ.

    M_n is generated by the clock and shift matrices, so it is the finite
    noncommutative torus; the crossed module is (Z/n, Z/n, id, trivial).
    """
    C = identity_crossed_module(cyclic(n), f"Z{n}")
    _, shift = clock_and_shift(n)
    powers = np.stack([np.linalg.matrix_power(shift.T, z) for z in range(n)])
    return inner_action(matrix_algebra(n), C, powers.reshape(n, n * n), f"torus({n})")


def pullback_action(act: StrictAction, f: CrossedModuleHom) -> StrictAction:
    """Return the action of ``f.src`` given by α∘φ and u∘ψ.

    Raises:
        Mismatch: If ``f`` does not land in the acting crossed module.

    """
    if f.dst.G != act.C.G or f.dst.H != act.C.H:
        raise Mismatch("Homomorphism does not land in the acting crossed module.")
    return make_strict_action(
        act.A, f.src, act.alpha[f.phi.map], act.u[f.psi.map], act.name
    )


def semidirect_bundle(act: StrictAction, tol: Optional[float] = None) -> FellBundleCM:
    """Return the semidirect product bundle A ×_α G with 𝔲_h = (u_h*, ∂(h)).

    The fibre over g is a copy of A with basis (g, i) at index ``g·dim A + i``.
    Products are (a, f)(b, g) = (a·α_f(b), fg) and (a, g)* = (α_{g⁻¹}(a*), g⁻¹).
    """
    A, C = act.A, act.C
    n, d = C.G.order, A.dim
    total = np.zeros((n, d, n, d, n, d), dtype=np.complex128)
    twisted = np.einsum("flj,ilm->fijm", act.alpha, A.mul, optimize=True)
    for f in range(n):
        for g in range(n):
            total[f, :, g, :, C.G.table[f, g], :] = twisted[f]
    star = np.zeros((n, d, n, d), dtype=np.complex128)
    for g in range(n):
        star[C.G.inv(g), :, g, :] = act.alpha[C.G.inv(g)] @ A.star
    bundle = make_fell_bundle(
        C.G,
        np.full(n, d),
        total.reshape(n * d, n * d, n * d),
        star.reshape(n * d, n * d),
        f"{act.name} ⋊ {C.G.name}" if act.name else "",
        tol,
    )
    u = np.zeros((C.H.order, n, d), dtype=np.complex128)
    u[np.arange(C.H.order), C.boundary.map, :] = np.conj(act.u) @ A.star.T
    return make_cm_bundle(C, bundle, u.reshape(C.H.order, n * d), tol)
