"""Partial crossed products along a strict extension C₁ ↣ C₂ ↠ C₃.

For a strict action of C₂ on A, the crossed product A⋊C₁ carries a strict
action of Cmid = (G₂, (G₁⋉H₂)/Δ(H₁)), and (A⋊C₁)⋊Cmid ≅ A⋊C₂. Cmid is
equivalent to C₃ through the quotient by the copy of G₁ in its H.
"""

from typing import Any, Optional

import numpy as np
from scipy import linalg as sla

from crossmod.algebra import make_star_hom, quotient_algebra, wedderburn
from crossmod.bundles import (
    cross_sectional,
    crossed_product,
    crossed_product_ideal,
    make_strict_action,
    pullback_action,
    semidirect_bundle,
)
from crossmod.config import resolve_tolerance
from crossmod.errors import EquivarianceViolation, Mismatch, NotIdeal
from crossmod.groups import coset_representatives, quotient, semidirect_product, subgroup
from crossmod.modules import (
    is_equivalence,
    make_cm_hom,
    make_crossed_module,
    quotient_equivalence,
)
from crossmod.types import (
    CrossedModuleHom,
    IntermediateAction,
    StrictAction,
    StrictExtension,
    Subgroup,
)


def restrict_strict_action(act: StrictAction, ext: StrictExtension) -> StrictAction:
    """Return the action of C₁ obtained by pulling α and u back along the inclusion."""
    return pullback_action(act, ext.incl)


def transport_action(
    act: StrictAction, iso: CrossedModuleHom, tol: Optional[float] = None
) -> StrictAction:
    """Move an action of ``iso.src`` to an action of ``iso.dst`` along an isomorphism.

    Raises:
        Mismatch: If ``iso`` is not an isomorphism starting at the acting crossed module.

    """
    if iso.src.G != act.C.G or iso.src.H != act.C.H:
        raise Mismatch("Isomorphism does not start at the acting crossed module.")
    if not (iso.phi.is_isomorphism and iso.psi.is_isomorphism):
        raise Mismatch("Transport needs an isomorphism of crossed modules.")
    inverse = make_cm_hom(iso.dst, iso.src, np.argsort(iso.phi.map), np.argsort(iso.psi.map))
    return make_strict_action(act.A, iso.dst, act.alpha[inverse.phi.map], act.u[inverse.psi.map], act.name, tol)


def partial_crossed(
    act: StrictAction, ext: StrictExtension, tol: Optional[float] = None
) -> IntermediateAction:
    """Return the strict action of Cmid on A⋊C₁.

    γ_g acts on A⋊C₁ by aδ_k ↦ α_g(a)δ_{gkg⁻¹}, and U_(k, h) is the image of
    δ_k·u_h. Δ(H₁) is the image of h ↦ (∂(h), h⁻¹) in G₁⋉H₂.

    Args:
        act: A strict action of ``ext.C2``.
        ext: The strict extension.
        tol: Tolerance; defaults to the active setting.

    Returns:
        IntermediateAction: The validated action together with the map
        Cmid → C₃ and its equivalence certificate.

    Raises:
        Mismatch: If ``act`` is not an action of ``ext.C2``.
        NotIdeal: If γ fails to preserve the ideal of A⋊C₁.

    """
    tol = resolve_tolerance(tol)
    C1, C2, C3 = ext.C1, ext.C2, ext.C3
    if act.C.G != C2.G or act.C.H != C2.H:
        raise Mismatch("Action is not an action of the middle crossed module.")
    G2, H2 = C2.G, C2.H
    phi1, psi1 = ext.incl.phi.map, ext.incl.psi.map
    n1, m, d = C1.G.order, H2.order, act.A.dim

    cmb1 = semidirect_bundle(restrict_strict_action(act, ext), tol)
    algebra, _ = cross_sectional(cmb1.bundle, tol)
    ideal = crossed_product_ideal(cmb1, tol)
    base, projection = quotient_algebra(algebra, ideal, tol)
    p = projection.matrix
    lift = p.conj().T

    position = np.full(G2.order, -1, dtype=np.int64)
    position[phi1] = np.arange(n1)
    gamma = []
    for g in range(G2.order):
        moved = position[G2.table[G2.table[g, phi1], G2.inv(g)]]
        full = np.zeros((n1, d, n1, d), dtype=np.complex128)
        full[moved, :, np.arange(n1), :] = act.alpha[g]
        full = full.reshape(n1 * d, n1 * d)
        if ideal.dim and not ideal.contains(full @ ideal.basis, tol):
            raise NotIdeal(f"γ_{g} does not preserve the ideal of A⋊C₁.", (g,))
        gamma.append(p @ full @ lift)

    conj1 = C2.conj[phi1]
    product = semidirect_product(C1.G, H2, conj1)
    diagonal = C1.boundary.map[np.arange(C1.H.order)] * m + H2.inverse[psi1]
    H_mid, to_mid = quotient(product, subgroup(product, diagonal))
    reps = coset_representatives(to_mid)
    k, h = reps // m, reps % m
    boundary = G2.table[phi1[k], C2.boundary.map[h]]
    conj_k = position[G2.table[G2.table[:, phi1[k]], G2.inverse[:, None]]]
    conj_mid = to_mid.map[conj_k * m + C2.conj[:, h]]
    name = f"mid({ext.name})" if ext.name else "mid"
    C_mid = make_crossed_module(G2, H_mid, boundary, conj_mid, name)

    sections = np.zeros((H_mid.order, n1, d), dtype=np.complex128)
    sections[np.arange(H_mid.order), k, :] = act.u[C2.conj[phi1[k], h]]
    U = sections.reshape(H_mid.order, n1 * d) @ p.T
    action = make_strict_action(base, C_mid, np.stack(gamma), U, name, tol)

    to_quotient = make_cm_hom(C_mid, C3, ext.proj.phi.map, ext.proj.psi.map[h])
    certificate = is_equivalence(to_quotient)
    return IntermediateAction(base, projection, C_mid, action, to_mid, to_quotient, certificate)



def base_copy(inter: IntermediateAction, ext: StrictExtension) -> Subgroup:
    """Return the image of G₁ in the H of Cmid, the elements (k, e)."""
    m = ext.C2.H.order
    corners = inter.semidirect_projection.map[np.arange(ext.C1.G.order) * m]
    return subgroup(inter.Cmid.H, np.unique(corners))


def verify_partial_crossed(
    act: StrictAction,
    ext: StrictExtension,
    tol: Optional[float] = None,
    seed: Optional[int] = None,
) -> bool:
    """Return True if (A⋊C₁)⋊Cmid ≅ A⋊C₂ and Cmid is equivalent to C₃.

    The algebras are compared by dimension vector. Cmid is divided by the
    copy of G₁ in its H, which must land on groups of the orders of C₃,
    and the map Cmid → C₃ must be certified.

    Raises:
        Mismatch: If ``act`` is not an action of the middle term of ``ext``.

    """
    tol = resolve_tolerance(tol)
    inter = partial_crossed(act, ext, tol)
    iterated, _ = crossed_product(semidirect_bundle(inter.action, tol), tol)
    direct, _ = crossed_product(semidirect_bundle(act, tol), tol)
    if iterated.dim != direct.dim:
        return False
    same = (
        wedderburn(iterated, tol, seed).dimension_vector
        == wedderburn(direct, tol, seed).dimension_vector
    )
    reduced, _ = quotient_equivalence(inter.Cmid, base_copy(inter, ext))
    orders = (reduced.G.order, reduced.H.order) == (ext.C3.G.order, ext.C3.H.order)
    return bool(same and orders and inter.certificate.is_equivalence)


def _induced(p: np.ndarray, blocks: int, theta: np.ndarray) -> np.ndarray:
    """Return the map induced by θ ⊗ 1 on a quotient with coisometry ``p``."""
    return p @ np.kron(np.eye(blocks), theta) @ p.conj().T


def _spectrum(matrix: np.ndarray) -> np.ndarray:
    return np.sort(np.round(sla.eigvals(matrix), 6))


def naturality_check(
    act: StrictAction,
    theta: Any,
    ext: StrictExtension,
    tol: Optional[float] = None,
) -> bool:
    """Return True if an equivariant automorphism θ of A survives the partial crossed product.

    θ induces Θ on A⋊C₁, which must be a *-automorphism commuting with γ
    and fixing U. It also induces automorphisms of A⋊C₂ and of
    (A⋊C₁)⋊Cmid; as the two algebras are identified naturally, these must
    have the same spectrum.

    Raises:
        StarHomError: If θ is not a *-automorphism of A.
        EquivarianceViolation: If θ does not commute with α or moves some u_h.
        Mismatch: If ``act`` is not an action of the middle term of ``ext``.

    """
    tol = resolve_tolerance(tol)
    A = act.A
    theta = np.asarray(theta, dtype=np.complex128)
    make_star_hom(A, A, theta, tol)
    for g in range(act.C.G.order):
        if np.abs(theta @ act.alpha[g] - act.alpha[g] @ theta).max(initial=0.0) > tol * 1e3:
            raise EquivarianceViolation(f"θ does not commute with α_{g}.", (g,))
    moved = act.u @ theta.T - act.u
    bad = np.flatnonzero(np.abs(moved).max(axis=1, initial=0.0) > tol * 1e3)
    if bad.size:
        raise EquivarianceViolation(f"θ moves u_{int(bad[0])}.", (int(bad[0]),))
    inter = partial_crossed(act, ext, tol)
    big = _induced(inter.base_projection.matrix, ext.C1.G.order, theta)
    make_star_hom(inter.base, inter.base, big, tol)
    gamma, U = inter.gamma, inter.U
    for g in range(gamma.shape[0]):
        if np.abs(big @ gamma[g] - gamma[g] @ big).max(initial=0.0) > tol * 1e3:
            return False
    if np.abs(U @ big.T - U).max(initial=0.0) > tol * 1e3:
        return False
    _, outer = crossed_product(semidirect_bundle(inter.action, tol), tol)
    _, direct = crossed_product(semidirect_bundle(act, tol), tol)
    iterated = _induced(outer.matrix, ext.C2.G.order, big)
    once = _induced(direct.matrix, ext.C2.G.order, theta)
    return iterated.shape == once.shape and np.allclose(
        _spectrum(iterated), _spectrum(once), atol=1e-5
    )
