"""Duality between strict actions of C and groupoid actions of its dual.

A strict action of an Abelian crossed module C on A goes to the dual
action of Ĝ on A⋊G, together with the central copy of functions on Ĥ
spanned by the unitaries 𝔲_h. The way back takes the crossed product by Ĝ
and the dual G-action on it. Both round trips are checked against the
explicit Takesaki–Takai isomorphism A⋊G⋊Ĝ ≅ A⊗M_|G|.
"""

from typing import Any, Optional

import numpy as np

from crossmod.algebra import (
    dimension_vector,
    functions_on,
    is_central,
    make_star_hom,
    matrix_algebra,
    rank,
    tensor,
)
from crossmod.bundles import (
    classical_crossed_product,
    cross_sectional,
    group_action,
    make_strict_action,
    semidirect_bundle,
)
from crossmod.config import resolve_tolerance
from crossmod.errors import (
    EquivarianceViolation,
    NotAbelianCM,
    NotCentral,
    StarHomError,
)
from crossmod.groups import character_group, dual_hom
from crossmod.modules import dual_characters, group_crossed_module
from crossmod.types import (
    CrossedModule,
    FiniteGroup,
    GroupoidAction,
    StarAlgebra,
    StarHom,
    StrictAction,
)


def _crossed_by_group(A: StarAlgebra, G: FiniteGroup, alpha: Any, tol: float) -> StarAlgebra:
    """Return A⋊G as the cross-sectional algebra of the semidirect bundle."""
    bundle = semidirect_bundle(group_action(A, G, alpha), tol).bundle
    algebra, _ = cross_sectional(bundle, tol)
    return algebra


def _dual_action(pairing: np.ndarray, d: int) -> np.ndarray:
    """Return the diagonal matrices of a character (row) acting on (g, i) ↦ ⟨χ, g⟩."""
    return np.stack([np.diag(np.repeat(row, d)) for row in pairing])


def make_groupoid_action(
    B: StarAlgebra,
    C: CrossedModule,
    beta: Any,
    struct_map: Any,
    source: Optional[object] = None,
    tol: Optional[float] = None,
) -> GroupoidAction:
    """Validate an action of the arrow groupoid of the dual of C on B.

    Args:
        B: The algebra.
        C: An Abelian crossed module.
        beta: One automorphism matrix per character of G.
        struct_map: Shape ``(dim B, |Ĥ|)``; column χ is the image of the indicator of χ.
        source: The strict action this came from, if any.
        tol: Tolerance; defaults to the active setting.

    Returns:
        GroupoidAction: The validated action.

    Raises:
        NotAbelianCM: If C is not Abelian.
        NotAction: If β is not an action of Ĝ.
        StarHomError: If the structure map is not a unital *-homomorphism.
        NotCentral: With the first character whose image is not central.
        EquivarianceViolation: With a pair (ĝ, χ) where β_ĝ moves the image of χ
            anywhere but to the image of χ·∂̂(ĝ)⁻¹.

    """
    tol = resolve_tolerance(tol)
    g_chars, h_chars = dual_characters(C)
    g_hat, h_hat = g_chars.dual, h_chars.dual
    boundary_dual = dual_hom(C.boundary, h_chars, g_chars)
    beta = np.asarray(beta, dtype=np.complex128).reshape(g_hat.order, B.dim, B.dim)
    make_strict_action(B, group_crossed_module(g_hat), beta, B.unit[None, :], tol=tol)
    hom = make_star_hom(functions_on(h_hat.order), B, struct_map, tol)
    for chi in range(h_hat.order):
        if not is_central(B, hom.matrix[:, chi], tol):
            raise NotCentral(f"Image of the character {chi} is not central.", (chi,))
    for x in range(g_hat.order):
        moved = beta[x] @ hom.matrix
        shift = h_hat.inverse[boundary_dual.map[x]]
        expected = hom.matrix[:, h_hat.table[np.arange(h_hat.order), shift]]
        deviation = np.abs(moved - expected).max(axis=0, initial=0.0)
        bad = np.flatnonzero(deviation > tol * max(1.0, B.dim) * 10)
        if bad.size:
            raise EquivarianceViolation(
                f"β_{x} does not translate the character {int(bad[0])} by ∂̂({x}).",
                (x, int(bad[0])),
            )
    return GroupoidAction(B, C, g_chars, h_chars, boundary_dual, beta, hom, source)


def forward_functor(act: StrictAction, tol: Optional[float] = None) -> GroupoidAction:
    """Return the groupoid action on A⋊G attached to a strict action of an Abelian C.

    Ĝ acts on A⋊G by (ĝ·ξ)(g) = ⟨ĝ, g⟩ξ(g); functions on Ĥ sit centrally
    through δ_h ↦ 𝔲_h = (u_h*, ∂(h)), where δ_h is the function ĥ ↦ ĥ(h).

    Raises:
        NotAbelianCM: If the crossed module is not Abelian.

    """
    tol = resolve_tolerance(tol)
    A, C = act.A, act.C
    if not C.is_abelian:
        raise NotAbelianCM("The dual groupoid action needs an Abelian crossed module.")
    g_chars, h_chars = dual_characters(C)
    n, d = C.G.order, A.dim
    B = _crossed_by_group(A, C.G, act.alpha, tol)
    beta = _dual_action(g_chars.pairing, d)
    unitaries = np.zeros((C.H.order, n, d), dtype=np.complex128)
    unitaries[np.arange(C.H.order), C.boundary.map, :] = np.conj(act.u) @ A.star.T
    struct_map = unitaries.reshape(C.H.order, n * d).T @ np.conj(h_chars.pairing).T / C.H.order
    return make_groupoid_action(B, C, beta, struct_map, act, tol)


def backward_functor(ga: GroupoidAction, tol: Optional[float] = None) -> StrictAction:
    """Return the strict action of C on B⋊Ĝ: the dual G-action and U_h = struct_map(v_{h⁻¹}).

    Here v_k is the function ĥ ↦ ĥ(k), placed at the identity of Ĝ, so that
    the dual action of ∂(h) is Ad(U_h).
    """
    tol = resolve_tolerance(tol)
    C, B = ga.C, ga.B
    g_hat = ga.G_chars.dual
    crossed = _crossed_by_group(B, g_hat, ga.beta, tol)
    alpha = _dual_action(ga.G_chars.pairing.T, B.dim)
    values = ga.H_chars.pairing[:, C.H.inverse]
    unitaries = np.zeros((C.H.order, g_hat.order, B.dim), dtype=np.complex128)
    unitaries[:, 0, :] = (ga.struct_map.matrix @ values).T
    return make_strict_action(
        crossed, C, alpha, unitaries.reshape(C.H.order, -1), "dual of dual", tol
    )


def right_regular(G: FiniteGroup) -> np.ndarray:
    """Return R_g = Σₓ E_{xg⁻¹, x} for every g, shape ``(|G|, |G|, |G|)``."""
    n = G.order
    R = np.zeros((n, n, n))
    idx = np.arange(n)
    for g in range(n):
        R[g, G.table[idx, G.inv(g)], idx] = 1.0
    return R


def takesaki_takai_map(act: StrictAction, tol: Optional[float] = None) -> StarHom:
    """Return the *-isomorphism A⋊G⋊Ĝ → A⊗M_|G| for the G-part of an action.

    The basis element aδ_gδ_ĝ goes to π(a)λ_gμ_ĝ = Σₓ α_{(gx)⁻¹}(a)⟨ĝ, x⟩ ⊗ E_{gx, x},
    with π the regular covariant representation and μ_ĝ = Σₓ ⟨ĝ, x⟩E_{xx}.
    The dual G-action becomes α_g ⊗ Ad(R_g) for the right regular R.

    Raises:
        NotAbelian: If G is not Abelian.
        StarHomError: If the map fails to be a bijective *-homomorphism.

    """
    tol = resolve_tolerance(tol)
    A, G = act.A, act.C.G
    chars = character_group(G)
    n, d, m = G.order, A.dim, chars.dual.order
    B = _crossed_by_group(A, G, act.alpha, tol)
    source = _crossed_by_group(B, chars.dual, _dual_action(chars.pairing, d), tol)
    target = tensor(A, matrix_algebra(n))
    phi = np.zeros((d, n, n, m, n, d), dtype=np.complex128)
    for chi in range(m):
        for g in range(n):
            for x in range(n):
                y = G.mul(g, x)
                phi[:, y, x, chi, g, :] = act.alpha[G.inv(y)] * chars.pairing[chi, x]
    phi = phi.reshape(d * n * n, m * n * d)
    if rank(phi, tol) < target.dim:
        raise StarHomError("Takesaki–Takai map is not bijective.")
    return make_star_hom(source, target, phi, tol)


def takesaki_takai_check(act: StrictAction, tol: Optional[float] = None) -> bool:
    """Return True if A⋊G⋊Ĝ and A⊗M_|G| have the same dimension vector.

    Both crossed products are computed as images of regular covariant
    representations, independently of the Fell-bundle machinery.

    Raises:
        NotAbelian: If G is not Abelian.

    """
    tol = resolve_tolerance(tol)
    A, G = act.A, act.C.G
    chars = character_group(G)
    B, _ = classical_crossed_product(A, G, act.alpha, tol)
    double, _ = classical_crossed_product(B, chars.dual, _dual_action(chars.pairing, A.dim), tol)
    expected = tensor(A, matrix_algebra(G.order))
    return dimension_vector(double, tol) == dimension_vector(expected, tol)


def duality_roundtrip_check(act: StrictAction, tol: Optional[float] = None) -> bool:
    """Return True if backward(forward(act)) is act ⊗ the right regular representation.

    Three things are compared under the Takesaki–Takai map Φ: the algebras
    by dimension vector, Φ(U_h) with u_h ⊗ R_∂(h), and Φ∘β̂_g with
    (α_g ⊗ Ad R_g)∘Φ.

    Raises:
        NotAbelianCM: If the crossed module of ``act`` is not Abelian.

    """
    tol = resolve_tolerance(tol)
    A, C = act.A, act.C
    twice = backward_functor(forward_functor(act, tol), tol)
    phi = takesaki_takai_map(act, tol)
    if twice.A.dim != phi.src.dim:
        return False
    if dimension_vector(twice.A, tol) != dimension_vector(phi.dst, tol):
        return False
    R = right_regular(C.G)
    expected_u = np.stack([np.kron(act.u[h], R[C.d(h)].reshape(-1)) for h in range(C.H.order)])
    if np.abs(twice.u @ phi.matrix.T - expected_u).max(initial=0.0) > tol * 1e3:
        return False
    for g in range(C.G.order):
        conjugation = np.kron(act.alpha[g], np.kron(R[g], R[g]))
        left = phi.matrix @ twice.alpha[g]
        right = conjugation @ phi.matrix
        if np.abs(left - right).max(initial=0.0) > tol * 1e3:
            return False
    return True


def groupoid_roundtrip_check(ga: GroupoidAction, tol: Optional[float] = None) -> bool:
    """Return True if forward(backward(ga)) lives on an algebra ≅ B⊗M_|G|.

    The result is validated as a groupoid action on the way, so its
    equivariance and centrality hold as well.

    Raises:
        EquivarianceViolation: If the action built on the way back is not equivariant.

    """
    tol = resolve_tolerance(tol)
    again = forward_functor(backward_functor(ga, tol), tol)
    expected = tensor(ga.B, matrix_algebra(ga.C.G.order))
    return dimension_vector(again.B, tol) == dimension_vector(expected, tol)
