"""Moving Fell bundles along homomorphisms and equivalences of crossed modules."""

from typing import Any, Dict, Optional

import numpy as np

from crossmod.algebra import make_star_hom, rank
from crossmod.bundles.base import make_cm_bundle, make_fell_bundle
from crossmod.config import resolve_tolerance
from crossmod.errors import BundleError, GradingViolation, Mismatch
from crossmod.groups import coset_representatives, kernel
from crossmod.types import (
    CrossedModuleHom,
    FellBundle,
    FellBundleCM,
    StarAlgebra,
    StarHom,
)


def _total_algebra(bundle: FellBundle) -> StarAlgebra:
    return StarAlgebra(bundle.mul, bundle.star, bundle.unit, bundle.name)


def _fiber_indices(bundle: FellBundle, elements: np.ndarray) -> np.ndarray:
    """Return the total indices of the fibres over ``elements``, concatenated."""
    parts = [np.arange(bundle.offsets[g], bundle.offsets[g + 1]) for g in elements]
    return np.concatenate(parts).astype(np.int64) if parts else np.zeros(0, dtype=np.int64)


def _right_multiplication(bundle: FellBundle, w: np.ndarray) -> np.ndarray:
    """Return the matrix of x ↦ x·w on the total space."""
    return np.einsum("j,ijk->ki", w, bundle.mul)


def pullback_bundle(
    cmb: FellBundleCM, f: CrossedModuleHom, tol: Optional[float] = None
) -> FellBundleCM:
    """Return f*𝒜: the fibre over x is 𝒜_{φ(x)} and 𝔲 is 𝔲∘ψ.

    Raises:
        Mismatch: If ``f`` does not land in the crossed module of ``cmb``.

    """
    if f.dst.G != cmb.C.G or f.dst.H != cmb.C.H:
        raise Mismatch("Homomorphism does not land in the crossed module of the bundle.")
    C, bundle = f.src, cmb.bundle
    phi = f.phi.map
    source = _fiber_indices(bundle, phi)
    dims = bundle.fiber_dims[phi]
    grade = np.repeat(np.arange(C.G.order), dims)

    expected = C.G.table[grade[:, None], grade[None, :]]
    mul = bundle.mul[np.ix_(source, source, source)] * (grade[None, None, :] == expected[:, :, None])
    star = bundle.star[np.ix_(source, source)] * (grade[:, None] == C.G.inverse[grade][None, :])
    pulled = make_fell_bundle(C.G, dims, mul, star, bundle.name, tol)

    u = cmb.u[f.psi.map][:, source] * (grade[None, :] == C.boundary.map[:, None])
    return make_cm_bundle(C, pulled, u, tol)


def restrict_bundle(
    cmb: FellBundleCM, inclusion: CrossedModuleHom, tol: Optional[float] = None
) -> FellBundleCM:
    """Return the restriction of a bundle to a sub crossed module C₁ → C.

    Raises:
        Mismatch: If the inclusion is not injective on G or on H.

    """
    if not (inclusion.phi.is_injective and inclusion.psi.is_injective):
        raise Mismatch("Restriction needs an injective homomorphism.")
    return pullback_bundle(cmb, inclusion, tol)


def graded_isomorphism(
    src: FellBundleCM, dst: FellBundleCM, theta: Any, tol: Optional[float] = None
) -> StarHom:
    """Check that ``theta`` is a graded *-isomorphism carrying 𝔲 to 𝔲.

    Args:
        src: The first bundle.
        dst: The second bundle, over the same crossed module.
        theta: Shape ``(dst.total_dim, src.total_dim)``, mapping 𝒜_g into ℬ_g.
        tol: Tolerance; defaults to the active setting.

    Returns:
        StarHom: ``theta`` as a map of total algebras.

    Raises:
        Mismatch: If the bundles live over different crossed modules.
        GradingViolation: If ``theta`` moves some fibre.
        BundleError: If ``theta`` is not bijective or does not preserve 𝔲.
        StarHomError: If ``theta`` is not a *-homomorphism.

    """
    tol = resolve_tolerance(tol)
    if src.C.G != dst.C.G or src.C.H != dst.C.H:
        raise Mismatch("Bundles live over different crossed modules.")
    a, b = src.bundle, dst.bundle
    m = np.asarray(theta, dtype=np.complex128)
    if m.shape != (b.total_dim, a.total_dim):
        raise BundleError(f"Map must have shape ({b.total_dim}, {a.total_dim}).")
    stray = (b.grade[:, None] != a.grade[None, :]) & (np.abs(m) > tol)
    if stray.any():
        j = int(np.argwhere(stray)[0][1])
        raise GradingViolation(f"Map moves basis element {j} out of its fibre.", (j,))
    if a.total_dim != b.total_dim or rank(m, tol) < a.total_dim:
        raise BundleError("Map is not bijective.")
    hom = make_star_hom(_total_algebra(a), _total_algebra(b), m, tol)
    deviation = np.abs(src.u @ m.T - dst.u).max(axis=1, initial=0.0)
    bad = np.flatnonzero(deviation > tol * max(1.0, float(np.abs(m).max())) * 10)
    if bad.size:
        raise BundleError(f"Map does not carry 𝔲_{int(bad[0])} to 𝔲_{int(bad[0])}.", (int(bad[0]),))
    return hom


def descend_bundle(
    cmb: FellBundleCM,
    projection: CrossedModuleHom,
    transversal: Optional[Any] = None,
    tol: Optional[float] = None,
) -> FellBundleCM:
    """Push a bundle down the quotient equivalence C → C/N.

    The fibre over a coset ḡ is 𝒜_{t(ḡ)} for the transversal t, and
    b₁·b₂ = a₁·a₂·𝔲_n* where t(ḡ₁)t(ḡ₂) = t(ḡ₁ḡ₂)∂(n). The result is
    checked by pulling it back along ``projection`` and comparing with the
    original bundle through a ↦ a·𝔲_n*.

    Args:
        cmb: The bundle over C.
        projection: The quotient map C → C/N, with N the kernel on H.
        transversal: One element of G per coset; defaults to the smallest.
        tol: Tolerance; defaults to the active setting.

    Returns:
        FellBundleCM: The bundle over C/N.

    Raises:
        Mismatch: If ``projection`` does not start at the crossed module of
            ``cmb``, ∂ is not injective on N, or the transversal is invalid.

    """
    tol = resolve_tolerance(tol)
    C, bundle = cmb.C, cmb.bundle
    C2 = projection.dst
    if projection.src.G != C.G or projection.src.H != C.H:
        raise Mismatch("Projection does not start at the crossed module of the bundle.")
    p = projection.phi.map
    N = kernel(projection.psi).elements
    boundary_of_n: Dict[int, int] = {}
    for n in N:
        if int(C.boundary.map[n]) in boundary_of_n:
            raise Mismatch("∂ is not injective on the kernel of the projection.", (int(n),))
        boundary_of_n[int(C.boundary.map[n])] = int(n)
    t = (
        coset_representatives(projection.phi)
        if transversal is None
        else np.asarray(transversal, dtype=np.int64)
    )
    if t.shape != (C2.G.order,) or not np.array_equal(p[t], np.arange(C2.G.order)):
        raise Mismatch("Transversal must pick one element from every coset.")

    def correction(x: int) -> int:
        """Return n ∈ N with x = t(p(x))·∂(n)."""
        return boundary_of_n[C.G.mul(C.G.inv(int(t[p[x]])), x)]

    def right_by_adjoint_u(n: int) -> np.ndarray:
        return _right_multiplication(bundle, bundle.adjoint(cmb.u[n]))

    dims = bundle.fiber_dims[t]
    offsets = np.concatenate([[0], np.cumsum(dims)]).astype(np.int64)
    total = int(offsets[-1])
    mul = np.zeros((total, total, total), dtype=np.complex128)
    star = np.zeros((total, total), dtype=np.complex128)
    G2 = C2.G
    for a in range(G2.order):
        sa = slice(offsets[a], offsets[a + 1])
        fa = bundle.fiber_slice(int(t[a]))
        for b in range(G2.order):
            c = G2.table[a, b]
            fb = bundle.fiber_slice(int(t[b]))
            right = right_by_adjoint_u(correction(C.G.mul(int(t[a]), int(t[b]))))
            block = bundle.mul[fa, fb, :] @ right.T
            mul[sa, offsets[b]:offsets[b + 1], offsets[c]:offsets[c + 1]] = (
                block[:, :, bundle.fiber_slice(int(t[c]))]
            )
        inv = G2.inv(a)
        right = right_by_adjoint_u(correction(C.G.inv(int(t[a]))))
        adjoints = right @ bundle.star[:, fa]
        star[offsets[inv]:offsets[inv + 1], sa] = adjoints[bundle.fiber_slice(int(t[inv]))]
    descended = make_fell_bundle(G2, dims, mul, star, bundle.name, tol)

    lift = coset_representatives(projection.psi)
    u = np.zeros((C2.H.order, total), dtype=np.complex128)
    for k2 in range(C2.H.order):
        k = int(lift[k2])
        x = C.d(k)
        corrected = C.H.mul(k, C.H.inv(correction(x)))
        g2 = int(p[x])
        u[k2, offsets[g2]:offsets[g2 + 1]] = bundle.component(cmb.u[corrected], int(t[g2]))
    result = make_cm_bundle(C2, descended, u, tol)

    pulled = pullback_bundle(result, projection, tol)
    theta = np.zeros((pulled.bundle.total_dim, bundle.total_dim), dtype=np.complex128)
    for x in range(C.G.order):
        right = right_by_adjoint_u(correction(x))
        theta[pulled.bundle.fiber_slice(x), bundle.fiber_slice(x)] = right[
            bundle.fiber_slice(int(t[p[x]])), bundle.fiber_slice(x)
        ]
    graded_isomorphism(cmb, pulled, theta, tol)
    return result
