"""Strict extensions of crossed modules and the standard examples."""

from typing import Any

import numpy as np

from crossmod.errors import Mismatch, NotExtension
from crossmod.groups import is_extension, quotient, semidirect_product, subgroup
from crossmod.modules.base import group_crossed_module, make_crossed_module
from crossmod.modules.homs import make_cm_hom
from crossmod.types import CrossedModule, CrossedModuleHom, FiniteGroup, StrictExtension


def make_strict_extension(
    C1: CrossedModule,
    C2: CrossedModule,
    C3: CrossedModule,
    incl: CrossedModuleHom,
    proj: CrossedModuleHom,
    name: str = "",
) -> StrictExtension:
    """Validate C₁ ↣ C₂ ↠ C₃ as a strict extension.

    Raises:
        Mismatch: If the homomorphisms do not connect the given crossed modules.
        NotExtension: Naming the level (``"H"`` or ``"G"``) that is not an extension.

    """
    links = ((incl.src, C1), (incl.dst, C2), (proj.src, C2), (proj.dst, C3))
    if not all(a.G == b.G and a.H == b.H for a, b in links):
        raise Mismatch("Homomorphisms do not connect C₁ → C₂ → C₃.")
    if not is_extension(incl.psi, proj.psi):
        raise NotExtension("H₁ → H₂ → H₃ is not an extension.", ("H",))
    if not is_extension(incl.phi, proj.phi):
        raise NotExtension("G₁ → G₂ → G₃ is not an extension.", ("G",))
    return StrictExtension(C1, C2, C3, incl, proj, name)


def semidirect_crossed_module(C: CrossedModule) -> CrossedModule:
    """Return (G⋉H, H) with ∂(k) = (1, k) and (g, h) acting by k ↦ c_g(hkh⁻¹)."""
    G, H = C.G, C.H
    product = semidirect_product(G, H, C.conj)
    m = H.order
    idx = np.arange(product.order)
    g, h = idx // m, idx % m
    inner = H.table[H.table[h[:, None], np.arange(m)[None, :]], H.inverse[h][:, None]]
    conj = C.conj[g[:, None], inner]
    name = f"{G.name or 'G'} ⋉ {H.name or 'H'}"
    return make_crossed_module(product, H, np.arange(m), conj, name)


def example_extension(C: CrossedModule) -> StrictExtension:
    """Return the strict extension (H, 1) ↣ (G⋉H, H) ↠ C.

    The inclusion sends h to (∂(h), h⁻¹) and the projection sends (g, h) to
    g·∂(h) on the base and is the identity on H.
    """
    G, H = C.G, C.H
    C1 = group_crossed_module(H, H.name)
    C2 = semidirect_crossed_module(C)
    m = H.order
    idx = np.arange(C2.G.order)
    incl = make_cm_hom(C1, C2, C.boundary.map * m + H.inverse, np.zeros(1, dtype=np.int64))
    proj = make_cm_hom(C2, C, G.table[idx // m, C.boundary.map[idx % m]], np.arange(m))
    return make_strict_extension(C1, C2, C, incl, proj, f"example({C.name})")


def green_extension(G: FiniteGroup, N: Any) -> StrictExtension:
    """Return (N, 1) ↣ (G, 1) ↠ (G/N, 1) for a normal subgroup N.

    Raises:
        NotNormal: If N is not normal in G.

    """
    sub = subgroup(G, N)
    Q, projection = quotient(G, sub)
    C1 = group_crossed_module(sub.group, "N")
    C2 = group_crossed_module(G)
    C3 = group_crossed_module(Q, "G/N")
    zero = np.zeros(1, dtype=np.int64)
    incl = make_cm_hom(C1, C2, sub.elements, zero)
    proj = make_cm_hom(C2, C3, projection.map, zero)
    return make_strict_extension(C1, C2, C3, incl, proj, f"green({G.name})")
