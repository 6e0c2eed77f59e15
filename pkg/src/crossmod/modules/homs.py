"""Homomorphisms of crossed modules and the maps they induce on π₁ and π₂."""

from dataclasses import dataclass
from typing import Any

import numpy as np

from crossmod.errors import BoundaryMismatch, EquivarianceMismatch, Mismatch
from crossmod.groups import compose, coset_representatives, identity_hom, make_hom
from crossmod.modules.base import _as_hom, pi2
from crossmod.types import CrossedModule, CrossedModuleHom, GroupHom


def make_cm_hom(src: CrossedModule, dst: CrossedModule, phi: Any, psi: Any) -> CrossedModuleHom:
    """Validate a pair (φ, ψ) as a homomorphism of crossed modules.

    Args:
        src: Domain.
        dst: Codomain.
        phi: G₁ → G₂, as a GroupHom or index array.
        psi: H₁ → H₂, as a GroupHom or index array.

    Returns:
        CrossedModuleHom: The validated homomorphism.

    Raises:
        NotHomomorphism: If φ or ψ is not a group homomorphism.
        BoundaryMismatch: With an element h where ∂₂ψ(h) ≠ φ∂₁(h).
        EquivarianceMismatch: With a pair (g, h) where c_{φ(g)}(ψ(h)) ≠ ψ(c_g(h)).

    """
    phi_hom = _as_hom(src.G, dst.G, phi)
    psi_hom = _as_hom(src.H, dst.H, psi)
    lhs = dst.boundary.map[psi_hom.map]
    rhs = phi_hom.map[src.boundary.map]
    bad = np.flatnonzero(lhs != rhs)
    if bad.size:
        h = int(bad[0])
        raise BoundaryMismatch(f"∂₂∘ψ and φ∘∂₁ differ on element {h}.", (h,))
    lhs = dst.conj[phi_hom.map[:, None], psi_hom.map[None, :]]
    rhs = psi_hom.map[src.conj]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        g, h = (int(v) for v in bad[0])
        raise EquivarianceMismatch(
            f"c_φ({g})(ψ({h})) differs from ψ(c_{g}({h})).", (g, h)
        )
    return CrossedModuleHom(src, dst, phi_hom, psi_hom)


def identity_cm_hom(C: CrossedModule) -> CrossedModuleHom:
    """Return the identity homomorphism of C."""
    return CrossedModuleHom(C, C, identity_hom(C.G), identity_hom(C.H))


def compose_cm_hom(second: CrossedModuleHom, first: CrossedModuleHom) -> CrossedModuleHom:
    """Return ``second ∘ first``.

    Raises:
        Mismatch: If the crossed modules in the middle differ.

    """
    if first.dst.G != second.src.G or first.dst.H != second.src.H:
        raise Mismatch("Cannot compose: codomain and domain differ.")
    return CrossedModuleHom(
        first.src, second.dst, compose(second.phi, first.phi), compose(second.psi, first.psi)
    )


@dataclass(eq=False)
class PiMaps:
    """Maps induced on π₁ and π₂ by a crossed-module homomorphism.

    Attributes:
        pi1_map (GroupHom): π₁(src) → π₁(dst).
        pi2_map (GroupHom): π₂(src) → π₂(dst).
        compatible (bool): Whether ``pi2_map`` intertwines the π₁-actions
            through ``pi1_map``.

    """

    pi1_map: GroupHom
    pi2_map: GroupHom
    compatible: bool

    @property
    def is_isomorphism(self) -> bool:
        """Return True if both maps are bijective and the actions correspond."""
        return self.pi1_map.is_isomorphism and self.pi2_map.is_isomorphism and self.compatible


def induced_pi_maps(f: CrossedModuleHom) -> PiMaps:
    """Return the maps f induces on π₁ and π₂ and check module compatibility."""
    mod_src, mod_dst = pi2(f.src), pi2(f.dst)
    reps = coset_representatives(mod_src.projection)
    pi1_map = make_hom(
        mod_src.pi1, mod_dst.pi1, mod_dst.projection.map[f.phi.map[reps]]
    )
    position = np.full(f.dst.H.order, -1, dtype=np.int64)
    position[mod_dst.kernel.elements] = np.arange(mod_dst.kernel.order)
    pi2_map = make_hom(
        mod_src.group, mod_dst.group, position[f.psi.map[mod_src.kernel.elements]]
    )
    lhs = pi2_map.map[mod_src.action]
    rhs = mod_dst.action[pi1_map.map[:, None], pi2_map.map[None, :]]
    return PiMaps(pi1_map, pi2_map, bool(np.array_equal(lhs, rhs)))
