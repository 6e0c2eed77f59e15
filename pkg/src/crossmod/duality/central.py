"""The central C*(H)-structure of a bundle over a 2-Abelian crossed module."""

import warnings
from typing import List, Optional

import numpy as np

from crossmod.algebra import (
    group_algebra,
    ideal_generated,
    is_central,
    make_star_hom,
    quotient_algebra,
)
from crossmod.bundles import cross_sectional, crossed_product_ideal
from crossmod.config import resolve_tolerance
from crossmod.errors import DegenerateQuotientWarning, NotCentral, NotTwoAbelian
from crossmod.groups import character_group
from crossmod.types import CentralStructure, FellBundleCM, StarAlgebra, Subspace


def central_structure(cmb: FellBundleCM, tol: Optional[float] = None) -> CentralStructure:
    """Return the homomorphism δ_h ↦ 𝔲_h from C[H] into the cross-sectional algebra.

    Raises:
        NotTwoAbelian: If the action of G on H is not trivial.
        NotCentral: With the first h whose 𝔲_h is not central.

    """
    tol = resolve_tolerance(tol)
    C = cmb.C
    if not C.is_two_abelian:
        raise NotTwoAbelian("The central structure needs a 2-Abelian crossed module.")
    algebra, _ = cross_sectional(cmb.bundle, tol)
    for h in range(C.H.order):
        if not is_central(algebra, cmb.u[h], tol):
            raise NotCentral(f"𝔲_{h} does not commute with the algebra.", (h,))
    hom = make_star_hom(group_algebra(C.H), algebra, cmb.u.T, tol)
    return CentralStructure(algebra, C.H, hom, character_group(C.H))


def spectral_projection(cs: CentralStructure, chi: int) -> np.ndarray:
    """Return the image of p_χ = |H|⁻¹ Σ_h ⟨χ, h⟩* δ_h."""
    weights = np.conj(cs.characters.pairing[chi]) / cs.H.order
    return cs.hom.matrix @ weights


def fiber_ideal(cs: CentralStructure, chi: int, tol: Optional[float] = None) -> Subspace:
    """Return the ideal of the fibre at χ, generated by p_ψ for every ψ ≠ χ."""
    gens = [spectral_projection(cs, psi) for psi in range(cs.characters.dual.order) if psi != chi]
    return ideal_generated(cs.algebra, gens, tol)


def fiber_at(cs: CentralStructure, chi: int, tol: Optional[float] = None) -> StarAlgebra:
    """Return the fibre of the algebra over the character χ of H."""
    fiber, _ = quotient_algebra(cs.algebra, fiber_ideal(cs, chi, tol), tol)
    return fiber


def fiber_dimensions(cs: CentralStructure, tol: Optional[float] = None) -> List[int]:
    """Return the dimension of the fibre over every character, in character order."""
    dims = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateQuotientWarning)
        for chi in range(cs.characters.dual.order):
            dims.append(fiber_at(cs, chi, tol).dim)
    return dims


def crossed_product_via_fiber_check(cmb: FellBundleCM, tol: Optional[float] = None) -> bool:
    """Return True if I_u equals the ideal of the fibre at the trivial character.

    I_u is generated by 𝔲_h − 1 and the fibre ideal by the spectral
    projections of the non-trivial characters; the two are computed
    separately and compared as subspaces.
    """
    tol = resolve_tolerance(tol)
    cs = central_structure(cmb, tol)
    return crossed_product_ideal(cmb, tol).equals(fiber_ideal(cs, cs.characters.trivial, tol), tol)
