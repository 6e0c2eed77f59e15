"""Pontryagin duality for Abelian crossed modules."""

from typing import Tuple

from crossmod.errors import NotAbelianCM
from crossmod.groups import bidual_map, character_group, dual_hom
from crossmod.modules.base import make_crossed_module
from crossmod.modules.homs import make_cm_hom
from crossmod.types import CharacterGroup, CrossedModule, CrossedModuleHom


def dual_characters(C: CrossedModule) -> Tuple[CharacterGroup, CharacterGroup]:
    """Return the character groups of G and H.

    Raises:
        NotAbelianCM: If C is not Abelian.

    """
    if not C.is_abelian:
        raise NotAbelianCM("Duality needs an Abelian crossed module.")
    return character_group(C.G), character_group(C.H)


def dual_crossed_module(C: CrossedModule) -> CrossedModule:
    """Return the dual crossed module ∂̂: Ĝ → Ĥ with trivial action.

    Raises:
        NotAbelianCM: If C is not Abelian.

    """
    cg_g, cg_h = dual_characters(C)
    boundary = dual_hom(C.boundary, cg_h, cg_g)
    name = f"dual({C.name})" if C.name else ""
    return make_crossed_module(cg_h.dual, cg_g.dual, boundary, None, name)


def dual_cm_hom(f: CrossedModuleHom) -> CrossedModuleHom:
    """Return the transpose f̂: D̂ → Ĉ of f: C → D between Abelian crossed modules."""
    cg_g1, cg_h1 = dual_characters(f.src)
    cg_g2, cg_h2 = dual_characters(f.dst)
    phi = dual_hom(f.psi, cg_h1, cg_h2)
    psi = dual_hom(f.phi, cg_g1, cg_g2)
    return make_cm_hom(dual_crossed_module(f.dst), dual_crossed_module(f.src), phi, psi)


def bidual_cm_hom(C: CrossedModule) -> CrossedModuleHom:
    """Return the evaluation isomorphism C → dual(dual(C))."""
    cg_g, cg_h = dual_characters(C)
    phi, _ = bidual_map(cg_g)
    psi, _ = bidual_map(cg_h)
    return make_cm_hom(C, dual_crossed_module(dual_crossed_module(C)), phi, psi)
