"""Splitting a crossed module into its kernel, thin and cokernel parts."""

from dataclasses import dataclass

import numpy as np

from crossmod.groups import identity_hom, image, kernel, quotient, trivial_group, trivial_hom
from crossmod.modules.base import group_crossed_module, make_crossed_module
from crossmod.modules.equivalences import quotient_by
from crossmod.modules.extension import make_strict_extension
from crossmod.modules.homs import make_cm_hom
from crossmod.types import CrossedModule, StrictExtension


@dataclass(eq=False)
class CrossedModuleDecomposition:
    """The pieces C₁ = (1, ker ∂), C₂ = (G, H/ker ∂), C₃ = (∂H, H/ker ∂), C₄ = (G/∂H, 1).

    Attributes:
        C1 (CrossedModule): The kernel part.
        C2 (CrossedModule): C with ker ∂ divided out.
        C3 (CrossedModule): The thin part.
        C4 (CrossedModule): The cokernel part.
        first (StrictExtension): C₁ ↣ C ↠ C₂.
        second (StrictExtension): C₃ ↣ C₂ ↠ C₄.

    """

    C1: CrossedModule
    C2: CrossedModule
    C3: CrossedModule
    C4: CrossedModule
    first: StrictExtension
    second: StrictExtension


def decompose(C: CrossedModule) -> CrossedModuleDecomposition:
    """Return the two strict extensions that split C into Abelian and group-like parts."""
    ker = kernel(C.boundary)
    C1 = make_crossed_module(
        trivial_group(), ker.group, np.zeros(ker.order), None, "ker ∂"
    )
    C2, to_c2 = quotient_by(C, ker, "H/ker ∂")
    incl = make_cm_hom(C1, C, trivial_hom(C1.G, C.G), ker.elements)
    first = make_strict_extension(C1, C, C2, incl, to_c2, "kernel")

    im = image(C2.boundary)
    position = np.full(C2.G.order, -1, dtype=np.int64)
    position[im.elements] = np.arange(im.order)
    conj3 = C2.conj[im.elements]
    C3 = make_crossed_module(im.group, C2.H, position[C2.boundary.map], conj3, "thin")
    G4, p4 = quotient(C2.G, im)
    C4 = group_crossed_module(G4, "π₁")
    incl3 = make_cm_hom(C3, C2, im.elements, identity_hom(C2.H).map)
    proj4 = make_cm_hom(C2, C4, p4.map, np.zeros(C2.H.order, dtype=np.int64))
    second = make_strict_extension(C3, C2, C4, incl3, proj4, "thin")
    return CrossedModuleDecomposition(C1, C2, C3, C4, first, second)
