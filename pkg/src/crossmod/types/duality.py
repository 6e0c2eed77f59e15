"""Data types for the 2-Abelian duality."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from crossmod.types.algebra import StarAlgebra, StarHom, _frozen_complex
from crossmod.types.crossed import CrossedModule
from crossmod.types.group import CharacterGroup, FiniteGroup, GroupHom


@dataclass(eq=False)
class CentralStructure:
    """A central unital *-homomorphism C[H] → algebra.

    Attributes:
        algebra (StarAlgebra): The target, usually a cross-sectional algebra.
        H (FiniteGroup): An Abelian group.
        hom (StarHom): The homomorphism from the group algebra of ``H``.
        characters (CharacterGroup): Characters of ``H``.

    """

    algebra: StarAlgebra
    H: FiniteGroup
    hom: StarHom
    characters: CharacterGroup

    def __repr__(self) -> str:
        """Return a short representation."""
        return f"CentralStructure(|H|={self.H.order}, dim={self.algebra.dim})"


@dataclass(eq=False)
class GroupoidAction:
    """An action of the arrow groupoid of the dual crossed module.

    The dual group Ĝ acts on ``B`` by ``beta`` and functions on Ĥ sit
    centrally in ``B`` through ``struct_map``, with
    ``β_ĝ(struct_map(f)) = struct_map(f(· ∂̂(ĝ)))``.

    Attributes:
        B (StarAlgebra): The algebra.
        C (CrossedModule): The Abelian crossed module whose dual acts.
        G_chars (CharacterGroup): Characters of G; ``G_chars.dual`` is Ĝ.
        H_chars (CharacterGroup): Characters of H; ``H_chars.dual`` is Ĥ.
        boundary_dual (GroupHom): ∂̂: Ĝ → Ĥ.
        beta (np.ndarray): ``beta[ĝ]`` is the matrix of β_ĝ on ``B``.
        struct_map (StarHom): Functions on Ĥ → B, basis ordered as ``H_chars.dual``.
        source (Optional[object]): The strict action this came from, if any.

    """

    B: StarAlgebra
    C: CrossedModule
    G_chars: CharacterGroup
    H_chars: CharacterGroup
    boundary_dual: GroupHom
    beta: np.ndarray
    struct_map: StarHom
    source: Optional[object] = None

    def __post_init__(self) -> None:
        """Freeze the action matrices."""
        self.beta = _frozen_complex(self.beta).reshape(
            self.G_chars.dual.order, self.B.dim, self.B.dim
        )

    def __repr__(self) -> str:
        """Return a short representation."""
        return f"GroupoidAction(dim B={self.B.dim}, |Ĝ|={self.G_chars.dual.order})"
