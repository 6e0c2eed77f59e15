"""Strict extensions of crossed modules and partial crossed products."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from crossmod.types.algebra import StarAlgebra, StarHom
from crossmod.types.bundle import StrictAction
from crossmod.types.crossed import CrossedModule, CrossedModuleHom, EquivalenceCertificate
from crossmod.types.group import GroupHom


@dataclass(eq=False)
class StrictExtension:
    """A strict extension C₁ ↣ C₂ ↠ C₃ of crossed modules.

    Attributes:
        C1 (CrossedModule): The kernel.
        C2 (CrossedModule): The middle crossed module.
        C3 (CrossedModule): The quotient.
        incl (CrossedModuleHom): C₁ → C₂.
        proj (CrossedModuleHom): C₂ → C₃.
        name (str): Optional label.

    """

    C1: CrossedModule
    C2: CrossedModule
    C3: CrossedModule
    incl: CrossedModuleHom
    proj: CrossedModuleHom
    name: str = ""

    def __repr__(self) -> str:
        """Return a short representation."""
        return (
            f"StrictExtension(|G₁|={self.C1.G.order}, |G₂|={self.C2.G.order}, "
            f"|G₃|={self.C3.G.order})"
        )


@dataclass(eq=False)
class IntermediateAction:
    """The strict action of Cmid on A⋊C₁ produced by a partial crossed product.

    Attributes:
        base (StarAlgebra): A⋊C₁.
        base_projection (StarHom): C*(A⋊G₁-bundle) → A⋊C₁.
        Cmid (CrossedModule): (G₂, (G₁⋉H₂)/Δ(H₁)).
        action (StrictAction): γ and U as a validated strict action of Cmid.
        semidirect_projection (GroupHom): G₁⋉H₂ → H of Cmid.
        to_quotient (CrossedModuleHom): Cmid → C₃, shown to be an equivalence.
        certificate (EquivalenceCertificate): Equivalence certificate for ``to_quotient``.

    """

    base: StarAlgebra
    base_projection: StarHom
    Cmid: CrossedModule
    action: StrictAction
    semidirect_projection: GroupHom
    to_quotient: CrossedModuleHom
    certificate: EquivalenceCertificate

    @property
    def gamma(self) -> np.ndarray:
        """Return the G₂-action on the base, one matrix per element."""
        return self.action.alpha

    @property
    def U(self) -> np.ndarray:
        """Return the unitaries of the arrows of Cmid."""
        return self.action.u


@dataclass
class StepRecord:
    """One step of a decomposition run.

    Attributes:
        name (str): Step identifier.
        dim (int): Dimension of the algebra produced.
        dimension_vector (list): Wedderburn block sizes of that algebra.
        ideal_dim (Optional[int]): Dimension of the ideal divided out, if any.
        checks (Dict[str, bool]): Named checks performed at this step.

    """

    name: str
    dim: int
    dimension_vector: list
    ideal_dim: Optional[int] = None
    checks: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Return the step as a dictionary."""
        result: Dict[str, Any] = {
            "name": self.name,
            "dim": self.dim,
            "dimension_vector": list(self.dimension_vector),
            "checks": dict(self.checks),
        }
        if self.ideal_dim is not None:
            result["ideal_dim"] = self.ideal_dim
        return result


@dataclass
class DecompositionReport:
    """Structured outcome of the four-step factorization of A⋊C.

    Attributes:
        steps (list): The ordered step records.
        direct (StepRecord): The directly computed crossed product.
        seed (int): Seed used for every Wedderburn computation.
        success (bool): Whether the final algebra matches the direct one.

    """

    steps: list
    direct: StepRecord
    seed: int
    success: bool

    def to_dict(self) -> Dict[str, Any]:
        """Return the report as a dictionary."""
        return {
            "steps": [s.to_dict() for s in self.steps],
            "direct": self.direct.to_dict(),
            "seed": self.seed,
            "success": self.success,
        }
