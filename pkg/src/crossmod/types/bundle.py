"""Fell bundles, strict actions and representations."""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict

import numpy as np

from crossmod.types.algebra import StarAlgebra, _frozen_complex
from crossmod.types.crossed import CrossedModule
from crossmod.types.group import FiniteGroup, _frozen


@dataclass(eq=False)
class FellBundle:
    """A Fell bundle over a finite group, stored as its graded total algebra.

    The total space ⊕_g 𝒜_g has a basis ordered by grade: the fibre over
    ``g`` occupies ``offsets[g] .. offsets[g + 1]``. Built and validated by
    :func:`crossmod.bundles.make_fell_bundle`.

    Attributes:
        G (FiniteGroup): The grading group.
        fiber_dims (np.ndarray): Dimension of every fibre.
        mul (np.ndarray): Graded structure constants on the total space.
        star (np.ndarray): Graded involution on the total space.
        unit_fiber (StarAlgebra): The fibre over the identity as a C*-algebra.
        saturated (bool): Whether span(𝒜_g·𝒜_{g⁻¹}) = 𝒜₁ for every g.
        name (str): Optional label.

    """

    G: FiniteGroup
    fiber_dims: np.ndarray
    mul: np.ndarray
    star: np.ndarray
    unit_fiber: StarAlgebra
    saturated: bool = False
    name: str = ""

    def __post_init__(self) -> None:
        """Validate shapes and freeze the arrays."""
        self.fiber_dims = _frozen(self.fiber_dims)
        self.mul = _frozen_complex(self.mul)
        self.star = _frozen_complex(self.star)
        if self.fiber_dims.shape != (self.G.order,):
            raise ValueError("One fibre dimension per group element is required.")
        d = self.total_dim
        if self.mul.shape != (d, d, d) or self.star.shape != (d, d):
            raise ValueError(f"Total structure arrays must have dimension {d}.")

    @cached_property
    def offsets(self) -> np.ndarray:
        """Return the start of every fibre in the total basis, plus the total dimension."""
        return np.concatenate([[0], np.cumsum(self.fiber_dims)]).astype(np.int64)

    @property
    def total_dim(self) -> int:
        """Return Σ_g dim 𝒜_g."""
        return int(np.sum(self.fiber_dims))

    @cached_property
    def grade(self) -> np.ndarray:
        """Return the grade of every total basis element."""
        return np.repeat(np.arange(self.G.order), self.fiber_dims)

    def fiber_slice(self, g: int) -> slice:
        """Return the slice of the total basis holding the fibre over ``g``."""
        return slice(int(self.offsets[g]), int(self.offsets[g + 1]))

    def embed(self, g: int, a: np.ndarray) -> np.ndarray:
        """Return the total-space vector of ``a ∈ 𝒜_g``."""
        x = np.zeros(self.total_dim, dtype=np.complex128)
        x[self.fiber_slice(g)] = a
        return x

    def component(self, x: np.ndarray, g: int) -> np.ndarray:
        """Return the 𝒜_g component of a total-space vector."""
        return np.asarray(x)[self.fiber_slice(g)]

    @cached_property
    def unit(self) -> np.ndarray:
        """Return the unit of 𝒜₁ as a total-space vector."""
        return self.embed(0, self.unit_fiber.unit)

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Return the graded product of two total-space vectors."""
        return np.einsum("i,j,ijk->k", x, y, self.mul)

    def adjoint(self, x: np.ndarray) -> np.ndarray:
        """Return the graded adjoint of a total-space vector."""
        return self.star @ np.conj(x)

    def __repr__(self) -> str:
        """Return a short representation of the bundle."""
        return (
            f"FellBundle(|G|={self.G.order}, fiber_dims={self.fiber_dims.tolist()}, "
            f"saturated={self.saturated})"
        )


@dataclass(eq=False)
class FellBundleCM:
    """A Fell bundle over a crossed module: a bundle over G plus unitaries 𝔲_h.

    Attributes:
        C (CrossedModule): The crossed module.
        bundle (FellBundle): A Fell bundle over ``C.G``.
        u (np.ndarray): ``u[h]`` is the total-space vector of 𝔲_h ∈ 𝒜_{∂(h)}.

    """

    C: CrossedModule
    bundle: FellBundle
    u: np.ndarray

    def __post_init__(self) -> None:
        """Validate shapes and freeze the unitaries."""
        self.u = _frozen_complex(self.u).reshape(self.C.H.order, self.bundle.total_dim)

    def u_fiber(self, h: int) -> np.ndarray:
        """Return 𝔲_h as coefficients in the fibre over ∂(h)."""
        return self.bundle.component(self.u[h], self.C.d(h))

    def __repr__(self) -> str:
        """Return a short representation of the bundle."""
        return f"FellBundleCM({self.C!r}, fiber_dims={self.bundle.fiber_dims.tolist()})"


@dataclass(eq=False)
class StrictAction:
    """A strict action of a crossed module on a C*-algebra.

    Built and validated by :func:`crossmod.bundles.make_strict_action`.

    Attributes:
        A (StarAlgebra): The algebra acted upon.
        C (CrossedModule): The acting crossed module.
        alpha (np.ndarray): ``alpha[g]`` is the matrix of the automorphism α_g.
        u (np.ndarray): ``u[h]`` is the unitary u_h ∈ A.
        name (str): Optional label.

    """

    A: StarAlgebra
    C: CrossedModule
    alpha: np.ndarray
    u: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        """Validate shapes and freeze the arrays."""
        d = self.A.dim
        self.alpha = _frozen_complex(self.alpha).reshape(self.C.G.order, d, d)
        self.u = _frozen_complex(self.u).reshape(self.C.H.order, d)

    def __repr__(self) -> str:
        """Return a short representation of the action."""
        label = f"name='{self.name}', " if self.name else ""
        return f"StrictAction({label}dim A={self.A.dim}, {self.C!r})"

    def to_dict(self) -> Dict[str, Any]:
        """Return a summary of the action."""
        return {
            "name": self.name,
            "algebra_dim": self.A.dim,
            "G_order": self.C.G.order,
            "H_order": self.C.H.order,
        }


@dataclass(eq=False)
class Representation:
    """A representation of a Fell bundle over a crossed module.

    The per-fibre maps are stored side by side as one matrix on the total
    space; ``fiber_map(g)`` returns the block acting on 𝒜_g.

    Attributes:
        cmb (FellBundleCM): The represented bundle.
        target (StarAlgebra): The target algebra.
        matrix (np.ndarray): Shape ``(target.dim, total_dim)``.

    """

    cmb: FellBundleCM
    target: StarAlgebra
    matrix: np.ndarray

    def __post_init__(self) -> None:
        """Validate the shape and freeze the matrix."""
        self.matrix = _frozen_complex(self.matrix).reshape(
            self.target.dim, self.cmb.bundle.total_dim
        )

    def fiber_map(self, g: int) -> np.ndarray:
        """Return the linear map 𝒜_g → target."""
        return self.matrix[:, self.cmb.bundle.fiber_slice(g)]

    def __call__(self, x: np.ndarray) -> np.ndarray:
        """Apply the representation to a total-space vector."""
        return self.matrix @ x
