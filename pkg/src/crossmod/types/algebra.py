"""Finite-dimensional *-algebra data types for crossmod."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np


def _frozen_complex(array: Any) -> np.ndarray:
    result = np.array(array, dtype=np.complex128)
    result.setflags(write=False)
    return result


@dataclass(frozen=True)
class DimensionVector:
    """Sorted block sizes [n₁ ≤ … ≤ n_k] of a finite-dimensional C*-algebra.

    Attributes:
        sizes (Tuple[int, ...]): The block sizes; sorted on construction.

    """

    sizes: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Sort the sizes and reject non-positive blocks."""
        sizes = tuple(sorted(int(n) for n in self.sizes))
        if any(n <= 0 for n in sizes):
            raise ValueError("Block sizes must be positive integers.")
        object.__setattr__(self, "sizes", sizes)

    @property
    def total_dim(self) -> int:
        """Return Σ nᵢ², the dimension of the algebra described."""
        return sum(n * n for n in self.sizes)

    def __iter__(self) -> Iterator[int]:
        """Iterate over the block sizes."""
        return iter(self.sizes)

    def __len__(self) -> int:
        """Return the number of blocks."""
        return len(self.sizes)

    def to_list(self) -> List[int]:
        """Return the sizes as a list."""
        return list(self.sizes)

    def __repr__(self) -> str:
        """Return the sizes as a bracketed list."""
        return f"DimensionVector({list(self.sizes)})"


@dataclass(eq=False)
class StarAlgebra:
    """A finite-dimensional complex *-algebra given by structure constants.

    ``eᵢ·eⱼ = Σₖ mul[i, j, k]·eₖ``; column ``j`` of ``star`` holds the
    coefficients of ``eⱼ*``, so ``x* = star @ conj(x)``. Instances are
    validated by :func:`crossmod.algebra.make_algebra`; the constructor only
    checks shapes.

    Attributes:
        mul (np.ndarray): Structure constants, shape ``(d, d, d)``.
        star (np.ndarray): Involution on basis elements, shape ``(d, d)``.
        unit (np.ndarray): Coefficients of the unit, shape ``(d,)``.
        name (str): Optional label.

    """

    mul: np.ndarray
    star: np.ndarray
    unit: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        """Validate shapes and freeze the arrays."""
        self.mul = _frozen_complex(self.mul)
        self.star = _frozen_complex(self.star)
        self.unit = _frozen_complex(self.unit).reshape(-1)
        d = self.unit.shape[0]
        if self.mul.shape != (d, d, d):
            raise ValueError(f"Structure constants must have shape ({d}, {d}, {d}).")
        if self.star.shape != (d, d):
            raise ValueError(f"Involution matrix must have shape ({d}, {d}).")

    @property
    def dim(self) -> int:
        """Return the dimension of the algebra."""
        return int(self.unit.shape[0])

    @property
    def degenerate(self) -> bool:
        """Return True for the zero algebra."""
        return self.dim == 0

    def basis(self, i: int) -> np.ndarray:
        """Return the coefficient vector of basis element ``eᵢ``."""
        e = np.zeros(self.dim, dtype=np.complex128)
        e[i] = 1.0
        return e

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Return ``x·y``."""
        return np.einsum("i,j,ijk->k", x, y, self.mul)

    def adjoint(self, x: np.ndarray) -> np.ndarray:
        """Return ``x*``."""
        return self.star @ np.conj(x)

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        """Return the matrix of ``y ↦ x·y``."""
        return np.einsum("i,ijk->kj", x, self.mul)

    def right_matrix(self, y: np.ndarray) -> np.ndarray:
        """Return the matrix of ``x ↦ x·y``."""
        return np.einsum("j,ijk->ki", y, self.mul)

    @cached_property
    def left_stack(self) -> np.ndarray:
        """Return all ``L_{eᵢ}`` stacked, shape ``(d, d, d)``."""
        return np.ascontiguousarray(self.mul.transpose(0, 2, 1))

    @cached_property
    def right_stack(self) -> np.ndarray:
        """Return all ``R_{eᵢ}`` stacked, shape ``(d, d, d)``."""
        return np.ascontiguousarray(self.mul.transpose(1, 2, 0))

    @cached_property
    def trace_functional(self) -> np.ndarray:
        """Return τ with ``τ·x = trace(L_x)``."""
        return np.einsum("ikk->i", self.mul)

    @cached_property
    def trace_form(self) -> np.ndarray:
        """Return the Gram matrix ``M[i, j] = trace(L_{eᵢ* eⱼ})``."""
        weights = self.mul @ self.trace_functional
        return self.star.T @ weights

    def is_unitary(self, x: np.ndarray, tol: float = 1e-9) -> bool:
        """Return True if ``x*x = xx* = 1``."""
        xs = self.adjoint(x)
        scale = max(1.0, float(np.abs(self.unit).max(initial=0.0)))
        return bool(
            np.abs(self.product(xs, x) - self.unit).max(initial=0.0) <= tol * scale * 10
            and np.abs(self.product(x, xs) - self.unit).max(initial=0.0) <= tol * scale * 10
        )

    def commutator_norm(self, x: np.ndarray) -> float:
        """Return the largest entry of ``L_x − R_x``."""
        return float(np.abs(self.left_matrix(x) - self.right_matrix(x)).max(initial=0.0))

    def __repr__(self) -> str:
        """Return a short representation of the algebra."""
        label = f"name='{self.name}', " if self.name else ""
        return f"StarAlgebra({label}dim={self.dim})"

    def to_dict(self, include_constants: bool = False) -> Dict[str, Any]:
        """Return a debugging dictionary (structure constants on request)."""
        result: Dict[str, Any] = {"dim": self.dim}
        if self.name:
            result["name"] = self.name
        if include_constants:
            result["mul"] = [[[_pair(z) for z in row] for row in m] for m in self.mul]
            result["star"] = [[_pair(z) for z in row] for row in self.star]
            result["unit"] = [_pair(z) for z in self.unit]
        return result


def _pair(z: complex) -> List[float]:
    return [round(float(np.real(z)), 12), round(float(np.imag(z)), 12)]


@dataclass(eq=False)
class StarHom:
    """A linear map between *-algebras, validated as a unital *-homomorphism.

    Attributes:
        src (StarAlgebra): Domain.
        dst (StarAlgebra): Codomain.
        matrix (np.ndarray): Shape ``(dst.dim, src.dim)``.

    """

    src: StarAlgebra
    dst: StarAlgebra
    matrix: np.ndarray

    def __post_init__(self) -> None:
        """Validate the matrix shape."""
        self.matrix = _frozen_complex(self.matrix).reshape(self.dst.dim, self.src.dim)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        """Apply the map to a coefficient vector."""
        return self.matrix @ x

    def __repr__(self) -> str:
        """Return a short representation of the map."""
        return f"StarHom(src_dim={self.src.dim}, dst_dim={self.dst.dim})"


@dataclass(eq=False)
class Subspace:
    """A subspace of coefficient space with an orthonormal basis.

    Attributes:
        basis (np.ndarray): Orthonormal columns, shape ``(ambient_dim, dim)``.

    """

    basis: np.ndarray

    def __post_init__(self) -> None:
        """Freeze the basis."""
        self.basis = _frozen_complex(self.basis)
        if self.basis.ndim != 2:
            raise ValueError("Subspace basis must be a 2-dimensional array.")

    @property
    def dim(self) -> int:
        """Return the dimension of the subspace."""
        return int(self.basis.shape[1])

    @property
    def ambient_dim(self) -> int:
        """Return the dimension of the ambient space."""
        return int(self.basis.shape[0])

    def project(self, vectors: np.ndarray) -> np.ndarray:
        """Return the orthogonal projection of ``vectors`` onto the subspace."""
        return self.basis @ (self.basis.conj().T @ vectors)

    def residual(self, vectors: np.ndarray) -> float:
        """Return the largest distance of a column of ``vectors`` from the subspace."""
        vectors = np.asarray(vectors).reshape(self.ambient_dim, -1)
        if vectors.shape[1] == 0:
            return 0.0
        return float(np.linalg.norm(vectors - self.project(vectors), axis=0).max())

    def contains(self, vectors: np.ndarray, tol: float = 1e-9) -> bool:
        """Return True if every column of ``vectors`` lies in the subspace."""
        vectors = np.asarray(vectors).reshape(self.ambient_dim, -1)
        scale = max(1.0, float(np.linalg.norm(vectors, axis=0).max(initial=0.0)))
        return self.residual(vectors) <= tol * scale * 10

    def equals(self, other: "Subspace", tol: float = 1e-9) -> bool:
        """Return True if both subspaces have equal dimension and contain each other."""
        return (
            self.dim == other.dim
            and self.contains(other.basis, tol)
            and other.contains(self.basis, tol)
        )

    def __repr__(self) -> str:
        """Return a short representation of the subspace."""
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


@dataclass(eq=False)
class WedderburnDecomposition:
    """Minimal central idempotents and block sizes of a C*-algebra.

    Attributes:
        dimension_vector (DimensionVector): Sorted block sizes.
        idempotents (List[np.ndarray]): Minimal central projections, sorted as the blocks.
        seed (int): Seed of the central element that produced the split.
        attempts (int): Number of samples drawn.

    """

    dimension_vector: DimensionVector
    idempotents: List[np.ndarray] = field(default_factory=list, repr=False)
    seed: int = 0
    attempts: int = 1
    center_basis: Optional[np.ndarray] = field(default=None, repr=False)
