"""Standard finite-dimensional C*-algebras and constructions on them."""

from typing import Any, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import linalg as sla

from crossmod.algebra.base import make_algebra
from crossmod.algebra.linalg import rank, solve_least_squares
from crossmod.config import resolve_tolerance
from crossmod.errors import AlgebraError, NotClosed
from crossmod.types import FiniteGroup, StarAlgebra


def complex_numbers() -> StarAlgebra:
    """Return ℂ as a one-dimensional C*-algebra."""
    return StarAlgebra(np.ones((1, 1, 1)), np.ones((1, 1)), np.ones(1), "C")


def matrix_algebra(n: int) -> StarAlgebra:
    """Return M_n with matrix units E_ab at index ``a·n + b``."""
    if n < 1:
        raise AlgebraError("Matrix size must be positive.")
    d = n * n
    mul = np.zeros((d, d, d))
    star = np.zeros((d, d))
    for a in range(n):
        for b in range(n):
            star[b * n + a, a * n + b] = 1.0
            for c in range(n):
                mul[a * n + b, b * n + c, a * n + c] = 1.0
    unit = np.zeros(d)
    unit[np.arange(n) * (n + 1)] = 1.0
    return StarAlgebra(mul, star, unit, f"M{n}")


def functions_on(points: Union[int, Sequence[Any]]) -> StarAlgebra:
    """Return the algebra of functions on a finite set, with point indicators as basis."""
    n = points if isinstance(points, int) else len(points)
    if n < 1:
        raise AlgebraError("A finite set must have at least one point.")
    mul = np.zeros((n, n, n))
    idx = np.arange(n)
    mul[idx, idx, idx] = 1.0
    return StarAlgebra(mul, np.eye(n), np.ones(n), f"C({n})")


def group_algebra(g: FiniteGroup) -> StarAlgebra:
    """Return the group algebra with basis δ_g, δ_g·δ_h = δ_{gh} and δ_g* = δ_{g⁻¹}."""
    n = g.order
    mul = np.zeros((n, n, n))
    idx = np.arange(n)
    mul[idx[:, None], idx[None, :], g.table] = 1.0
    star = np.zeros((n, n))
    star[g.inverse, idx] = 1.0
    unit = np.zeros(n)
    unit[0] = 1.0
    return StarAlgebra(mul, star, unit, f"C[{g.name}]" if g.name else "")


def direct_sum(*algebras: StarAlgebra) -> StarAlgebra:
    """Return the direct sum, with the summands' bases concatenated."""
    if not algebras:
        raise AlgebraError("Direct sum needs at least one summand.")
    d = sum(a.dim for a in algebras)
    mul = np.zeros((d, d, d), dtype=np.complex128)
    star = np.zeros((d, d), dtype=np.complex128)
    unit = np.zeros(d, dtype=np.complex128)
    offset = 0
    for a in algebras:
        block = slice(offset, offset + a.dim)
        mul[block, block, block] = a.mul
        star[block, block] = a.star
        unit[block] = a.unit
        offset += a.dim
    return StarAlgebra(mul, star, unit, " ⊕ ".join(a.name for a in algebras if a.name))


def tensor(a: StarAlgebra, b: StarAlgebra) -> StarAlgebra:
    """Return ``a ⊗ b`` with basis ``eᵢ ⊗ fⱼ`` at index ``i·dim b + j``."""
    d = a.dim * b.dim
    mul = np.einsum("ikm,jln->ijklmn", a.mul, b.mul).reshape(d, d, d)
    name = f"{a.name} ⊗ {b.name}" if a.name and b.name else ""
    return StarAlgebra(mul, np.kron(a.star, b.star), np.kron(a.unit, b.unit), name)


def change_basis(a: StarAlgebra, u: Any, tol: Optional[float] = None) -> StarAlgebra:
    """Return the same algebra written in the basis ``fₐ = Σⱼ u[j, a]·eⱼ``.

    Raises:
        AlgebraError: If ``u`` is not invertible.

    """
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (a.dim, a.dim) or rank(u, tol) < a.dim:
        raise AlgebraError("Change of basis must be an invertible square matrix.")
    u_inv = sla.inv(u)
    mul = np.einsum("ja,kb,jkm,nm->abn", u, u, a.mul, u_inv, optimize=True)
    star = u_inv @ a.star @ np.conj(u)
    return make_algebra(mul, star, u_inv @ a.unit, a.name, tol)


def faithful_representation(a: StarAlgebra) -> np.ndarray:
    """Return matrices ``π(eᵢ)`` of a faithful *-representation.

    The left regular representation is a *-representation for the inner
    product given by the trace form; a Cholesky factor of that form makes it
    one for the standard inner product.

    Returns:
        np.ndarray: Shape ``(dim, dim, dim)``; entry ``i`` is ``π(eᵢ)``.

    """
    gram = a.trace_form
    factor = sla.cholesky((gram + gram.conj().T) / 2, lower=False)
    factor_inv = sla.inv(factor)
    return np.einsum("ab,ibc,cd->iad", factor, a.left_stack, factor_inv, optimize=True)


def algebra_from_matrices(
    matrices: Any, name: str = "", tol: Optional[float] = None
) -> Tuple[StarAlgebra, np.ndarray]:
    """Return the *-algebra spanned by a linearly independent list of matrices.

    Args:
        matrices: Array of shape ``(r, k, k)``; the span must be closed under
            products and adjoints and contain the identity.
        name: Optional label.
        tol: Tolerance; defaults to the active setting.

    Returns:
        Tuple[StarAlgebra, np.ndarray]: The algebra in the given basis and the
        matrices, which form a faithful representation of it.

    Raises:
        NotClosed: If the span is not a unital *-subalgebra.
        AlgebraError: If the matrices are linearly dependent.

    """
    tol = resolve_tolerance(tol)
    mats = np.asarray(matrices, dtype=np.complex128)
    r, k = mats.shape[0], mats.shape[1]
    basis = mats.reshape(r, k * k).T
    if rank(basis, tol) < r:
        raise AlgebraError("Matrices are linearly dependent.")
    scale = max(1.0, float(np.abs(mats).max(initial=0.0)))

    def coordinates(targets: np.ndarray, what: str) -> np.ndarray:
        coeffs = solve_least_squares(basis, targets)
        residual = float(np.abs(basis @ coeffs - targets).max(initial=0.0))
        if residual > tol * scale**2 * k * 10:
            raise NotClosed(f"Span is not closed under {what} (residual {residual:.3e}).")
        return coeffs

    products = np.einsum("iab,jbc->ijac", mats, mats, optimize=True).reshape(r * r, k * k).T
    mul = coordinates(products, "products").T.reshape(r, r, r)
    adjoints = mats.conj().transpose(0, 2, 1).reshape(r, k * k).T
    star = coordinates(adjoints, "adjoints")
    unit = coordinates(np.eye(k).reshape(-1), "the identity")
    return make_algebra(mul, star, unit, name, tol), mats
