"""Construction and validation of finite groups and their homomorphisms."""

import itertools
from typing import Any, Sequence

import numpy as np

from crossmod.errors import (
    GroupError,
    Mismatch,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotHomomorphism,
)
from crossmod.types import FiniteGroup, GroupHom


def make_group(table: Any, name: str = "") -> FiniteGroup:
    """Validate a Cayley table and return the group it defines.

    The identity is moved to index 0 if necessary, by swapping it with the
    element that currently sits there.

    Args:
        table: Square array with ``table[i][j]`` the index of ``gᵢ·gⱼ``.
        name: Optional label.

    Returns:
        FiniteGroup: The validated group.

    Raises:
        GroupError: If the table is not a square array of indices.
        NotAssociative: With the first offending triple.
        NoIdentity: If no two-sided identity exists.
        NoInverse: With the first element lacking an inverse.

    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise GroupError("Group table must be a non-empty square array.")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.mod(arr, 1) == 0):
            raise GroupError("Group table entries must be integers.")
    arr = arr.astype(np.int64)
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise GroupError(f"Group table entries must lie in range(0, {n}).")

    # (ij)k against i(jk) for every triple at once
    left = arr[arr, :]
    right = arr[:, arr]
    bad = np.argwhere(left != right)
    if bad.size:
        i, j, k = (int(v) for v in bad[0])
        raise NotAssociative(
            f"Table is not associative at triple ({i}, {j}, {k}).", (i, j, k)
        )

    idx = np.arange(n)
    is_left_identity = np.all(arr == idx[None, :], axis=1)
    is_right_identity = np.all(arr == idx[:, None], axis=0)
    candidates = np.flatnonzero(is_left_identity & is_right_identity)
    if candidates.size == 0:
        raise NoIdentity("Table has no two-sided identity.")
    e = int(candidates[0])

    perm = idx.copy()
    perm[0], perm[e] = e, 0
    if e != 0:
        arr = perm[arr[np.ix_(perm, perm)]]

    is_unit = arr == 0
    both = is_unit & is_unit.T
    missing = np.flatnonzero(~both.any(axis=1))
    if missing.size:
        bad_element = int(perm[missing[0]])
        raise NoInverse(f"Element {bad_element} has no inverse.", (bad_element,))
    inverse = np.argmax(both, axis=1)
    return FiniteGroup(arr, inverse, name)


def trivial_group() -> FiniteGroup:
    """Return the one-element group."""
    return FiniteGroup(np.zeros((1, 1), dtype=np.int64), np.zeros(1, dtype=np.int64), "1")


def cyclic(n: int) -> FiniteGroup:
    """Return the cyclic group Z/n under addition."""
    if n < 1:
        raise ValueError("Cyclic group order must be positive.")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, (-idx) % n, f"Z/{n}")


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Return the direct product, with pair (a, b) at index ``a·|B| + b``.

    Args:
        *groups: Factors, folded from the left.

    Returns:
        FiniteGroup: The product group (trivial for no factors).

    """
    if not groups:
        return trivial_group()
    if len(groups) == 1:
        return groups[0]
    result = groups[0]
    for other in groups[1:]:
        m = other.order
        table = (
            result.table[:, None, :, None] * m + other.table[None, :, None, :]
        ).reshape(result.order * m, result.order * m)
        inverse = (result.inverse[:, None] * m + other.inverse[None, :]).reshape(-1)
        result = FiniteGroup(table, inverse)
    result.name = " × ".join(g.name or f"G{g.order}" for g in groups)
    return result


def symmetric(n: int) -> FiniteGroup:
    """Return the symmetric group on ``n`` letters.

    Permutations are listed lexicographically, so the identity comes first;
    ``table[i, j]`` is the composite ``pᵢ∘pⱼ``.
    """
    perms = sorted(itertools.permutations(range(n)))
    position = {p: i for i, p in enumerate(perms)}
    table = np.array(
        [[position[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms],
        dtype=np.int64,
    )
    return make_group(table, f"S{n}")


def make_hom(src: FiniteGroup, dst: FiniteGroup, mapping: Any) -> GroupHom:
    """Validate a map between groups and return it as a homomorphism.

    Args:
        src: Domain.
        dst: Codomain.
        mapping: Image index of every element of ``src``.

    Returns:
        GroupHom: The validated homomorphism.

    Raises:
        GroupError: If the map has the wrong length or range.
        NotHomomorphism: With the first offending pair.

    """
    m = np.asarray(mapping, dtype=np.int64).reshape(-1)
    if m.shape != (src.order,):
        raise GroupError(f"Map must have length {src.order}, got {m.shape[0]}.")
    if m.min() < 0 or m.max() >= dst.order:
        raise GroupError(f"Map entries must lie in range(0, {dst.order}).")
    lhs = m[src.table]
    rhs = dst.table[m[:, None], m[None, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NotHomomorphism(
            f"Map does not respect the product of elements {i} and {j}.", (i, j)
        )
    return GroupHom(src, dst, m)


def identity_hom(g: FiniteGroup) -> GroupHom:
    """Return the identity homomorphism of ``g``."""
    return GroupHom(g, g, np.arange(g.order))


def trivial_hom(src: FiniteGroup, dst: FiniteGroup) -> GroupHom:
    """Return the homomorphism sending everything to the identity."""
    return GroupHom(src, dst, np.zeros(src.order, dtype=np.int64))


def compose(second: GroupHom, first: GroupHom) -> GroupHom:
    """Return ``second ∘ first``.

    Raises:
        Mismatch: If ``first.dst`` and ``second.src`` differ.

    """
    if first.dst != second.src:
        raise Mismatch("Cannot compose: codomain and domain differ.")
    return GroupHom(first.src, second.dst, second.map[first.map])


def permutation_action(g: FiniteGroup, automorphisms: Sequence[Any]) -> np.ndarray:
    """Stack a list of automorphisms (arrays or GroupHoms) into an array."""
    rows = [a.map if isinstance(a, GroupHom) else np.asarray(a) for a in automorphisms]
    if len(rows) != g.order:
        raise GroupError(f"Expected {g.order} automorphisms, got {len(rows)}.")
    return np.array(rows, dtype=np.int64).reshape(g.order, -1)
