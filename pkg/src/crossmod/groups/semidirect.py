"""Semidirect products of finite groups.

Convention, used everywhere in crossmod: the pair (g, h) has index
``g·|H| + h`` and

    (g₁, h₁)(g₂, h₂) = (g₁g₂, act_{g₂}⁻¹(h₁)·h₂),

which is the multiplication of arrows in the arrow groupoid of a crossed module.
"""

from typing import Any

import numpy as np

from crossmod.errors import NotAction
from crossmod.groups.base import make_group, permutation_action
from crossmod.types import FiniteGroup


def validate_action(g: FiniteGroup, h: FiniteGroup, act: Any) -> np.ndarray:
    """Check that ``act`` is a homomorphism ``g → Aut(h)``.

    Args:
        g: The acting group.
        h: The group acted upon.
        act: One automorphism of ``h`` per element of ``g`` (arrays or GroupHoms).

    Returns:
        np.ndarray: The action as an array of shape ``(|g|, |h|)``.

    Raises:
        NotAction: With the offending element or pair of ``g``.

    """
    arr = permutation_action(g, act)
    if arr.shape != (g.order, h.order):
        raise NotAction(f"Action must have shape ({g.order}, {h.order}).")
    if not np.array_equal(arr[0], np.arange(h.order)):
        raise NotAction("The identity must act trivially.", (0,))
    for x in range(g.order):
        a = arr[x]
        if sorted(a.tolist()) != list(range(h.order)):
            raise NotAction(f"Element {x} does not act bijectively.", (x,))
        if not np.array_equal(a[h.table], h.table[a[:, None], a[None, :]]):
            raise NotAction(f"Element {x} does not act by a homomorphism.", (x,))
    composed = arr[:, arr]  # composed[x, y] = act_x ∘ act_y
    expected = arr[g.table]
    bad = np.argwhere(np.any(composed != expected, axis=2))
    if bad.size:
        x, y = (int(v) for v in bad[0])
        raise NotAction(f"act[{x}·{y}] differs from act[{x}]∘act[{y}].", (x, y))
    return arr


def semidirect_product(g: FiniteGroup, h: FiniteGroup, act: Any) -> FiniteGroup:
    """Return the semidirect product ``g ⋉ h``.

    Args:
        g: The acting group.
        h: The normal factor.
        act: The action of ``g`` on ``h`` by automorphisms.

    Returns:
        FiniteGroup: The product of order ``|g|·|h|``.

    Raises:
        NotAction: If ``act`` is not an action.

    """
    arr = validate_action(g, h, act)
    m = h.order
    idx = np.arange(g.order * m)
    a, b = idx // m, idx % m
    new_a = g.table[a[:, None], a[None, :]]
    twisted = arr[g.inverse[a][None, :], b[:, None]]
    new_b = h.table[twisted, b[None, :]]
    name = f"{g.name} ⋉ {h.name}" if g.name and h.name else ""
    return make_group(new_a * m + new_b, name)
