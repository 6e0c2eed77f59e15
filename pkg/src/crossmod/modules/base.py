"""Construction and invariants of finite crossed modules."""

from typing import Any, Optional, Tuple

import numpy as np

from crossmod.errors import CrossedModuleError, Peiffer1Violation, Peiffer2Violation
from crossmod.groups import (
    coset_representatives,
    image_and_cokernel,
    kernel,
    make_hom,
    subgroup,
    trivial_group,
    trivial_hom,
    validate_action,
)
from crossmod.types import CrossedModule, FiniteGroup, GroupHom, Pi2Module


def _as_hom(src: FiniteGroup, dst: FiniteGroup, value: Any) -> GroupHom:
    if isinstance(value, GroupHom):
        return make_hom(src, dst, value.map)
    return make_hom(src, dst, value)


def make_crossed_module(
    G: FiniteGroup,
    H: FiniteGroup,
    boundary: Any,
    conj: Optional[Any] = None,
    name: str = "",
) -> CrossedModule:
    """Validate the data of a crossed module.

    Args:
        G: The base group.
        H: The group of arrows.
        boundary: ∂: H → G, as a GroupHom or an index array.
        conj: One automorphism of H per element of G; None or ``"trivial"``
            for the trivial action.
        name: Optional label.

    Returns:
        CrossedModule: The validated crossed module.

    Raises:
        NotHomomorphism: If ∂ is not a homomorphism.
        NotAction: If ``conj`` is not an action by automorphisms.
        Peiffer1Violation: With a pair (g, h) where ∂(c_g(h)) ≠ g∂(h)g⁻¹.
        Peiffer2Violation: With a pair (h, k) where c_{∂(h)}(k) ≠ hkh⁻¹.

    """
    d = _as_hom(H, G, boundary)
    if conj is None or (isinstance(conj, str) and conj == "trivial"):
        c = np.tile(np.arange(H.order), (G.order, 1))
    else:
        c = validate_action(G, H, conj)

    lhs = d.map[c]
    rhs = G.table[G.table[:, d.map], G.inverse[:, None]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        g, h = (int(v) for v in bad[0])
        raise Peiffer1Violation(f"∂(c_{g}({h})) differs from {g}·∂({h})·{g}⁻¹.", (g, h))

    lhs = c[d.map]
    rhs = H.table[H.table, H.inverse[:, None]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        h, k = (int(v) for v in bad[0])
        raise Peiffer2Violation(f"c_∂({h})({k}) differs from {h}·{k}·{h}⁻¹.", (h, k))
    return CrossedModule(G, H, d, c, name)


def group_crossed_module(G: FiniteGroup, name: str = "") -> CrossedModule:
    """Return G viewed as the crossed module (G, 1)."""
    one = trivial_group()
    return CrossedModule(G, one, trivial_hom(one, G), np.zeros((G.order, 1)), name or G.name)


def kernel_crossed_module(H: FiniteGroup, name: str = "") -> CrossedModule:
    """Return (1, H) for an Abelian group H.

    Raises:
        Peiffer2Violation: If H is not Abelian.

    """
    return make_crossed_module(trivial_group(), H, np.zeros(H.order), None, name)


def identity_crossed_module(G: FiniteGroup, name: str = "") -> CrossedModule:
    """Return (G, G, id, conjugation)."""
    conj = G.table[G.table, G.inverse[:, None]]
    return make_crossed_module(G, G, np.arange(G.order), conj, name)


def normal_subgroup_crossed_module(G: FiniteGroup, N: Any, name: str = "") -> CrossedModule:
    """Return (G, N, inclusion, conjugation) for a normal subgroup N.

    Raises:
        NotSubgroup: If N is not a subgroup.
        Peiffer1Violation: If N is not normal.

    """
    sub = subgroup(G, N)
    position = np.full(G.order, -1, dtype=np.int64)
    position[sub.elements] = np.arange(sub.order)
    conjugates = G.table[G.table[:, sub.elements], G.inverse[:, None]]
    if (position[conjugates] < 0).any():
        g, n = (int(v) for v in np.argwhere(position[conjugates] < 0)[0])
        raise Peiffer1Violation("Subgroup is not normal.", (g, int(sub.elements[n])))
    return make_crossed_module(G, sub.group, sub.elements, position[conjugates], name)


def trivial_crossed_module() -> CrossedModule:
    """Return (1, 1)."""
    return group_crossed_module(trivial_group(), "trivial")


def is_thin(C: CrossedModule) -> bool:
    """Return True if ∂ is bijective."""
    return C.is_thin


def is_two_abelian(C: CrossedModule) -> bool:
    """Return True if the action c is trivial."""
    return C.is_two_abelian


def is_abelian_cm(C: CrossedModule) -> bool:
    """Return True if c is trivial and G is Abelian."""
    return C.is_abelian


def pi1(C: CrossedModule) -> Tuple[FiniteGroup, GroupHom]:
    """Return π₁ = G/∂(H) with its projection."""
    result = image_and_cokernel(C.boundary, require_cokernel=True)
    assert result.cokernel is not None and result.projection is not None
    return result.cokernel, result.projection


def pi2(C: CrossedModule) -> Pi2Module:
    """Return π₂ = ker ∂ with the induced action of π₁.

    Raises:
        CrossedModuleError: If ker ∂ is not Abelian or the induced action
            depends on coset representatives, either of which means C is invalid.

    """
    ker = kernel(C.boundary)
    if not ker.group.is_abelian:
        raise CrossedModuleError("ker ∂ is not Abelian.")
    quot, proj = pi1(C)
    reps = coset_representatives(proj)
    position = np.full(C.H.order, -1, dtype=np.int64)
    position[ker.elements] = np.arange(ker.order)
    moved = position[C.conj[:, ker.elements]]
    if (moved < 0).any():
        raise CrossedModuleError("The action does not preserve ker ∂.")
    action = moved[reps]
    if not np.array_equal(moved, action[proj.map]):
        g = int(np.flatnonzero(np.any(moved != action[proj.map], axis=1))[0])
        raise CrossedModuleError(
            f"The action on ker ∂ depends on the representative {g} of its coset.", (g,)
        )
    return Pi2Module(ker, quot, proj, action)

