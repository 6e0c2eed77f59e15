"""Arrow groupoids and the multiplication functor.

The arrow groupoid of C has objects G and arrows (g, h) from g to g·∂(h),
numbered ``g·|H| + h``. Arrows compose as (g, h) then (g∂(h), k) = (g, hk).
"""

import numpy as np

from crossmod.errors import FunctorialityViolation
from crossmod.groups import make_group
from crossmod.types import CrossedModule, FiniteGroup, FiniteGroupoid, MultiplicationFunctor


def arrow_groupoid(C: CrossedModule) -> FiniteGroupoid:
    """Return the transformation groupoid of the right action g·h = g∂(h)."""
    m = C.H.order
    idx = np.arange(C.G.order * m)
    g, h = idx // m, idx % m
    source = g
    target = C.G.table[g, C.boundary.map[h]]
    composable = target[:, None] == source[None, :]
    composite = g[:, None] * m + C.H.table[h[:, None], h[None, :]]
    compose = np.where(composable, composite, -1)
    identities = np.arange(C.G.order) * m
    inverse = target * m + C.H.inverse[h]
    return FiniteGroupoid(C.G.order, source, target, h, compose, identities, inverse)


def multiplication_functor(C: CrossedModule) -> MultiplicationFunctor:
    """Return the multiplication functor on pairs of arrows, verified exhaustively.

    On objects it is the product of G; on arrows
    ``(g₁, h₁)·(g₂, h₂) = (g₁g₂, c_{g₂}⁻¹(h₁)·h₂)``.

    Raises:
        FunctorialityViolation: If sources, targets, identities or composites
            are not preserved.

    """
    groupoid = arrow_groupoid(C)
    m = C.H.order
    g, h = groupoid.source, groupoid.label
    g1, g2 = g[:, None], g[None, :]
    twisted = C.conj[C.G.inverse[g2], h[:, None]]
    arrow_map = C.G.table[g1, g2] * m + C.H.table[twisted, h[None, :]]

    if not np.array_equal(groupoid.source[arrow_map], C.G.table[g1, g2]):
        raise FunctorialityViolation("Multiplication does not preserve sources.")
    targets = C.G.table[groupoid.target[:, None], groupoid.target[None, :]]
    if not np.array_equal(groupoid.target[arrow_map], targets):
        a, b = (int(v) for v in np.argwhere(groupoid.target[arrow_map] != targets)[0])
        raise FunctorialityViolation("Multiplication does not preserve targets.", (a, b))
    ids = groupoid.identities
    if not np.array_equal(arrow_map[ids[:, None], ids[None, :]], ids[C.G.table]):
        raise FunctorialityViolation("Multiplication does not preserve identities.")

    pairs = np.argwhere(groupoid.compose >= 0)
    first, second = pairs[:, 0], pairs[:, 1]
    composites = groupoid.compose[first, second]
    lhs = arrow_map[composites[:, None], composites[None, :]]
    rhs = groupoid.compose[
        arrow_map[first[:, None], first[None, :]], arrow_map[second[:, None], second[None, :]]
    ]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        p, q = (int(v) for v in bad[0])
        raise FunctorialityViolation(
            "Multiplication does not preserve composition.",
            (int(first[p]), int(second[p]), int(first[q]), int(second[q])),
        )
    return MultiplicationFunctor(groupoid, C.G.table, arrow_map)


def orbit_group(functor: MultiplicationFunctor) -> FiniteGroup:
    """Return the group structure the functor induces on the set of orbits."""
    groupoid = functor.groupoid
    orbit_of = np.empty(groupoid.n_objects, dtype=np.int64)
    for i, orbit in enumerate(groupoid.orbits):
        orbit_of[list(orbit)] = i
    reps = np.array([orbit[0] for orbit in groupoid.orbits], dtype=np.int64)
    table = orbit_of[functor.object_map[reps[:, None], reps[None, :]]]
    products = orbit_of[functor.object_map]
    if not np.array_equal(products, table[orbit_of[:, None], orbit_of[None, :]]):
        raise FunctorialityViolation("Multiplication does not descend to orbits.")
    return make_group(table)
