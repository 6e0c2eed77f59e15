"""Subgroups, kernels, images, quotients and extensions."""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from crossmod.errors import Mismatch, NotNormal, NotSubgroup
from crossmod.groups.base import make_group
from crossmod.types import FiniteGroup, GroupHom, Subgroup

SubgroupLike = Union[Subgroup, Sequence[int], np.ndarray]


def subgroup(g: FiniteGroup, elements: SubgroupLike) -> Subgroup:
    """Validate a set of elements as a subgroup of ``g``.

    Args:
        g: The ambient group.
        elements: Element indices; order and repetitions are ignored.

    Returns:
        Subgroup: The subgroup with its induced group.

    Raises:
        NotSubgroup: If the identity is missing or the set is not closed.

    """
    if isinstance(elements, Subgroup):
        if elements.parent != g:
            raise Mismatch("Subgroup belongs to a different group.")
        return elements
    el = np.unique(np.asarray(elements, dtype=np.int64).reshape(-1))
    if el.size == 0 or el[0] != 0:
        raise NotSubgroup("A subgroup must contain the identity.", (0,))
    if el[-1] >= g.order or el[0] < 0:
        raise NotSubgroup("Subgroup elements must be element indices.")
    products = g.table[np.ix_(el, el)]
    closed = np.isin(products, el)
    if not closed.all():
        i, j = (int(v) for v in np.argwhere(~closed)[0])
        a, b = int(el[i]), int(el[j])
        raise NotSubgroup(f"Product of {a} and {b} leaves the set.", (a, b))
    position = np.full(g.order, -1, dtype=np.int64)
    position[el] = np.arange(el.size)
    induced = make_group(position[products])
    return Subgroup(g, el, induced)


def generated_subgroup(g: FiniteGroup, generators: Sequence[int]) -> Subgroup:
    """Return the smallest subgroup of ``g`` containing ``generators``."""
    elements = np.union1d([0], np.asarray(generators, dtype=np.int64).reshape(-1))
    while True:
        # closing under products suffices in a finite group
        grown = np.union1d(elements, g.table[np.ix_(elements, elements)].reshape(-1))
        if grown.size == elements.size:
            return subgroup(g, elements)
        elements = grown


def is_normal(g: FiniteGroup, n: SubgroupLike) -> bool:
    """Return True if ``x·n·x⁻¹`` lies in ``n`` for every ``x`` in ``g``."""
    sub = subgroup(g, n)
    xn = g.table[:, sub.elements]
    conjugates = g.table[xn, g.inverse[:, None]]
    return bool(np.isin(conjugates, sub.elements).all())


def kernel(h: GroupHom) -> Subgroup:
    """Return the kernel of ``h`` as a subgroup of its domain.

    The kernel's induced group and inclusion are ``.group`` and ``.inclusion``.
    """
    return subgroup(h.src, np.flatnonzero(h.map == 0))


def image(h: GroupHom) -> Subgroup:
    """Return the image of ``h`` as a subgroup of its codomain."""
    return subgroup(h.dst, h.image_elements())


@dataclass
class ImageCokernel:
    """Image of a homomorphism together with its cokernel when normal.

    Attributes:
        image (Subgroup): The image subgroup.
        is_normal (bool): Whether the image is normal in the codomain.
        cokernel (Optional[FiniteGroup]): The quotient, when the image is normal.
        projection (Optional[GroupHom]): The projection onto the cokernel.

    """

    image: Subgroup
    is_normal: bool
    cokernel: Optional[FiniteGroup] = None
    projection: Optional[GroupHom] = None


def image_and_cokernel(h: GroupHom, require_cokernel: bool = False) -> ImageCokernel:
    """Return the image of ``h`` and, if it is normal, the cokernel.

    Args:
        h: A homomorphism.
        require_cokernel: Raise instead of returning no cokernel.

    Returns:
        ImageCokernel: Image, normality flag, cokernel and projection.

    Raises:
        NotNormal: If ``require_cokernel`` is set and the image is not normal.

    """
    im = image(h)
    normal = is_normal(h.dst, im)
    if not normal:
        if require_cokernel:
            raise NotNormal("Image is not normal; the cokernel is undefined.")
        return ImageCokernel(im, False)
    coker, proj = quotient(h.dst, im)
    return ImageCokernel(im, True, coker, proj)


def quotient(g: FiniteGroup, n: SubgroupLike) -> Tuple[FiniteGroup, GroupHom]:
    """Return ``g / n`` and the canonical projection.

    Cosets are numbered by their smallest element, so the coset of the
    identity is 0 and the numbering is deterministic.

    Raises:
        NotNormal: If ``n`` is not normal in ``g``.

    """
    sub = subgroup(g, n)
    if not is_normal(g, sub):
        raise NotNormal("Subgroup is not normal.", tuple(int(x) for x in sub.elements))
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if coset_of[x] < 0:
            coset_of[g.table[x, sub.elements]] = len(reps)
            reps.append(x)
    r = np.asarray(reps, dtype=np.int64)
    table = coset_of[g.table[np.ix_(r, r)]]
    quot = make_group(table, f"{g.name}/N" if g.name else "")
    return quot, GroupHom(g, quot, coset_of)


def coset_representatives(projection: GroupHom) -> np.ndarray:
    """Return the smallest preimage of each element under a surjection."""
    reps = np.full(projection.dst.order, -1, dtype=np.int64)
    for x in range(projection.src.order - 1, -1, -1):
        reps[projection.map[x]] = x
    if (reps < 0).any():
        raise Mismatch("Map is not surjective.")
    return reps


def is_extension(i: GroupHom, p: GroupHom) -> bool:
    """Return True if ``i`` is injective, ``p`` surjective and im(i) = ker(p).

    Raises:
        Mismatch: If ``i.dst`` and ``p.src`` are different groups.

    """
    if i.dst != p.src:
        raise Mismatch("The middle groups of the sequence differ.")
    if not (i.is_injective and p.is_surjective):
        return False
    return bool(
        np.array_equal(i.image_elements(), np.flatnonzero(p.map == 0))
    )
