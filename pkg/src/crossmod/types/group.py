"""Group-level data types for crossmod."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterator, Optional, Tuple

import numpy as np


def _frozen(array: Any, dtype: Any = np.int64) -> np.ndarray:
    """Return a read-only copy of ``array``."""
    result = np.array(array, dtype=dtype)
    result.setflags(write=False)
    return result


@dataclass(eq=False)
class FiniteGroup:
    """A finite group given by its Cayley table.

    Elements are the indices ``0 .. order - 1`` and the identity is always 0.
    Instances are built by :func:`crossmod.groups.make_group`, which validates
    the group axioms; the constructor only checks shapes.

    Attributes:
        table (np.ndarray): ``table[i, j]`` is the index of ``gᵢ·gⱼ``.
        inverse (np.ndarray): ``inverse[i]`` is the index of ``gᵢ⁻¹``.
        name (str): Optional label used in reports.

    """

    table: np.ndarray
    inverse: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        """Validate shapes and freeze the arrays."""
        self.table = _frozen(self.table)
        self.inverse = _frozen(self.inverse)
        if self.table.ndim != 2 or self.table.shape[0] != self.table.shape[1]:
            raise ValueError("Group table must be a square array.")
        if self.table.shape[0] == 0:
            raise ValueError("Group table must be non-empty.")
        if self.inverse.shape != (self.table.shape[0],):
            raise ValueError("Inverse array must have one entry per element.")

    @property
    def order(self) -> int:
        """Return the number of elements."""
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        """Return the index of the identity, which is always 0."""
        return 0

    def mul(self, a: int, b: int) -> int:
        """Return the index of ``a·b``."""
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        """Return the index of ``a⁻¹``."""
        return int(self.inverse[a])

    def conjugate(self, g: int, x: int) -> int:
        """Return the index of ``g·x·g⁻¹``."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def power(self, a: int, k: int) -> int:
        """Return the index of ``aᵏ`` for an integer ``k`` (negative allowed)."""
        base = a if k >= 0 else int(self.inverse[a])
        result = 0
        for _ in range(abs(k)):
            result = int(self.table[result, base])
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Return the order of every element."""
        orders = np.zeros(self.order, dtype=np.int64)
        current = np.arange(self.order)
        for k in range(1, self.order + 1):
            hit = (current == 0) & (orders == 0)
            orders[hit] = k
            if np.all(orders > 0):
                break
            current = self.table[current, np.arange(self.order)]
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        """Return True if the table is symmetric."""
        return bool(np.array_equal(self.table, self.table.T))

    def elements(self) -> range:
        """Return the element indices."""
        return range(self.order)

    def __len__(self) -> int:
        """Return the order of the group."""
        return self.order

    def __iter__(self) -> Iterator[int]:
        """Iterate over element indices."""
        return iter(range(self.order))

    def __eq__(self, other: object) -> bool:
        """Return True if both groups have the same Cayley table."""
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or bool(np.array_equal(self.table, other.table))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Return a short representation of the group."""
        label = f"name='{self.name}', " if self.name else ""
        return f"FiniteGroup({label}order={self.order}, abelian={self.is_abelian})"

    def to_dict(self) -> Dict[str, Any]:
        """Return the group as a descriptor dictionary."""
        result: Dict[str, Any] = {"table": self.table.tolist()}
        if self.name:
            result["name"] = self.name
        return result


@dataclass(eq=False)
class GroupHom:
    """A homomorphism between finite groups.

    Attributes:
        src (FiniteGroup): Domain.
        dst (FiniteGroup): Codomain.
        map (np.ndarray): ``map[i]`` is the image of element ``i``.

    """

    src: FiniteGroup
    dst: FiniteGroup
    map: np.ndarray

    def __post_init__(self) -> None:
        """Validate the shape and range of the map."""
        self.map = _frozen(self.map)
        if self.map.shape != (self.src.order,):
            raise ValueError(
                f"Map must have length {self.src.order}, got shape {self.map.shape}."
            )
        if self.map.size and (self.map.min() < 0 or self.map.max() >= self.dst.order):
            raise ValueError("Map entries must be element indices of the codomain.")

    def __call__(self, x: int) -> int:
        """Return the image of ``x``."""
        return int(self.map[x])

    @property
    def is_injective(self) -> bool:
        """Return True if the map is injective."""
        return len(np.unique(self.map)) == self.src.order

    @property
    def is_surjective(self) -> bool:
        """Return True if every element of the codomain is hit."""
        return len(np.unique(self.map)) == self.dst.order

    @property
    def is_isomorphism(self) -> bool:
        """Return True if the map is bijective."""
        return self.is_injective and self.is_surjective

    def image_elements(self) -> np.ndarray:
        """Return the sorted image as element indices of the codomain."""
        return np.unique(self.map)

    def __repr__(self) -> str:
        """Return a short representation of the homomorphism."""
        return f"GroupHom(src_order={self.src.order}, dst_order={self.dst.order}, map={self.map.tolist()})"

    def to_dict(self) -> Dict[str, Any]:
        """Return the homomorphism map as a dictionary."""
        return {"map": self.map.tolist()}


@dataclass(eq=False)
class Subgroup:
    """A subgroup given as a sorted index list of its parent.

    Attributes:
        parent (FiniteGroup): The ambient group.
        elements (np.ndarray): Sorted element indices of the parent.
        group (FiniteGroup): The induced group; element ``i`` is ``elements[i]``.

    """

    parent: FiniteGroup
    elements: np.ndarray
    group: FiniteGroup

    def __post_init__(self) -> None:
        """Freeze the element list."""
        self.elements = _frozen(self.elements)
        if self.elements.size == 0 or self.elements[0] != 0:
            raise ValueError("A subgroup must contain the identity.")

    @property
    def order(self) -> int:
        """Return the order of the subgroup."""
        return int(self.elements.size)

    def __contains__(self, x: object) -> bool:
        """Return True if ``x`` lies in the subgroup (binary search)."""
        if not isinstance(x, (int, np.integer)):
            return False
        pos = int(np.searchsorted(self.elements, x))
        return pos < self.elements.size and int(self.elements[pos]) == int(x)

    def index_of(self, x: int) -> int:
        """Return the position of parent element ``x`` in the subgroup."""
        pos = int(np.searchsorted(self.elements, x))
        if pos >= self.elements.size or int(self.elements[pos]) != int(x):
            raise KeyError(f"Element {x} is not in the subgroup.")
        return pos

    @property
    def inclusion(self) -> GroupHom:
        """Return the inclusion into the parent group."""
        return GroupHom(self.group, self.parent, self.elements)

    def __len__(self) -> int:
        """Return the order of the subgroup."""
        return self.order

    def __repr__(self) -> str:
        """Return a short representation of the subgroup."""
        return f"Subgroup(elements={self.elements.tolist()}, parent_order={self.parent.order})"


@dataclass(eq=False)
class AbelianDecomposition:
    """Invariant factor decomposition g ≅ Z/d₁ × … × Z/d_k with d₁ | d₂ | ….

    Attributes:
        factors (Tuple[int, ...]): The invariant factors in ascending order.
        generators (Tuple[int, ...]): One generator of order dᵢ per factor.
        iso (GroupHom): Isomorphism from the standard product of cyclic groups.
        coordinates (np.ndarray): ``coordinates[x]`` is the exponent vector of ``x``.

    """

    factors: Tuple[int, ...]
    generators: Tuple[int, ...]
    iso: GroupHom
    coordinates: np.ndarray = field(repr=False)

    def __repr__(self) -> str:
        """Return a short representation of the decomposition."""
        return f"AbelianDecomposition(factors={list(self.factors)}, generators={list(self.generators)})"


@dataclass(eq=False)
class CharacterGroup:
    """The Pontryagin dual of a finite Abelian group.

    Attributes:
        base (FiniteGroup): The Abelian group.
        dual (FiniteGroup): The dual group, realized as a product of cyclic groups.
        pairing (np.ndarray): ``pairing[χ, g] = ⟨χ, g⟩``, complex roots of unity.
        decomposition (Optional[AbelianDecomposition]): Decomposition of ``base``.

    """

    base: FiniteGroup
    dual: FiniteGroup
    pairing: np.ndarray
    decomposition: Optional[AbelianDecomposition] = None

    def __post_init__(self) -> None:
        """Validate that the pairing lists every character once, the trivial one first.

        Raises:
            ValueError: If a row is not a homomorphism to the circle, two rows
                coincide, row 0 is not trivial, or the rows do not multiply as
                the table of ``dual`` says.

        """
        tol = 1e-9
        self.pairing = _frozen(self.pairing, dtype=np.complex128)
        p = self.pairing
        if self.dual.order != self.base.order or p.shape != (self.dual.order, self.base.order):
            raise ValueError("Pairing must have shape (dual.order, base.order) with |dual| = |base|.")
        if np.abs(p[0] - 1.0).max() > tol:
            raise ValueError("Character 0 must be the trivial character.")
        products = p[:, :, None] * p[:, None, :]
        deviation = np.abs(products - p[:, self.base.table]).max(axis=(1, 2))
        if (deviation > tol).any():
            raise ValueError(f"Character {int(np.argmax(deviation > tol))} is not a homomorphism.")
        gap = np.abs(p[:, None, :] - p[None, :, :]).max(axis=2, initial=0.0)
        same = np.argwhere(np.triu(gap <= tol, k=1))
        if same.size:
            i, j = (int(v) for v in same[0])
            raise ValueError(f"Characters {i} and {j} coincide.")
        composed = p[self.dual.table]
        if np.abs(composed - p[:, None, :] * p[None, :, :]).max() > tol:
            raise ValueError("Characters do not multiply according to the dual table.")

    @property
    def trivial(self) -> int:
        """Return the index of the trivial character."""
        return 0

    def index_of(self, values: np.ndarray, tol: float = 1e-9) -> int:
        """Return the character whose values on ``base`` equal ``values``.

        Args:
            values: One complex value per element of ``base``.
            tol: Allowed entrywise deviation.

        Returns:
            int: Index of the character in ``dual``.

        Raises:
            KeyError: If no character matches.

        """
        deviation = np.abs(self.pairing - np.asarray(values)[None, :]).max(axis=1)
        best = int(np.argmin(deviation))
        if deviation[best] > tol:
            raise KeyError("Values do not form a character of the base group.")
        return best

    def __repr__(self) -> str:
        """Return a short representation of the character group."""
        return f"CharacterGroup(order={self.base.order})"
