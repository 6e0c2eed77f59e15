"""Crossed modules, their homomorphisms and arrow groupoids."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Tuple

import numpy as np

from crossmod.types.group import FiniteGroup, GroupHom, Subgroup, _frozen


@dataclass(eq=False)
class CrossedModule:
    """A crossed module ∂: H → G with a left action c of G on H.

    Built and validated by :func:`crossmod.modules.make_crossed_module`.

    Attributes:
        G (FiniteGroup): The base group.
        H (FiniteGroup): The group of arrows.
        boundary (GroupHom): The boundary map ∂: H → G.
        conj (np.ndarray): ``conj[g, h]`` is ``c_g(h)``.
        name (str): Optional label.

    """

    G: FiniteGroup
    H: FiniteGroup
    boundary: GroupHom
    conj: np.ndarray
    name: str = ""

    def __post_init__(self) -> None:
        """Validate shapes and freeze the action table."""
        self.conj = _frozen(self.conj)
        if self.conj.shape != (self.G.order, self.H.order):
            raise ValueError(f"Action must have shape ({self.G.order}, {self.H.order}).")
        if self.boundary.src != self.H or self.boundary.dst != self.G:
            raise ValueError("Boundary must map H to G.")

    def act(self, g: int, h: int) -> int:
        """Return ``c_g(h)``."""
        return int(self.conj[g, h])

    def d(self, h: int) -> int:
        """Return ``∂(h)``."""
        return int(self.boundary.map[h])

    @cached_property
    def is_two_abelian(self) -> bool:
        """Return True if the action c is trivial."""
        return bool(np.all(self.conj == np.arange(self.H.order)[None, :]))

    @cached_property
    def is_abelian(self) -> bool:
        """Return True if c is trivial and G is Abelian."""
        return self.is_two_abelian and self.G.is_abelian

    @cached_property
    def is_thin(self) -> bool:
        """Return True if ∂ is bijective."""
        return self.boundary.is_isomorphism

    def __repr__(self) -> str:
        """Return a short representation of the crossed module."""
        label = f"name='{self.name}', " if self.name else ""
        return f"CrossedModule({label}|G|={self.G.order}, |H|={self.H.order})"

    def to_dict(self) -> Dict[str, Any]:
        """Return the crossed module as a descriptor dictionary."""
        return {
            "G": self.G.to_dict(),
            "H": self.H.to_dict(),
            "boundary": self.boundary.map.tolist(),
            "conj": "trivial" if self.is_two_abelian else self.conj.tolist(),
        }


@dataclass(eq=False)
class CrossedModuleHom:
    """A homomorphism of crossed modules (φ on G, ψ on H).

    Attributes:
        src (CrossedModule): Domain.
        dst (CrossedModule): Codomain.
        phi (GroupHom): Map of base groups.
        psi (GroupHom): Map of arrow groups.

    """

    src: CrossedModule
    dst: CrossedModule
    phi: GroupHom
    psi: GroupHom

    def __repr__(self) -> str:
        """Return a short representation of the homomorphism."""
        return f"CrossedModuleHom(phi={self.phi.map.tolist()}, psi={self.psi.map.tolist()})"

    def to_dict(self) -> Dict[str, Any]:
        """Return the two maps as a dictionary."""
        return {"phi": self.phi.map.tolist(), "psi": self.psi.map.tolist()}


@dataclass
class EquivalenceCertificate:
    """Outcome of the equivalence criterion for a crossed-module homomorphism.

    Attributes:
        fibered_bijective (bool): h ↦ (∂₁h, ψh) is a bijection onto G₁ ×_{G₂} H₂.
        surjective (bool): (g₁, h₂) ↦ φ(g₁)∂₂(h₂) hits every element of G₂.
        failures (List[str]): Human-readable reasons for each failed condition.
        witnesses (Dict[str, List[int]]): Offending elements per condition.

    """

    fibered_bijective: bool
    surjective: bool
    failures: List[str] = field(default_factory=list)
    witnesses: Dict[str, List[int]] = field(default_factory=dict)

    @property
    def is_equivalence(self) -> bool:
        """Return True if both conditions hold."""
        return self.fibered_bijective and self.surjective

    def __bool__(self) -> bool:
        """Return the verdict."""
        return self.is_equivalence

    def to_dict(self) -> Dict[str, Any]:
        """Return the certificate as a dictionary."""
        return {
            "is_equivalence": self.is_equivalence,
            "fibered_bijective": self.fibered_bijective,
            "surjective": self.surjective,
            "failures": list(self.failures),
        }


@dataclass(eq=False)
class Pi2Module:
    """π₂ = ker ∂ together with the induced action of π₁ = coker ∂.

    Attributes:
        kernel (Subgroup): ker ∂ as a subgroup of H.
        pi1 (FiniteGroup): The cokernel G/∂(H).
        projection (GroupHom): G → π₁.
        action (np.ndarray): ``action[x, k]`` is the induced action of
            ``x ∈ π₁`` on the element ``k`` of ``kernel.group``.

    """

    kernel: Subgroup
    pi1: FiniteGroup
    projection: GroupHom
    action: np.ndarray

    def __post_init__(self) -> None:
        """Freeze the action table."""
        self.action = _frozen(self.action)

    @property
    def group(self) -> FiniteGroup:
        """Return π₂ as a group."""
        return self.kernel.group

    @property
    def is_trivial_action(self) -> bool:
        """Return True if π₁ acts trivially."""
        return bool(np.all(self.action == np.arange(self.group.order)[None, :]))


@dataclass(eq=False)
class FiniteGroupoid:
    """A finite groupoid with arrows numbered ``0 .. n_arrows - 1``.

    Attributes:
        n_objects (int): Number of objects.
        source (np.ndarray): Source object of every arrow.
        target (np.ndarray): Target object of every arrow.
        label (np.ndarray): Label of every arrow (an element of H for arrow groupoids).
        compose (np.ndarray): ``compose[a, b]`` is the arrow "a then b", or -1
            when ``target[a] != source[b]``.
        identities (np.ndarray): Identity arrow of every object.
        inverse (np.ndarray): Inverse of every arrow.

    """

    n_objects: int
    source: np.ndarray
    target: np.ndarray
    label: np.ndarray
    compose: np.ndarray
    identities: np.ndarray
    inverse: np.ndarray

    def __post_init__(self) -> None:
        """Freeze the arrays."""
        for name in ("source", "target", "label", "compose", "identities", "inverse"):
            setattr(self, name, _frozen(getattr(self, name)))

    @property
    def n_arrows(self) -> int:
        """Return the number of arrows."""
        return int(self.source.shape[0])

    def arrows_between(self, x: int, y: int) -> np.ndarray:
        """Return the arrows from ``x`` to ``y``."""
        return np.flatnonzero((self.source == x) & (self.target == y))

    @cached_property
    def orbits(self) -> List[Tuple[int, ...]]:
        """Return the connected components, each sorted, ordered by smallest object."""
        seen = np.full(self.n_objects, -1, dtype=np.int64)
        result: List[Tuple[int, ...]] = []
        for x in range(self.n_objects):
            if seen[x] >= 0:
                continue
            members = np.unique(self.target[self.source == x])
            seen[members] = len(result)
            result.append(tuple(int(m) for m in members))
        return result

    def isotropy(self, x: int) -> np.ndarray:
        """Return the arrows from ``x`` to itself."""
        return self.arrows_between(x, x)

    def __repr__(self) -> str:
        """Return a short representation of the groupoid."""
        return f"FiniteGroupoid(objects={self.n_objects}, arrows={self.n_arrows})"


@dataclass(eq=False)
class MultiplicationFunctor:
    """The multiplication functor of a crossed module on its arrow groupoid.

    Attributes:
        groupoid (FiniteGroupoid): The arrow groupoid.
        object_map (np.ndarray): ``object_map[g₁, g₂] = g₁g₂``.
        arrow_map (np.ndarray): ``arrow_map[a, b]`` is the product of arrows ``a`` and ``b``.

    """

    groupoid: FiniteGroupoid
    object_map: np.ndarray
    arrow_map: np.ndarray

    def __post_init__(self) -> None:
        """Freeze the arrays."""
        self.object_map = _frozen(self.object_map)
        self.arrow_map = _frozen(self.arrow_map)
