"""The equivalence criterion and the canonical enlarge/quotient equivalences."""

from typing import Any, Optional, Tuple

import numpy as np

from crossmod.errors import (
    CrossedModuleError,
    NotAbelianCM,
    NotInjectiveOnN,
    NotInvariant,
    NotSurjective,
)
from crossmod.groups import (
    coset_representatives,
    direct_product,
    generated_subgroup,
    is_extension,
    make_hom,
    quotient,
    subgroup,
)
from crossmod.modules.base import make_crossed_module
from crossmod.modules.homs import make_cm_hom
from crossmod.types import CrossedModule, CrossedModuleHom, EquivalenceCertificate, Subgroup


def is_equivalence(f: CrossedModuleHom) -> EquivalenceCertificate:
    """Decide whether a homomorphism of crossed modules is an equivalence.

    Two conditions are checked exhaustively: h ↦ (∂₁(h), ψ(h)) is a bijection
    from H₁ onto the fibred product {(g₁, h₂) : φ(g₁) = ∂₂(h₂)}, and
    (g₁, h₂) ↦ φ(g₁)·∂₂(h₂) is onto G₂.

    Returns:
        EquivalenceCertificate: Truthy iff f is an equivalence; failures are recorded.

    """
    src, dst = f.src, f.dst
    m = dst.H.order
    pairs = src.boundary.map * m + f.psi.map
    unique_pairs, counts = np.unique(pairs, return_counts=True)
    fibered_size = int(
        sum(np.count_nonzero(dst.boundary.map == f.phi.map[g]) for g in range(src.G.order))
    )
    failures, witnesses = [], {}
    injective = bool(np.all(counts == 1))
    if not injective:
        collided = int(unique_pairs[np.argmax(counts > 1)])
        witnesses["fibered"] = [int(h) for h in np.flatnonzero(pairs == collided)]
        failures.append("h ↦ (∂₁h, ψh) is not injective.")
    onto = unique_pairs.size == fibered_size
    if injective and not onto:
        failures.append(
            f"h ↦ (∂₁h, ψh) hits {unique_pairs.size} of {fibered_size} fibred pairs."
        )
    products = dst.G.table[f.phi.map[:, None], dst.boundary.map[None, :]]
    missing = np.setdiff1d(np.arange(dst.G.order), products)
    surjective = missing.size == 0
    if not surjective:
        witnesses["surjective"] = [int(x) for x in missing]
        failures.append(f"φ(G₁)·∂₂(H₂) misses {missing.size} elements of G₂.")
    return EquivalenceCertificate(injective and onto, surjective, failures, witnesses)


def _certify(f: CrossedModuleHom, what: str) -> None:
    certificate = is_equivalence(f)
    if not certificate:
        raise CrossedModuleError(f"{what} is not an equivalence: {certificate.failures}")


def enlarge_equivalence(C: CrossedModule, G1: Any) -> Tuple[CrossedModule, CrossedModuleHom]:
    """Restrict C to a subgroup G₁ of G with G₁·∂(H) = G.

    Args:
        C: A crossed module.
        G1: A subgroup of ``C.G`` (Subgroup or element list).

    Returns:
        Tuple[CrossedModule, CrossedModuleHom]: C₁ = (G₁, ∂⁻¹(G₁)) and the
        inclusion C₁ → C, which is certified as an equivalence.

    Raises:
        NotSurjective: If G₁·∂(H) ≠ G, with the missing elements.

    """
    sub_g = subgroup(C.G, G1)
    products = C.G.table[sub_g.elements[:, None], C.boundary.map[None, :]]
    missing = np.setdiff1d(np.arange(C.G.order), products)
    if missing.size:
        raise NotSurjective(
            "G₁·∂(H) does not cover G.", tuple(int(x) for x in missing)
        )
    sub_h = subgroup(C.H, np.flatnonzero(np.isin(C.boundary.map, sub_g.elements)))
    pos_g = np.full(C.G.order, -1, dtype=np.int64)
    pos_g[sub_g.elements] = np.arange(sub_g.order)
    pos_h = np.full(C.H.order, -1, dtype=np.int64)
    pos_h[sub_h.elements] = np.arange(sub_h.order)
    boundary = pos_g[C.boundary.map[sub_h.elements]]
    conj = pos_h[C.conj[np.ix_(sub_g.elements, sub_h.elements)]]
    name = f"{C.name}|G₁" if C.name else ""
    C1 = make_crossed_module(sub_g.group, sub_h.group, boundary, conj, name)
    inclusion = make_cm_hom(C1, C, sub_g.elements, sub_h.elements)
    _certify(inclusion, "Enlargement")
    return C1, inclusion


def quotient_by(
    C: CrossedModule, N: Subgroup, name: str = ""
) -> Tuple[CrossedModule, CrossedModuleHom]:
    """Return (G/∂(N), H/N) and the projection, for a c-invariant subgroup N.

    No injectivity of ∂ on N is required here; the projection is an
    equivalence only when ∂ is injective on N.

    Raises:
        NotInvariant: With a pair (g, n) where c_g(n) leaves N.

    """
    moved = C.conj[:, N.elements]
    outside = ~np.isin(moved, N.elements)
    if outside.any():
        g, i = (int(v) for v in np.argwhere(outside)[0])
        raise NotInvariant(f"c_{g} moves {int(N.elements[i])} out of N.", (g, int(N.elements[i])))
    image_n = subgroup(C.G, np.unique(C.boundary.map[N.elements]))
    G2, p_g = quotient(C.G, image_n)
    H2, p_h = quotient(C.H, N)
    reps_h = coset_representatives(p_h)
    reps_g = coset_representatives(p_g)
    boundary = p_g.map[C.boundary.map[reps_h]]
    conj = p_h.map[C.conj[np.ix_(reps_g, reps_h)]]
    C2 = make_crossed_module(G2, H2, boundary, conj, name)
    return C2, make_cm_hom(C, C2, p_g, p_h)


def quotient_equivalence(C: CrossedModule, N: Any) -> Tuple[CrossedModule, CrossedModuleHom]:
    """Divide C by a c-invariant subgroup N of H on which ∂ is injective.

    Args:
        C: A crossed module.
        N: A subgroup of ``C.H`` (Subgroup or element list).

    Returns:
        Tuple[CrossedModule, CrossedModuleHom]: C₂ = (G/∂(N), H/N) and the
        projection C → C₂, which is certified as an equivalence.

    Raises:
        NotInvariant: If N is not invariant under the action.
        NotInjectiveOnN: If ∂ identifies two elements of N.

    """
    sub = subgroup(C.H, N)
    images = C.boundary.map[sub.elements]
    values, first = np.unique(images, return_index=True)
    if values.size != sub.order:
        duplicate = np.setdiff1d(np.arange(sub.order), first)[0]
        raise NotInjectiveOnN(
            "∂ is not injective on N.", (int(sub.elements[duplicate]),)
        )
    C2, projection = quotient_by(C, sub, f"{C.name}/N" if C.name else "")
    _certify(projection, "Quotient")
    return C2, projection


def smallest_quotient_subgroup(C: CrossedModule) -> Optional[Subgroup]:
    """Return the smallest non-trivial N ⊆ H that ``quotient_equivalence`` accepts.

    Candidates are generated by the c-orbit of a single element of H, so
    they are c-invariant; ties go to the smallest generating element.

    Returns:
        Optional[Subgroup]: N, or None when ∂ is injective on no such subgroup.

    """
    best: Optional[Subgroup] = None
    for h in range(1, C.H.order):
        N = generated_subgroup(C.H, np.unique(C.conj[:, h]))
        if np.unique(C.boundary.map[N.elements]).size != N.order:
            continue
        if best is None or N.order < best.order:
            best = N
    return best


def smallest_enlarging_subgroup(C: CrossedModule) -> Optional[Subgroup]:
    """Return the smallest proper subgroup G₁ of G with G₁·∂(H) = G.

    The trivial subgroup, the cyclic subgroups and the subgroups generated
    by ∂(H) and one more element are searched, in that order per element.

    Returns:
        Optional[Subgroup]: G₁, or None when only G itself covers G/∂(H).

    """
    image_h = np.unique(C.boundary.map)
    candidates = [generated_subgroup(C.G, [0])]
    for g in range(1, C.G.order):
        candidates.append(generated_subgroup(C.G, [g]))
        candidates.append(generated_subgroup(C.G, np.append(image_h, g)))
    best: Optional[Subgroup] = None
    for G1 in candidates:
        if G1.order == C.G.order:
            continue
        products = C.G.table[G1.elements[:, None], image_h[None, :]]
        if np.unique(products).size != C.G.order:
            continue
        if best is None or G1.order < best.order:
            best = G1
    return best


def is_abelian_equivalence(f: CrossedModuleHom) -> bool:
    """Decide equivalence of Abelian crossed modules by an exact sequence.

    The sequence H₁ → G₁ × H₂ → G₂ with h ↦ (∂₁(h)⁻¹, ψ(h)) and
    (g₁, h₂) ↦ φ(g₁)·∂₂(h₂) must be an extension.

    Raises:
        NotAbelianCM: If either crossed module is not Abelian.

    """
    if not (f.src.is_abelian and f.dst.is_abelian):
        raise NotAbelianCM("Both crossed modules must be Abelian.")
    src, dst = f.src, f.dst
    middle = direct_product(src.G, dst.H)
    m = dst.H.order
    iota = make_hom(src.H, middle, src.G.inverse[src.boundary.map] * m + f.psi.map)
    idx = np.arange(middle.order)
    pi = make_hom(middle, dst.G, dst.G.table[f.phi.map[idx // m], dst.boundary.map[idx % m]])
    return is_extension(iota, pi)
