"""Finite Abelian groups: invariant factors and Pontryagin duality."""

from typing import Dict, List, Tuple

import numpy as np

from crossmod.config import resolve_tolerance
from crossmod.errors import GroupError, Mismatch, NotAbelian
from crossmod.groups.base import cyclic, direct_product, make_hom
from crossmod.types import AbelianDecomposition, CharacterGroup, FiniteGroup, GroupHom


def _prime_factors(n: int) -> List[int]:
    """Return the distinct primes dividing ``n`` in ascending order."""
    primes, p = [], 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def _is_power_of(value: int, p: int) -> bool:
    while value % p == 0:
        value //= p
    return value == 1


def _p_primary_basis(g: FiniteGroup, p: int) -> List[Tuple[int, int]]:
    """Return a basis ``[(generator, order), …]`` of the Sylow p-subgroup.

    Greedy: repeatedly take the element of largest order modulo the span so
    far and correct it by an element of the span so that its order equals its
    order modulo the span. The span is then a direct summand at every step.
    """
    orders = g.element_orders
    sylow = [x for x in range(g.order) if _is_power_of(int(orders[x]), p)]
    basis: List[Tuple[int, int]] = []
    span: Dict[int, Tuple[int, ...]] = {0: ()}
    while len(span) < len(sylow):
        best, best_k = -1, 0
        for y in sylow:
            if y in span:
                continue
            z, k = y, 1
            while z not in span:
                z, k = g.mul(z, y), k + 1
            if k > best_k:
                best, best_k = y, k
        y, k = best, best_k
        coords = span[g.power(y, k)]
        correction = 0
        for (x_i, _), a_i in zip(basis, coords):
            if a_i % k:
                raise GroupError("Abelian decomposition failed to split a summand.")
            correction = g.mul(correction, g.power(x_i, -(a_i // k)))
        y = g.mul(y, correction)
        basis.append((y, k))
        extended: Dict[int, Tuple[int, ...]] = {}
        for element, c in span.items():
            z = element
            for t in range(k):
                extended[z] = c + (t,)
                z = g.mul(z, y)
        span = extended
    return basis


def _merge_primary(per_prime: Dict[int, List[int]]) -> List[int]:
    """Combine p-primary exponent lists (descending orders) into invariant factors."""
    r = max((len(v) for v in per_prime.values()), default=0)
    factors = []
    for j in range(r):
        d = 1
        for values in per_prime.values():
            if j < len(values):
                d *= values[j]
        factors.append(d)
    return factors[::-1]


def _census_factors(g: FiniteGroup) -> List[int]:
    """Return the invariant factors from element-order counts alone."""
    orders = [int(o) for o in g.element_orders]
    per_prime: Dict[int, List[int]] = {}
    for p in _prime_factors(g.order):
        p_orders = [o for o in orders if _is_power_of(o, p)]
        at_least: List[int] = []
        previous, k = 1, 1
        while previous < len(p_orders):
            count = sum(1 for o in p_orders if (p**k) % o == 0)
            ratio, e = count // previous, 0
            while ratio > 1:
                ratio, e = ratio // p, e + 1
            at_least.append(e)
            previous, k = count, k + 1
        parts = at_least[0] if at_least else 0
        exponents = [sum(1 for v in at_least if v >= i) for i in range(1, parts + 1)]
        per_prime[p] = [p**e for e in exponents]
    return _merge_primary(per_prime)


def abelian_decomposition(g: FiniteGroup) -> AbelianDecomposition:
    """Decompose a finite Abelian group into cyclic factors.

    Args:
        g: An Abelian group.

    Returns:
        AbelianDecomposition: Factors d₁ | … | d_k, generators and an explicit
        isomorphism from ``Z/d₁ × … × Z/d_k``.

    Raises:
        NotAbelian: If ``g`` is not Abelian.
        GroupError: If the structure algorithm disagrees with the order census.

    """
    if not g.is_abelian:
        raise NotAbelian("Invariant factors require an Abelian group.")
    per_prime = {p: _p_primary_basis(g, p) for p in _prime_factors(g.order)}
    r = max((len(v) for v in per_prime.values()), default=0)
    factors, generators = [], []
    for j in range(r):
        d, x = 1, 0
        for basis in per_prime.values():
            if j < len(basis):
                gen, q = basis[j]
                d, x = d * q, g.mul(x, gen)
        factors.append(d)
        generators.append(x)
    factors, generators = factors[::-1], generators[::-1]
    if factors != _census_factors(g):
        raise GroupError("Invariant factors disagree with the element-order census.")

    standard = direct_product(*[cyclic(d) for d in factors])
    k = len(factors)
    if k:
        coords = np.stack(np.unravel_index(np.arange(standard.order), factors), axis=1)
    else:
        coords = np.zeros((1, 0), dtype=np.int64)
    powers = [[g.power(x, t) for t in range(d)] for x, d in zip(generators, factors)]
    mapping = np.zeros(standard.order, dtype=np.int64)
    for t in range(standard.order):
        value = 0
        for i in range(k):
            value = g.mul(value, powers[i][coords[t, i]])
        mapping[t] = value
    iso = make_hom(standard, g, mapping)
    if not iso.is_isomorphism:
        raise GroupError("Generators do not give an isomorphism.")
    coordinates = np.zeros((g.order, k), dtype=np.int64)
    coordinates[mapping] = coords
    return AbelianDecomposition(tuple(factors), tuple(generators), iso, coordinates)


def invariant_factors(g: FiniteGroup) -> List[int]:
    """Return the invariant factors d₁ | d₂ | … of an Abelian group."""
    return list(abelian_decomposition(g).factors)


def character_group(g: FiniteGroup) -> CharacterGroup:
    """Return the character group of an Abelian group.

    Characters are indexed by exponent vectors b with
    ``⟨χ_b, ∏ xᵢ^{aᵢ}⟩ = exp(2πi Σ aᵢbᵢ/dᵢ)``; the products ``aᵢbᵢ`` are
    reduced modulo dᵢ before the exponential so values are exact roots of unity.

    Raises:
        NotAbelian: If ``g`` is not Abelian.

    """
    decomposition = abelian_decomposition(g)
    dual = decomposition.iso.src
    factors = np.asarray(decomposition.factors, dtype=np.int64)
    if factors.size:
        dual_coords = np.stack(np.unravel_index(np.arange(dual.order), tuple(factors)), axis=1)
        products = dual_coords[:, None, :] * decomposition.coordinates[None, :, :]
        phase = ((products % factors) / factors).sum(axis=2)
    else:
        phase = np.zeros((1, 1))
    pairing = np.exp(2j * np.pi * phase)
    return CharacterGroup(g, dual, pairing, decomposition)


def dual_hom(h: GroupHom, cg_src: CharacterGroup, cg_dst: CharacterGroup) -> GroupHom:
    """Return the transpose ``ĥ: dual(dst) → dual(src)``, ``⟨ĥ(χ), x⟩ = ⟨χ, h(x)⟩``.

    Args:
        h: A homomorphism between Abelian groups.
        cg_src: Character group of ``h.src``.
        cg_dst: Character group of ``h.dst``.

    Returns:
        GroupHom: The validated dual homomorphism.

    Raises:
        Mismatch: If the character groups do not belong to ``h``.

    """
    if cg_src.base != h.src or cg_dst.base != h.dst:
        raise Mismatch("Character groups do not match the homomorphism.")
    tol = resolve_tolerance()
    mapping = [
        cg_src.index_of(cg_dst.pairing[chi, h.map], tol) for chi in range(cg_dst.dual.order)
    ]
    return make_hom(cg_dst.dual, cg_src.dual, mapping)


def bidual_map(cg: CharacterGroup) -> Tuple[GroupHom, CharacterGroup]:
    """Return the evaluation isomorphism ``base → dual(dual)``.

    Returns:
        Tuple[GroupHom, CharacterGroup]: The isomorphism ``x ↦ (χ ↦ ⟨χ, x⟩)``
        and the character group of ``cg.dual`` it lands in.

    """
    second = character_group(cg.dual)
    tol = resolve_tolerance()
    mapping = [second.index_of(cg.pairing[:, x], tol) for x in range(cg.base.order)]
    return make_hom(cg.base, second.dual, mapping), second
