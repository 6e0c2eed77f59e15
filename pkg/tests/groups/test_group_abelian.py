"""Test invariant factors and Pontryagin duality."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossmod.errors import NotAbelian
from crossmod.groups import (
    abelian_decomposition,
    bidual_map,
    character_group,
    cyclic,
    direct_product,
    dual_hom,
    identity_hom,
    invariant_factors,
    make_hom,
    symmetric,
    trivial_group,
)
from crossmod.types import CharacterGroup, FiniteGroup

ABELIAN = [
    trivial_group(),
    cyclic(2),
    cyclic(4),
    cyclic(6),
    direct_product(cyclic(2), cyclic(2)),
    direct_product(cyclic(2), cyclic(4)),
    direct_product(cyclic(2), cyclic(6)),
]


@pytest.fixture
def z4() -> FiniteGroup:
    """Return the cyclic group of order 4."""
    return cyclic(4)


def test_invariant_factor_examples() -> None:
    """Test Z/4, Z/2 × Z/2 and Z/2 × Z/6."""
    assert invariant_factors(cyclic(4)) == [4]
    assert invariant_factors(direct_product(cyclic(2), cyclic(2))) == [2, 2]
    assert invariant_factors(direct_product(cyclic(2), cyclic(6))) == [2, 6]
    assert invariant_factors(direct_product(cyclic(2), cyclic(3))) == [6]
    assert invariant_factors(trivial_group()) == []


def test_invariant_factors_need_abelian() -> None:
    """Test that non-Abelian groups are rejected."""
    with pytest.raises(NotAbelian):
        invariant_factors(symmetric(3))
    with pytest.raises(NotAbelian):
        character_group(symmetric(3))


@given(st.sampled_from(ABELIAN))
@settings(max_examples=10, deadline=None)
def test_decomposition_is_isomorphism(g: FiniteGroup) -> None:
    """Test that the explicit map from the product of cyclic groups is an isomorphism."""
    decomposition = abelian_decomposition(g)
    assert decomposition.iso.is_isomorphism
    assert decomposition.iso.dst == g
    assert int(np.prod(decomposition.factors)) == g.order
    for d, next_d in zip(decomposition.factors, decomposition.factors[1:]):
        assert next_d % d == 0


def test_character_group_examples(z4: FiniteGroup) -> None:
    """Test the duals of the trivial group, Z/2 and Z/4."""
    assert np.allclose(character_group(trivial_group()).pairing, [[1]])
    assert np.allclose(character_group(cyclic(2)).pairing, [[1, 1], [1, -1]])
    values = character_group(z4).pairing[:, 1]
    assert np.any(np.isclose(values, 1j))
    assert np.allclose(np.sort_complex(values), np.sort_complex([1, 1j, -1, -1j]))


def test_character_group_validates_pairing(z4: FiniteGroup) -> None:
    """Test that malformed pairings are rejected when the character group is built."""
    cg = character_group(z4)
    p = np.array(cg.pairing)
    with pytest.raises(ValueError, match="trivial"):
        CharacterGroup(z4, cg.dual, p[[1, 0, 2, 3]])
    broken = p.copy()
    broken[2] = [1, -1, 1, 1]
    with pytest.raises(ValueError, match="homomorphism"):
        CharacterGroup(z4, cg.dual, broken)
    repeated = p.copy()
    repeated[3] = p[1]
    with pytest.raises(ValueError, match="coincide"):
        CharacterGroup(z4, cg.dual, repeated)
    with pytest.raises(ValueError, match="dual table"):
        CharacterGroup(z4, direct_product(cyclic(2), cyclic(2)), p)
    with pytest.raises(ValueError, match="shape"):
        CharacterGroup(z4, cg.dual, p[:2])


@given(st.sampled_from(ABELIAN))
@settings(max_examples=10, deadline=None)
def test_pairing_is_bimultiplicative(g: FiniteGroup) -> None:
    """Test ⟨χ₁χ₂, x⟩ = ⟨χ₁, x⟩⟨χ₂, x⟩ and ⟨χ, xy⟩ = ⟨χ, x⟩⟨χ, y⟩."""
    cg = character_group(g)
    p = cg.pairing
    assert np.allclose(p[cg.dual.table], p[:, None, :] * p[None, :, :])
    assert np.allclose(p[:, g.table], p[:, :, None] * p[:, None, :])


@given(st.sampled_from(ABELIAN))
@settings(max_examples=10, deadline=None)
def test_biduality(g: FiniteGroup) -> None:
    """Test that evaluation is an isomorphism onto the dual of the dual."""
    cg = character_group(g)
    evaluation, second = bidual_map(cg)
    assert evaluation.is_isomorphism
    # ⟨ev(x), χ⟩ = ⟨χ, x⟩
    assert np.allclose(second.pairing[evaluation.map, :], cg.pairing.T)


def test_dual_hom_examples(z4: FiniteGroup) -> None:
    """Test duals of the identity, the zero map and the doubling map."""
    cg4 = character_group(z4)
    assert dual_hom(identity_hom(z4), cg4, cg4).map.tolist() == [0, 1, 2, 3]

    z2 = cyclic(2)
    cg2 = character_group(z2)
    zero = dual_hom(make_hom(z2, z2, [0, 0]), cg2, cg2)
    assert zero.map.tolist() == [0, 0]

    doubling = make_hom(z2, z4, [0, 2])
    transpose = dual_hom(doubling, cg2, cg4)
    assert transpose.src == cg4.dual
    assert transpose.is_surjective


def test_dual_hom_pairing(z4: FiniteGroup) -> None:
    """Test ⟨ĥ(χ), x⟩ = ⟨χ, h(x)⟩ for the reduction Z/4 → Z/2."""
    z2 = cyclic(2)
    h = make_hom(z4, z2, [0, 1, 0, 1])
    cg4, cg2 = character_group(z4), character_group(z2)
    transpose = dual_hom(h, cg4, cg2)
    assert np.allclose(cg4.pairing[transpose.map], cg2.pairing[:, h.map])
