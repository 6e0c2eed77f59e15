"""Test the central structure, the Takesaki–Takai map and the duality round trips."""

import numpy as np
import pytest

from crossmod.algebra import complex_numbers, dimension_vector
from crossmod.bundles import finite_torus_action, semidirect_bundle, trivial_action
from crossmod.corpus import get_instance
from crossmod.duality import (
    backward_functor,
    central_structure,
    crossed_product_via_fiber_check,
    duality_roundtrip_check,
    fiber_at,
    fiber_dimensions,
    forward_functor,
    groupoid_roundtrip_check,
    make_groupoid_action,
    right_regular,
    spectral_projection,
    takesaki_takai_check,
    takesaki_takai_map,
)
from crossmod.errors import EquivarianceViolation, NotAbelian, NotAbelianCM, NotTwoAbelian
from crossmod.groups import symmetric
from crossmod.modules import identity_crossed_module
from crossmod.types import StrictAction


@pytest.fixture
def torus2() -> StrictAction:
    """Return the finite torus action of Z/2 on M₂."""
    return finite_torus_action(2)


def test_central_structure_of_torus(torus2: StrictAction) -> None:
    """Test that C[H] sits centrally in the cross-sectional algebra."""
    cs = central_structure(semidirect_bundle(torus2))
    assert cs.algebra.dim == 8
    assert cs.hom.matrix.shape == (8, 2)
    assert cs.characters.dual.order == 2


def test_spectral_projections_are_orthogonal(torus2: StrictAction) -> None:
    """Test that the spectral projections are orthogonal and add up to the unit."""
    cs = central_structure(semidirect_bundle(torus2))
    p = [spectral_projection(cs, chi) for chi in range(2)]
    A = cs.algebra
    assert np.allclose(A.product(p[0], p[0]), p[0])
    assert np.allclose(A.product(p[0], p[1]), 0)
    assert np.allclose(p[0] + p[1], A.unit)


def test_fibers_add_up(torus2: StrictAction) -> None:
    """Test that the fibres over the characters of H add up to the whole algebra."""
    cs = central_structure(semidirect_bundle(torus2))
    dims = fiber_dimensions(cs)
    assert dims == [4, 4]
    assert sum(dims) == cs.algebra.dim
    fibre = fiber_at(cs, cs.characters.trivial)
    assert dimension_vector(fibre).to_list() == [2]


@pytest.mark.parametrize("name", ["finite-torus-2", "s3-kernel-z2", "decomposition-z4-z2xz2"])
def test_crossed_product_is_trivial_fiber(name: str) -> None:
    """Test that I_u equals the ideal of the fibre at the trivial character."""
    act = get_instance(name).build()
    assert crossed_product_via_fiber_check(semidirect_bundle(act))


def test_central_structure_needs_two_abelian() -> None:
    """Test that a non-trivial action of G on H is rejected."""
    act = trivial_action(complex_numbers(), identity_crossed_module(symmetric(3)))
    with pytest.raises(NotTwoAbelian):
        central_structure(semidirect_bundle(act))


def test_takesaki_takai(torus2: StrictAction) -> None:
    """Test that A⋊G⋊Ĝ is A ⊗ M_|G|, as algebras and through the explicit map."""
    assert takesaki_takai_check(torus2)
    phi = takesaki_takai_map(torus2)
    assert phi.matrix.shape == (16, 16)
    assert phi.src.dim == 16
    assert dimension_vector(phi.dst).to_list() == [4]


def test_takesaki_takai_on_corpus() -> None:
    """Test the dimension comparison on an Abelian group acting on a commutative algebra."""
    assert takesaki_takai_check(get_instance("group-z2-swap").build())


def test_takesaki_takai_map_needs_abelian_group() -> None:
    """Test that the explicit map needs characters of G."""
    with pytest.raises(NotAbelian):
        takesaki_takai_map(get_instance("thin-s3").build())


def test_checks_raise_instead_of_failing() -> None:
    """Test that the duality checks surface the error and its class."""
    with pytest.raises(NotAbelian):
        takesaki_takai_check(get_instance("thin-s3").build())
    with pytest.raises(NotAbelianCM):
        duality_roundtrip_check(get_instance("s3-kernel-z2").build())


def test_right_regular_is_a_representation() -> None:
    """Test that R_g R_k = R_gk with R_e the identity."""
    G = symmetric(3)
    R = right_regular(G)
    assert np.allclose(R[0], np.eye(6))
    for g in range(6):
        for k in range(6):
            assert np.allclose(R[g] @ R[k], R[G.mul(g, k)])


def test_forward_functor(torus2: StrictAction) -> None:
    """Test the groupoid action on A⋊G attached to the torus."""
    ga = forward_functor(torus2)
    assert ga.B.dim == 8
    assert ga.beta.shape == (2, 8, 8)
    assert ga.struct_map.matrix.shape == (8, 2)
    assert ga.source is torus2


def test_forward_functor_needs_abelian_cm() -> None:
    """Test that a non-Abelian G is rejected."""
    with pytest.raises(NotAbelianCM):
        forward_functor(get_instance("s3-kernel-z2").build())


def test_backward_functor(torus2: StrictAction) -> None:
    """Test that going there and back lands on A⋊G⋊Ĝ."""
    back = backward_functor(forward_functor(torus2))
    assert back.A.dim == 16
    assert back.C.G.order == 2
    assert dimension_vector(back.A).to_list() == [4]


def test_duality_roundtrips(torus2: StrictAction) -> None:
    """Test both round trips on the torus."""
    assert duality_roundtrip_check(torus2)
    assert groupoid_roundtrip_check(forward_functor(torus2))


def test_groupoid_action_must_translate_characters(torus2: StrictAction) -> None:
    """Test that the trivial Ĝ-action does not move the characters of H along ∂̂."""
    ga = forward_functor(torus2)
    still = np.broadcast_to(np.eye(ga.B.dim), ga.beta.shape)
    with pytest.raises(EquivarianceViolation) as info:
        make_groupoid_action(ga.B, ga.C, still, ga.struct_map.matrix)
    assert info.value.witness[0] == 1
