"""Test crossed modules, their homomorphisms and homotopy groups."""

import pytest

from crossmod.errors import (
    BoundaryMismatch,
    EquivarianceMismatch,
    NotHomomorphism,
    Peiffer1Violation,
    Peiffer2Violation,
)
from crossmod.groups import cyclic, direct_product, symmetric, trivial_group
from crossmod.modules import (
    compose_cm_hom,
    group_crossed_module,
    identity_cm_hom,
    identity_crossed_module,
    induced_pi_maps,
    is_abelian_cm,
    is_thin,
    is_two_abelian,
    kernel_crossed_module,
    make_cm_hom,
    make_crossed_module,
    normal_subgroup_crossed_module,
    pi1,
    pi2,
    trivial_crossed_module,
)
from crossmod.types import CrossedModule


@pytest.fixture
def doubling() -> CrossedModule:
    """Return (Z/4, Z/2, h ↦ 2h) with trivial action."""
    return make_crossed_module(cyclic(4), cyclic(2), [0, 2], "trivial", "doubling")


@pytest.fixture
def s3_a3() -> CrossedModule:
    """Return (S₃, A₃, inclusion, conjugation)."""
    return normal_subgroup_crossed_module(symmetric(3), [0, 3, 4])


def test_group_as_crossed_module() -> None:
    """Test that any group is a crossed module over the trivial group."""
    C = group_crossed_module(symmetric(3))
    assert C.H.order == 1
    assert is_two_abelian(C)
    assert not is_abelian_cm(C)
    quotient, _ = pi1(C)
    assert quotient == C.G


def test_abelian_crossed_module(doubling: CrossedModule) -> None:
    """Test the Abelian crossed module (Z/4, Z/2, ×2)."""
    assert is_abelian_cm(doubling)
    assert not is_thin(doubling)
    assert doubling.d(1) == 2


def test_normal_subgroup_crossed_module(s3_a3: CrossedModule) -> None:
    """Test that a normal subgroup with conjugation passes both Peiffer identities."""
    assert s3_a3.H.order == 3
    assert not is_two_abelian(s3_a3)
    quotient, _ = pi1(s3_a3)
    assert quotient.order == 2


def test_non_normal_subgroup_rejected() -> None:
    """Test that a non-normal subgroup does not give a crossed module."""
    with pytest.raises(Peiffer1Violation):
        normal_subgroup_crossed_module(symmetric(3), [0, 1])


def test_peiffer_violations() -> None:
    """Test that both Peiffer identities are checked with witnesses."""
    # (S₃, S₃, id) with trivial action breaks the first identity.
    s3 = symmetric(3)
    with pytest.raises(Peiffer1Violation) as info:
        make_crossed_module(s3, s3, range(6), "trivial")
    assert len(info.value.witness) == 2
    # (1, S₃) needs S₃ Abelian.
    with pytest.raises(Peiffer2Violation):
        kernel_crossed_module(s3)


def test_boundary_must_be_homomorphism() -> None:
    """Test that a non-homomorphic boundary is rejected."""
    with pytest.raises(NotHomomorphism):
        make_crossed_module(cyclic(4), cyclic(2), [0, 1], "trivial")


def test_pi1_examples(doubling: CrossedModule) -> None:
    """Test π₁ of (Z/4, Z/2, ×2) and of the trivial crossed module."""
    quotient, projection = pi1(doubling)
    assert quotient.order == 2
    assert projection.map.tolist() == [0, 1, 0, 1]
    assert pi1(trivial_crossed_module())[0].order == 1


def test_pi2_examples(doubling: CrossedModule) -> None:
    """Test π₂ of (1, Z/2), (Z/4, Z/2, ×2) and (Z/2, Z/2 × Z/2, first projection)."""
    module = pi2(kernel_crossed_module(cyclic(2)))
    assert module.group.order == 2
    assert module.is_trivial_action

    assert pi2(doubling).group.order == 1

    projection = make_crossed_module(
        cyclic(2), direct_product(cyclic(2), cyclic(2)), [0, 0, 1, 1], "trivial"
    )
    module = pi2(projection)
    assert module.kernel.elements.tolist() == [0, 1]
    assert module.pi1.order == 1
    assert module.is_trivial_action


def test_make_cm_hom_examples(doubling: CrossedModule) -> None:
    """Test the identity, a boundary mismatch and the projection to (Z/2, 1)."""
    assert identity_cm_hom(doubling).phi.is_isomorphism

    with pytest.raises(BoundaryMismatch) as info:
        make_cm_hom(kernel_crossed_module(cyclic(2)), doubling, [0], [0, 1])
    assert info.value.witness == (1,)

    f = make_cm_hom(doubling, group_crossed_module(cyclic(2)), [0, 1, 0, 1], [0, 0])
    assert f.phi.is_surjective


def test_make_cm_hom_equivariance() -> None:
    """Test that a map ignoring the action is rejected."""
    z2, z3 = cyclic(2), cyclic(3)
    plain = make_crossed_module(z2, z3, [0, 0, 0], "trivial")
    inverted = make_crossed_module(z2, z3, [0, 0, 0], [[0, 1, 2], [0, 2, 1]])
    with pytest.raises(EquivarianceMismatch) as info:
        make_cm_hom(plain, inverted, [0, 1], [0, 1, 2])
    assert info.value.witness == (1, 1)


def test_compose_and_pi_maps(doubling: CrossedModule) -> None:
    """Test that composition with the identity keeps the induced π maps."""
    f = make_cm_hom(doubling, group_crossed_module(cyclic(2)), [0, 1, 0, 1], [0, 0])
    composed = compose_cm_hom(f, identity_cm_hom(doubling))
    assert composed.phi.map.tolist() == f.phi.map.tolist()
    maps = induced_pi_maps(composed)
    assert maps.is_isomorphism
    assert maps.compatible


def test_identity_crossed_module_is_thin() -> None:
    """Test that (G, G, id, conjugation) is thin with trivial π₁ and π₂."""
    C = identity_crossed_module(symmetric(3))
    assert is_thin(C)
    assert pi1(C)[0].order == 1
    assert pi2(C).group.order == 1


def test_trivial_crossed_module() -> None:
    """Test the crossed module with one element."""
    C = trivial_crossed_module()
    assert C.G == trivial_group()
    assert is_abelian_cm(C)
