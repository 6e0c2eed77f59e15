"""Test the equivalence criterion and the canonical equivalences."""

import pytest

from crossmod.errors import NotAbelianCM, NotInjectiveOnN, NotInvariant, NotSurjective
from crossmod.groups import cyclic, direct_product, symmetric
from crossmod.modules import (
    dual_cm_hom,
    enlarge_equivalence,
    group_crossed_module,
    identity_cm_hom,
    identity_crossed_module,
    induced_pi_maps,
    is_abelian_equivalence,
    is_equivalence,
    make_cm_hom,
    make_crossed_module,
    normal_subgroup_crossed_module,
    quotient_equivalence,
    smallest_enlarging_subgroup,
    smallest_quotient_subgroup,
    trivial_crossed_module,
)
from crossmod.types import CrossedModule, CrossedModuleHom


@pytest.fixture
def doubling() -> CrossedModule:
    """Return (Z/4, Z/2, h ↦ 2h) with trivial action."""
    return make_crossed_module(cyclic(4), cyclic(2), [0, 2])


@pytest.fixture
def klein_inclusion() -> CrossedModule:
    """Return (Z/2 × Z/2, Z/2, h ↦ (h, 0)) with trivial action."""
    return make_crossed_module(direct_product(cyclic(2), cyclic(2)), cyclic(2), [0, 2])


@pytest.fixture
def z4_quotient() -> CrossedModuleHom:
    """Return the projection (Z/4, Z/4, id) → (Z/2, Z/2, id)."""
    _, projection = quotient_equivalence(identity_crossed_module(cyclic(4)), [0, 2])
    return projection


def test_is_equivalence_examples(doubling: CrossedModule) -> None:
    """Test the identity, a quotient and a hom missing part of G₂."""
    assert is_equivalence(identity_cm_hom(doubling))

    projection = make_cm_hom(doubling, group_crossed_module(cyclic(2)), [0, 1, 0, 1], [0, 0])
    assert is_equivalence(projection)

    into = make_cm_hom(trivial_crossed_module(), group_crossed_module(cyclic(2)), [0], [0])
    certificate = is_equivalence(into)
    assert not certificate
    assert not certificate.surjective
    assert certificate.witnesses["surjective"] == [1]
    assert certificate.failures


def test_is_equivalence_fibered_failure() -> None:
    """Test that collapsing π₂ breaks the fibred bijection."""
    C = make_crossed_module(cyclic(2), cyclic(2), [0, 0])
    f = make_cm_hom(C, group_crossed_module(cyclic(2)), [0, 1], [0, 0])
    certificate = is_equivalence(f)
    assert not certificate.fibered_bijective
    assert certificate.witnesses["fibered"] == [0, 1]


def test_enlarge_equivalence(klein_inclusion: CrossedModule) -> None:
    """Test restricting to the whole G and to {0} × Z/2."""
    C1, inclusion = enlarge_equivalence(klein_inclusion, range(4))
    assert (C1.G.order, C1.H.order) == (4, 2)
    assert is_equivalence(inclusion)

    C1, inclusion = enlarge_equivalence(klein_inclusion, [0, 1])
    assert (C1.G.order, C1.H.order) == (2, 1)
    assert induced_pi_maps(inclusion).is_isomorphism


def test_enlarge_equivalence_not_surjective(klein_inclusion: CrossedModule) -> None:
    """Test that a subgroup too small to reach G with ∂(H) is rejected."""
    with pytest.raises(NotSurjective) as info:
        enlarge_equivalence(klein_inclusion, [0])
    assert info.value.witness == (1, 3)


def test_quotient_equivalence_examples(z4_quotient: CrossedModuleHom) -> None:
    """Test dividing by the trivial subgroup, by all of a thin H and by {0, 2} in Z/4."""
    C = identity_crossed_module(cyclic(3))
    same, projection = quotient_equivalence(C, [0])
    assert (same.G.order, same.H.order) == (3, 3)
    assert projection.phi.is_isomorphism

    trivial, _ = quotient_equivalence(C, range(3))
    assert (trivial.G.order, trivial.H.order) == (1, 1)

    C2 = z4_quotient.dst
    assert (C2.G.order, C2.H.order) == (2, 2)
    assert C2.is_thin
    assert induced_pi_maps(z4_quotient).is_isomorphism


def test_quotient_equivalence_errors() -> None:
    """Test that ∂ must be injective on N and N must be invariant."""
    collapsing = make_crossed_module(cyclic(2), cyclic(2), [0, 0])
    with pytest.raises(NotInjectiveOnN):
        quotient_equivalence(collapsing, [0, 1])
    with pytest.raises(NotInvariant):
        quotient_equivalence(identity_crossed_module(symmetric(3)), [0, 1])


def test_quotient_of_normal_subgroup_module() -> None:
    """Test that (S₃, A₃) divided by A₃ is the group Z/2."""
    C2, projection = quotient_equivalence(normal_subgroup_crossed_module(symmetric(3), [0, 3, 4]), range(3))
    assert (C2.G.order, C2.H.order) == (2, 1)
    assert induced_pi_maps(projection).is_isomorphism


def test_smallest_subgroups_found() -> None:
    """Test the smallest non-trivial N and proper G₁ on three crossed modules."""
    identity = identity_crossed_module(cyclic(4))
    assert smallest_quotient_subgroup(identity).elements.tolist() == [0, 2]
    assert smallest_enlarging_subgroup(identity).elements.tolist() == [0]

    inclusion = normal_subgroup_crossed_module(symmetric(3), [0, 3, 4])
    assert smallest_quotient_subgroup(inclusion).elements.tolist() == [0, 1, 2]
    assert smallest_enlarging_subgroup(inclusion).elements.tolist() == [0, 1]

    group = group_crossed_module(cyclic(4))
    assert smallest_quotient_subgroup(group) is None
    assert smallest_enlarging_subgroup(group) is None


def test_smallest_subgroups_are_accepted() -> None:
    """Test that the subgroups found give certified equivalences."""
    C = normal_subgroup_crossed_module(symmetric(3), [0, 3, 4])
    C1, inclusion = enlarge_equivalence(C, smallest_enlarging_subgroup(C))
    assert (C1.G.order, C1.H.order) == (2, 1)
    assert is_equivalence(inclusion)
    C2, projection = quotient_equivalence(C, smallest_quotient_subgroup(C))
    assert (C2.G.order, C2.H.order) == (2, 1)
    assert is_equivalence(projection)


def test_abelian_equivalence_examples(doubling: CrossedModule, z4_quotient: CrossedModuleHom) -> None:
    """Test the exact-sequence criterion on the identity, a quotient and a non-surjective map."""
    assert is_abelian_equivalence(identity_cm_hom(doubling))
    assert is_abelian_equivalence(z4_quotient)
    into = make_cm_hom(trivial_crossed_module(), group_crossed_module(cyclic(2)), [0], [0])
    assert not is_abelian_equivalence(into)


def test_abelian_equivalence_agrees(doubling: CrossedModule, z4_quotient: CrossedModuleHom) -> None:
    """Test that both criteria agree, also on the dual homomorphisms."""
    homs = [
        identity_cm_hom(doubling),
        z4_quotient,
        make_cm_hom(doubling, group_crossed_module(cyclic(2)), [0, 1, 0, 1], [0, 0]),
        make_cm_hom(trivial_crossed_module(), group_crossed_module(cyclic(2)), [0], [0]),
    ]
    for f in homs:
        verdict = is_abelian_equivalence(f)
        assert verdict == is_equivalence(f).is_equivalence
        assert verdict == is_equivalence(dual_cm_hom(f)).is_equivalence


def test_abelian_equivalence_needs_abelian() -> None:
    """Test that non-Abelian crossed modules are rejected."""
    C = identity_crossed_module(symmetric(3))
    with pytest.raises(NotAbelianCM):
        is_abelian_equivalence(identity_cm_hom(C))
