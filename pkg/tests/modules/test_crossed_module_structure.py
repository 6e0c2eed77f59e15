"""Test arrow groupoids, duality, decomposition and strict extensions."""

import numpy as np
import pytest

from crossmod.errors import NotExtension, NotNormal
from crossmod.groups import cyclic, direct_product, symmetric
from crossmod.modules import (
    arrow_groupoid,
    bidual_cm_hom,
    decompose,
    dual_crossed_module,
    example_extension,
    green_extension,
    group_crossed_module,
    identity_cm_hom,
    identity_crossed_module,
    kernel_crossed_module,
    make_crossed_module,
    make_strict_extension,
    multiplication_functor,
    normal_subgroup_crossed_module,
    orbit_group,
    pi1,
    trivial_crossed_module,
)
from crossmod.types import CrossedModule


@pytest.fixture
def doubling() -> CrossedModule:
    """Return (Z/4, Z/2, h ↦ 2h) with trivial action."""
    return make_crossed_module(cyclic(4), cyclic(2), [0, 2])


def test_arrow_groupoid_examples(doubling: CrossedModule) -> None:
    """Test the arrow groupoids of the trivial, identity and doubling crossed modules."""
    discrete = arrow_groupoid(trivial_crossed_module())
    assert (discrete.n_objects, discrete.n_arrows) == (1, 1)

    connected = arrow_groupoid(identity_crossed_module(cyclic(2)))
    assert (connected.n_objects, connected.n_arrows) == (2, 4)
    assert connected.orbits == [(0, 1)]
    assert connected.isotropy(0).tolist() == [0]

    split = arrow_groupoid(doubling)
    assert split.orbits == [(0, 2), (1, 3)]
    assert all(split.isotropy(x).size == 1 for x in range(4))


def test_multiplication_functor(doubling: CrossedModule) -> None:
    """Test functoriality and the orbit group for several crossed modules."""
    for C in (
        trivial_crossed_module(),
        identity_crossed_module(cyclic(2)),
        doubling,
        identity_crossed_module(symmetric(3)),
    ):
        functor = multiplication_functor(C)
        assert functor.arrow_map.shape == (C.G.order * C.H.order,) * 2
        assert orbit_group(functor) == pi1(C)[0]


def test_dual_crossed_module_examples() -> None:
    """Test the duals of (1, Z/3) and (Z/2, Z/2, id) and the double dual."""
    dual = dual_crossed_module(kernel_crossed_module(cyclic(3)))
    assert (dual.G.order, dual.H.order) == (3, 1)

    C = identity_crossed_module(cyclic(2))
    dual = dual_crossed_module(C)
    assert dual.boundary.is_isomorphism

    evaluation = bidual_cm_hom(make_crossed_module(cyclic(4), cyclic(2), [0, 2]))
    assert evaluation.phi.is_isomorphism
    assert evaluation.psi.is_isomorphism


def test_dual_transposes_boundary(doubling: CrossedModule) -> None:
    """Test that the dual of (Z/4, Z/2, ×2) has a surjective boundary Ẑ/4 → Ẑ/2."""
    dual = dual_crossed_module(doubling)
    assert (dual.G.order, dual.H.order) == (2, 4)
    assert dual.boundary.is_surjective


def test_decompose_examples() -> None:
    """Test decomposing a group, a kernel crossed module and a mixed example."""
    parts = decompose(group_crossed_module(cyclic(3)))
    assert parts.C1.H.order == 1
    assert (parts.C3.G.order, parts.C3.H.order) == (1, 1)
    assert parts.C4.G.order == 3

    parts = decompose(kernel_crossed_module(cyclic(2)))
    assert (parts.C1.G.order, parts.C1.H.order) == (1, 2)
    assert (parts.C2.G.order, parts.C2.H.order) == (1, 1)
    assert parts.C4.G.order == 1

    mixed = make_crossed_module(cyclic(4), direct_product(cyclic(2), cyclic(2)), [0, 0, 2, 2])
    parts = decompose(mixed)
    assert (parts.C1.G.order, parts.C1.H.order) == (1, 2)
    assert (parts.C2.G.order, parts.C2.H.order) == (4, 2)
    assert (parts.C3.G.order, parts.C3.H.order) == (2, 2)
    assert parts.C3.is_thin
    assert (parts.C4.G.order, parts.C4.H.order) == (2, 1)
    assert parts.first.C2 is mixed


def test_example_extension(doubling: CrossedModule) -> None:
    """Test (H, 1) ↣ (G⋉H, H) ↠ C."""
    ext = example_extension(doubling)
    assert ext.C1.G.order == 2
    assert (ext.C2.G.order, ext.C2.H.order) == (8, 2)
    assert ext.C3 is doubling
    assert ext.C2.is_thin is False
    assert np.array_equal(ext.proj.psi.map, np.arange(2))


def test_example_extension_non_abelian() -> None:
    """Test the extension over (S₃, A₃) with its conjugation action."""
    C = normal_subgroup_crossed_module(symmetric(3), [0, 3, 4])
    ext = example_extension(C)
    assert ext.C2.G.order == 18


def test_green_extension() -> None:
    """Test (N, 1) ↣ (G, 1) ↠ (G/N, 1) for A₃ in S₃ and reject non-normal N."""
    ext = green_extension(symmetric(3), [0, 3, 4])
    assert (ext.C1.G.order, ext.C2.G.order, ext.C3.G.order) == (3, 6, 2)
    with pytest.raises(NotNormal):
        green_extension(symmetric(3), [0, 1])


def test_make_strict_extension_rejects(doubling: CrossedModule) -> None:
    """Test that C ↣ C ↠ C by identities is rejected at the level of H."""
    ident = identity_cm_hom(doubling)
    with pytest.raises(NotExtension) as info:
        make_strict_extension(doubling, doubling, doubling, ident, ident)
    assert info.value.witness == ("H",)
