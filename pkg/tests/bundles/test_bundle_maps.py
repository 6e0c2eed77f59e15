"""Test representations, the universal property and moving bundles along equivalences."""

from typing import List, Optional

import numpy as np
import pytest

from crossmod.algebra import dimension_vector, functions_on, make_star_hom, matrix_algebra
from crossmod.bundles import (
    canonical_representation,
    classical_crossed_product,
    conjugate_representation,
    covariant_representation,
    crossed_product,
    descend_bundle,
    finite_torus_action,
    graded_isomorphism,
    make_representation,
    make_strict_action,
    restrict_bundle,
    semidirect_bundle,
    translation_action,
    universal_factorization,
)
from crossmod.errors import BundleError, Mismatch, RepresentationError
from crossmod.groups import cyclic
from crossmod.modules import enlarge_equivalence, identity_crossed_module, quotient_equivalence
from crossmod.types import FellBundleCM


@pytest.fixture
def torus_bundle() -> FellBundleCM:
    """Return the semidirect bundle of the finite torus action on M₂."""
    return semidirect_bundle(finite_torus_action(2))


@pytest.fixture
def translation_bundle() -> FellBundleCM:
    """Return the semidirect bundle of Z/2 translating C(Z/2)."""
    return semidirect_bundle(translation_action(cyclic(2)))


@pytest.fixture
def thin_z4_bundle() -> FellBundleCM:
    """Return (Z/4, Z/4, id) acting trivially on C(Z/2) with u_h = (1, (−1)ʰ)."""
    u = np.stack([np.ones(4), (-1.0) ** np.arange(4)], axis=1)
    act = make_strict_action(
        functions_on(2), identity_crossed_module(cyclic(4)), np.broadcast_to(np.eye(2), (4, 2, 2)), u
    )
    return semidirect_bundle(act)


def test_classical_crossed_product_agrees() -> None:
    """Test that the regular covariant representation reproduces the bundle product."""
    act = translation_action(cyclic(3))
    classical, matrices = classical_crossed_product(act.A, act.C.G, act.alpha)
    cmb = semidirect_bundle(act)
    assert classical.dim == 9
    assert matrices.shape[0] == 9
    assert np.allclose(classical.mul, cmb.bundle.mul)
    assert dimension_vector(classical).to_list() == [3]


def test_canonical_representation_factors_through_identity(torus_bundle: FellBundleCM) -> None:
    """Test that the canonical representation factors through the identity."""
    rep, projection = canonical_representation(torus_bundle)
    f = universal_factorization(torus_bundle, rep)
    assert np.allclose(f.matrix, np.eye(projection.matrix.shape[0]))


def test_conjugated_representation_factors_through_ad(torus_bundle: FellBundleCM) -> None:
    """Test that Ad(w)∘P factors through Ad(w) for the image w of the unit in fibre 1."""
    rep, projection = canonical_representation(torus_bundle)
    target = rep.target
    bundle = torus_bundle.bundle
    w = projection.matrix @ bundle.embed(1, bundle.unit_fiber.unit)
    conjugated = conjugate_representation(rep, w)
    f = universal_factorization(torus_bundle, conjugated)
    ad = target.left_matrix(w) @ target.right_matrix(target.adjoint(w))
    assert np.allclose(f.matrix, ad)
    assert not np.allclose(ad, np.eye(target.dim))
    assert np.allclose(f.matrix @ projection.matrix, conjugated.matrix)


def test_conjugate_representation_needs_unitary(torus_bundle: FellBundleCM) -> None:
    """Test that conjugating by a non-unitary element is rejected."""
    rep, _ = canonical_representation(torus_bundle)
    with pytest.raises(RepresentationError):
        conjugate_representation(rep, 2 * rep.target.unit)


def test_covariant_representation_factorization(translation_bundle: FellBundleCM) -> None:
    """Test that diagonal functions with the swap give C(Z/2) ⋊ Z/2 ≅ M₂."""
    m2 = matrix_algebra(2)
    diagonal = np.zeros((4, 2))
    diagonal[0, 0] = diagonal[3, 1] = 1.0
    pi = make_star_hom(functions_on(2), m2, diagonal)
    rep = covariant_representation(translation_bundle, m2, pi, [m2.unit, [0.0, 1.0, 1.0, 0.0]])
    f = universal_factorization(translation_bundle, rep)
    assert f.matrix.shape == (4, 4)
    assert np.linalg.matrix_rank(f.matrix) == 4


def test_make_representation_errors(translation_bundle: FellBundleCM) -> None:
    """Test that shape, adjoints and multiplicativity are checked."""
    m2 = matrix_algebra(2)
    diagonal = np.zeros((4, 2))
    diagonal[0, 0] = diagonal[3, 1] = 1.0
    pi = make_star_hom(functions_on(2), m2, diagonal)
    rep = covariant_representation(translation_bundle, m2, pi, [m2.unit, [0.0, 1.0, 1.0, 0.0]])
    with pytest.raises(RepresentationError):
        make_representation(translation_bundle, m2, np.zeros((4, 3)))
    with pytest.raises(RepresentationError) as info:
        make_representation(translation_bundle, m2, 1j * np.eye(4))
    assert info.value.witness[0] == "adjoint"
    with pytest.raises(RepresentationError) as info:
        make_representation(translation_bundle, m2, 2 * rep.matrix)
    assert info.value.witness[0] == "multiplicative"


def test_restrict_bundle_to_unit_base(torus_bundle: FellBundleCM) -> None:
    """Test restricting to ({0}, ∂⁻¹{0}) keeps the fibre M₂ and the crossed product."""
    C1, inclusion = enlarge_equivalence(torus_bundle.C, [0])
    restricted = restrict_bundle(torus_bundle, inclusion)
    assert (C1.G.order, C1.H.order) == (1, 1)
    assert restricted.bundle.fiber_dims.tolist() == [4]
    crossed, _ = crossed_product(restricted)
    assert dimension_vector(crossed).to_list() == [2]


def test_descend_bundle_to_quotient(torus_bundle: FellBundleCM) -> None:
    """Test descending along (Z/2, Z/2) → (1, 1) keeps the crossed product M₂."""
    _, projection = quotient_equivalence(torus_bundle.C, range(2))
    descended = descend_bundle(torus_bundle, projection)
    assert descended.bundle.fiber_dims.tolist() == [4]
    crossed, _ = crossed_product(descended)
    assert dimension_vector(crossed).to_list() == [2]


@pytest.mark.parametrize("transversal", [None, [2, 1], [0, 3], [2, 3]])
def test_descend_bundle_any_transversal(thin_z4_bundle: FellBundleCM, transversal: Optional[List[int]]) -> None:
    """Test that every transversal of Z/4 → Z/2 gives the crossed product C ⊕ C."""
    direct, _ = crossed_product(thin_z4_bundle)
    assert dimension_vector(direct).to_list() == [1, 1]
    _, projection = quotient_equivalence(thin_z4_bundle.C, [0, 2])
    descended = descend_bundle(thin_z4_bundle, projection, transversal)
    assert descended.bundle.fiber_dims.tolist() == [2, 2]
    crossed, _ = crossed_product(descended)
    assert dimension_vector(crossed) == dimension_vector(direct)


@pytest.mark.parametrize("transversal", [[0, 2], [1, 0], [1]])
def test_descend_bundle_rejects_bad_transversal(thin_z4_bundle: FellBundleCM, transversal: List[int]) -> None:
    """Test that a transversal must pick one element from each coset, in order."""
    _, projection = quotient_equivalence(thin_z4_bundle.C, [0, 2])
    with pytest.raises(Mismatch):
        descend_bundle(thin_z4_bundle, projection, transversal)


def test_graded_isomorphism(torus_bundle: FellBundleCM) -> None:
    """Test the identity and a map that is not bijective."""
    d = torus_bundle.bundle.total_dim
    hom = graded_isomorphism(torus_bundle, torus_bundle, np.eye(d))
    assert hom.matrix.shape == (d, d)
    with pytest.raises(BundleError):
        graded_isomorphism(torus_bundle, torus_bundle, np.zeros((d, d)))
