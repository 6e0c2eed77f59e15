"""Test groups, homomorphisms and semidirect products."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossmod.algebra import group_algebra, wedderburn
from crossmod.errors import GroupError, NoIdentity, NoInverse, NotAction, NotAssociative, NotHomomorphism
from crossmod.groups import (
    compose,
    cyclic,
    direct_product,
    identity_hom,
    make_group,
    make_hom,
    semidirect_product,
    symmetric,
    trivial_group,
)
from crossmod.types import FiniteGroup


@pytest.fixture
def z4() -> FiniteGroup:
    """Return the cyclic group of order 4."""
    return cyclic(4)


@pytest.fixture
def s3_table() -> np.ndarray:
    """Return the composition table of the permutations of three letters."""
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return np.array([[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms])


def small_groups() -> st.SearchStrategy:
    """Draw one of a handful of small groups."""
    return st.sampled_from(
        [
            trivial_group(),
            cyclic(2),
            cyclic(5),
            cyclic(6),
            direct_product(cyclic(2), cyclic(2)),
            symmetric(3),
            direct_product(cyclic(2), cyclic(3)),
        ]
    )


def test_make_group_trivial() -> None:
    """Test that the 1×1 table gives the trivial group."""
    g = make_group([[0]])
    assert g.order == 1
    assert g.inverse.tolist() == [0]


def test_make_group_cyclic(z4: FiniteGroup) -> None:
    """Test that the addition table of Z/4 is validated with the right inverses."""
    g = make_group((np.arange(4)[:, None] + np.arange(4)[None, :]) % 4, "Z/4")
    assert g.order == 4
    assert g.inverse.tolist() == [0, 3, 2, 1]
    assert g == z4
    assert g.is_abelian


def test_make_group_s3(s3_table: np.ndarray) -> None:
    """Test that the composition table of S₃ gives a non-Abelian group of order 6."""
    g = make_group(s3_table, "S3")
    assert g.order == 6
    assert not g.is_abelian
    assert g == symmetric(3)


def test_make_group_moves_identity() -> None:
    """Test that an identity sitting at a nonzero index is moved to 0."""
    # Z/2 with the identity written second.
    g = make_group([[1, 0], [0, 1]])
    assert g.table.tolist() == [[0, 1], [1, 0]]


def test_make_group_not_associative() -> None:
    """Test that a non-associative table reports the offending triple."""
    table = [[0, 1, 2], [1, 0, 0], [2, 0, 0]]
    with pytest.raises(NotAssociative) as info:
        make_group(table)
    assert len(info.value.witness) == 3


def test_make_group_no_identity() -> None:
    """Test that a table without identity is rejected."""
    with pytest.raises(NoIdentity):
        make_group([[1, 1], [1, 1]])


def test_make_group_no_inverse() -> None:
    """Test that a monoid table is rejected for lack of inverses."""
    # {1, 0} under multiplication: 0 has no inverse.
    with pytest.raises(NoInverse) as info:
        make_group([[0, 1], [1, 1]])
    assert info.value.witness == (1,)


def test_make_group_bad_shape() -> None:
    """Test that non-square or out-of-range tables are rejected."""
    with pytest.raises(GroupError):
        make_group([[0, 1]])
    with pytest.raises(GroupError):
        make_group([[0, 2], [2, 0]])


def test_make_group_errors_are_value_errors() -> None:
    """Test that group errors can be caught as ValueError."""
    with pytest.raises(ValueError):
        make_group([[1, 1], [1, 1]])


def test_make_hom_examples(z4: FiniteGroup) -> None:
    """Test the identity, the reduction mod 2 and a constant map on Z/4."""
    assert make_hom(z4, z4, range(4)).is_isomorphism
    reduction = make_hom(z4, cyclic(2), [0, 1, 0, 1])
    assert reduction.is_surjective
    assert not reduction.is_injective
    with pytest.raises(NotHomomorphism) as info:
        make_hom(z4, cyclic(2), [1, 1, 1, 1])
    assert len(info.value.witness) == 2


def test_compose(z4: FiniteGroup) -> None:
    """Test that composing with the identity changes nothing."""
    reduction = make_hom(z4, cyclic(2), [0, 1, 0, 1])
    composed = compose(reduction, identity_hom(z4))
    assert composed.map.tolist() == [0, 1, 0, 1]


def test_direct_product_indexing() -> None:
    """Test that pair (a, b) sits at index a·|B| + b."""
    g = direct_product(cyclic(2), cyclic(3))
    assert g.order == 6
    # (1, 2)·(1, 2) = (0, 1)
    assert g.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1


def test_semidirect_trivial_action_is_direct() -> None:
    """Test that a trivial action gives the direct product."""
    g = semidirect_product(cyclic(2), cyclic(3), [[0, 1, 2], [0, 1, 2]])
    assert g == direct_product(cyclic(2), cyclic(3))
    assert g.is_abelian


def test_semidirect_inversion_is_s3() -> None:
    """Test that Z/2 acting on Z/3 by inversion gives a group algebra with blocks [1, 1, 2]."""
    g = semidirect_product(cyclic(2), cyclic(3), [[0, 1, 2], [0, 2, 1]])
    assert g.order == 6
    assert not g.is_abelian
    assert wedderburn(group_algebra(g)).dimension_vector.to_list() == [1, 1, 2]


def test_semidirect_with_trivial_factor() -> None:
    """Test that G ⋉ 1 is G."""
    g = symmetric(3)
    product = semidirect_product(g, trivial_group(), [[0]] * 6)
    assert product == g


def test_semidirect_rejects_non_action() -> None:
    """Test that a non-homomorphic family of automorphisms is rejected."""
    with pytest.raises(NotAction):
        semidirect_product(cyclic(3), cyclic(3), [[0, 1, 2], [0, 2, 1], [0, 2, 1]])


@given(small_groups())
@settings(max_examples=20, deadline=None)
def test_group_axioms(g: FiniteGroup) -> None:
    """Test associativity, identity and inverses exhaustively."""
    t = g.table
    assert np.array_equal(t[t, :], t[:, t])
    assert np.array_equal(t[0], np.arange(g.order))
    assert np.array_equal(t[:, 0], np.arange(g.order))
    assert np.all(t[np.arange(g.order), g.inverse] == 0)


@given(small_groups(), small_groups())
@settings(max_examples=20, deadline=None)
def test_direct_product_order(a: FiniteGroup, b: FiniteGroup) -> None:
    """Test that the direct product has the product order and is Abelian iff both factors are."""
    g = direct_product(a, b)
    assert g.order == a.order * b.order
    assert g.is_abelian == (a.is_abelian and b.is_abelian)
