"""Test centers, Wedderburn decompositions, ideals and quotients."""

from typing import Tuple

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossmod.algebra import (
    brute_force_ideal,
    center,
    complex_numbers,
    dimension_vector,
    direct_sum,
    functions_on,
    group_algebra,
    ideal_generated,
    is_ideal,
    is_isomorphic,
    matrix_algebra,
    quotient_algebra,
    tensor,
    wedderburn,
)
from crossmod.errors import DegenerateQuotientWarning, NotIdeal
from crossmod.groups import cyclic, direct_product, symmetric
from crossmod.types import DimensionVector, StarAlgebra, StarHom, Subspace


@pytest.fixture
def c_s3() -> StarAlgebra:
    """Return the group algebra of S₃."""
    return group_algebra(symmetric(3))


def test_dimension_vector_examples(c_s3: StarAlgebra) -> None:
    """Test the block sizes of the standard algebras."""
    assert wedderburn(c_s3).dimension_vector.to_list() == [1, 1, 2]
    assert dimension_vector(matrix_algebra(3)).to_list() == [3]
    assert dimension_vector(functions_on(3)).to_list() == [1, 1, 1]
    assert dimension_vector(group_algebra(cyclic(4))).to_list() == [1, 1, 1, 1]
    assert dimension_vector(direct_sum(matrix_algebra(2), complex_numbers())).to_list() == [1, 2]
    assert dimension_vector(tensor(matrix_algebra(2), functions_on(2))).to_list() == [2, 2]
    assert dimension_vector(tensor(matrix_algebra(2), matrix_algebra(2))).to_list() == [4]


def test_dimension_vector_type() -> None:
    """Test that sizes are sorted and must be positive."""
    vector = DimensionVector((2, 1, 1))
    assert vector.to_list() == [1, 1, 2]
    assert vector.total_dim == 6
    assert len(vector) == 3
    with pytest.raises(ValueError):
        DimensionVector((0, 1))


def test_wedderburn_idempotents(c_s3: StarAlgebra) -> None:
    """Test that the central projections are orthogonal and sum to the unit."""
    result = wedderburn(c_s3, seed=7)
    assert result.seed >= 7
    total = np.zeros(c_s3.dim, dtype=complex)
    for i, p in enumerate(result.idempotents):
        assert np.allclose(c_s3.product(p, p), p)
        assert np.allclose(c_s3.adjoint(p), p)
        for q in result.idempotents[i + 1 :]:
            assert np.allclose(c_s3.product(p, q), 0)
        total += p
    assert np.allclose(total, c_s3.unit)


def test_wedderburn_zero_algebra() -> None:
    """Test that the zero algebra has no blocks."""
    zero, _ = _quotient_by_everything(matrix_algebra(2))
    assert wedderburn(zero).dimension_vector.to_list() == []


def test_center_dimensions(c_s3: StarAlgebra) -> None:
    """Test that the center has one dimension per block."""
    assert center(matrix_algebra(2)).shape == (4, 1)
    assert center(c_s3).shape == (6, 3)
    assert center(functions_on(4)).shape == (4, 4)


def test_is_isomorphic(c_s3: StarAlgebra) -> None:
    """Test isomorphism by dimension vectors."""
    assert is_isomorphic(group_algebra(cyclic(4)), functions_on(4))
    assert is_isomorphic(group_algebra(direct_product(cyclic(2), cyclic(2))), functions_on(4))
    assert is_isomorphic(c_s3, direct_sum(complex_numbers(), complex_numbers(), matrix_algebra(2)))
    assert not is_isomorphic(matrix_algebra(2), functions_on(4))
    assert not is_isomorphic(matrix_algebra(2), functions_on(3))


def test_ideal_generated_matches_brute_force(c_s3: StarAlgebra) -> None:
    """Test both ideal computations on a few generators."""
    for gens in ([c_s3.basis(1) - c_s3.basis(0)], [c_s3.basis(3) - c_s3.basis(0)], []):
        closed = ideal_generated(c_s3, gens)
        brute = brute_force_ideal(c_s3, gens)
        assert closed.equals(brute)
        assert is_ideal(c_s3, closed)


def test_ideal_generated_examples(c_s3: StarAlgebra) -> None:
    """Test the ideals generated by a matrix unit, a transposition and a 3-cycle."""
    m2 = matrix_algebra(2)
    assert ideal_generated(m2, [m2.basis(0)]).dim == 4
    assert ideal_generated(c_s3, [c_s3.basis(1) - c_s3.basis(0)]).dim == 5
    assert ideal_generated(c_s3, [c_s3.basis(3) - c_s3.basis(0)]).dim == 4


def test_quotient_algebra(c_s3: StarAlgebra) -> None:
    """Test dividing C(3) by a point and C[S₃] by the ideal of a 3-cycle."""
    c3 = functions_on(3)
    quot, projection = quotient_algebra(c3, ideal_generated(c3, [c3.basis(0)]))
    assert quot.dim == 2
    assert dimension_vector(quot).to_list() == [1, 1]
    assert np.allclose(projection(c3.basis(0)), 0)

    ideal = ideal_generated(c_s3, [c_s3.basis(3) - c_s3.basis(0)])
    quot, _ = quotient_algebra(c_s3, ideal)
    assert dimension_vector(quot).to_list() == [1, 1]


def test_quotient_algebra_not_ideal() -> None:
    """Test that a one-dimensional corner of M₂ is rejected."""
    m2 = matrix_algebra(2)
    corner = Subspace(np.eye(4, dtype=complex)[:, :1])
    assert not is_ideal(m2, corner)
    with pytest.raises(NotIdeal):
        quotient_algebra(m2, corner)


def _quotient_by_everything(algebra: StarAlgebra) -> Tuple[StarAlgebra, StarHom]:
    with pytest.warns(DegenerateQuotientWarning):
        return quotient_algebra(algebra, Subspace(np.eye(algebra.dim, dtype=complex)))


def test_quotient_by_everything() -> None:
    """Test that dividing by the whole algebra warns and returns the zero algebra."""
    zero, projection = _quotient_by_everything(functions_on(2))
    assert zero.dim == 0
    assert projection.matrix.shape == (0, 2)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3))
def test_wedderburn_direct_sums(sizes: list) -> None:
    """Test that a direct sum of matrix algebras has exactly those blocks."""
    algebra = direct_sum(*(matrix_algebra(n) for n in sizes))
    assert dimension_vector(algebra).to_list() == sorted(sizes)
