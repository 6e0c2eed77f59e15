"""Finite-dimensional C*-algebras given by structure constants."""

from .base import (
    check_cstar,
    compose_star,
    identity_star_hom,
    is_central,
    make_algebra,
    make_star_hom,
)
from .constructions import (
    algebra_from_matrices,
    change_basis,
    complex_numbers,
    direct_sum,
    faithful_representation,
    functions_on,
    group_algebra,
    matrix_algebra,
    tensor,
)
from .linalg import column_space, null_space, rank, solve_least_squares
from .structure import (
    brute_force_ideal,
    center,
    dimension_vector,
    ideal_generated,
    is_ideal,
    is_isomorphic,
    quotient_algebra,
    wedderburn,
    zero_algebra,
)

__all__ = [
    "algebra_from_matrices",
    "brute_force_ideal",
    "center",
    "change_basis",
    "check_cstar",
    "column_space",
    "complex_numbers",
    "compose_star",
    "dimension_vector",
    "direct_sum",
    "faithful_representation",
    "functions_on",
    "group_algebra",
    "ideal_generated",
    "identity_star_hom",
    "is_central",
    "is_ideal",
    "is_isomorphic",
    "make_algebra",
    "make_star_hom",
    "matrix_algebra",
    "null_space",
    "quotient_algebra",
    "rank",
    "solve_least_squares",
    "tensor",
    "wedderburn",
    "zero_algebra",
]
