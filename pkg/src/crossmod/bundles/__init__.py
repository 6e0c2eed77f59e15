"""Fell bundles over finite crossed modules, strict actions and crossed products."""

from .actions import (
    clock_and_shift,
    finite_torus_action,
    group_action,
    inner_action,
    make_strict_action,
    pullback_action,
    semidirect_bundle,
    translation_action,
    trivial_action,
)
from .base import (
    brute_force_crossed_product,
    cross_sectional,
    crossed_product,
    crossed_product_generators,
    crossed_product_ideal,
    make_cm_bundle,
    make_fell_bundle,
)
from .equivalence import descend_bundle, graded_isomorphism, pullback_bundle, restrict_bundle
from .representations import (
    canonical_representation,
    classical_crossed_product,
    conjugate_representation,
    covariant_representation,
    make_representation,
    universal_factorization,
)

__all__ = [
    "brute_force_crossed_product",
    "canonical_representation",
    "classical_crossed_product",
    "clock_and_shift",
    "conjugate_representation",
    "covariant_representation",
    "cross_sectional",
    "crossed_product",
    "crossed_product_generators",
    "crossed_product_ideal",
    "descend_bundle",
    "finite_torus_action",
    "graded_isomorphism",
    "group_action",
    "inner_action",
    "make_cm_bundle",
    "make_fell_bundle",
    "make_representation",
    "make_strict_action",
    "pullback_action",
    "pullback_bundle",
    "restrict_bundle",
    "semidirect_bundle",
    "translation_action",
    "trivial_action",
]
