"""Crossed modules of finite groups."""

from .base import (
    group_crossed_module,
    identity_crossed_module,
    is_abelian_cm,
    is_thin,
    is_two_abelian,
    kernel_crossed_module,
    make_crossed_module,
    normal_subgroup_crossed_module,
    pi1,
    pi2,
    trivial_crossed_module,
)
from .decompose import CrossedModuleDecomposition, decompose
from .dual import bidual_cm_hom, dual_characters, dual_cm_hom, dual_crossed_module
from .equivalences import (
    enlarge_equivalence,
    is_abelian_equivalence,
    is_equivalence,
    quotient_by,
    quotient_equivalence,
    smallest_enlarging_subgroup,
    smallest_quotient_subgroup,
)
from .extension import (
    example_extension,
    green_extension,
    make_strict_extension,
    semidirect_crossed_module,
)
from .groupoid import arrow_groupoid, multiplication_functor, orbit_group
from .homs import PiMaps, compose_cm_hom, identity_cm_hom, induced_pi_maps, make_cm_hom

__all__ = [
    "CrossedModuleDecomposition",
    "PiMaps",
    "arrow_groupoid",
    "bidual_cm_hom",
    "compose_cm_hom",
    "decompose",
    "dual_characters",
    "dual_cm_hom",
    "dual_crossed_module",
    "enlarge_equivalence",
    "example_extension",
    "green_extension",
    "group_crossed_module",
    "identity_cm_hom",
    "identity_crossed_module",
    "induced_pi_maps",
    "is_abelian_cm",
    "is_abelian_equivalence",
    "is_equivalence",
    "is_thin",
    "is_two_abelian",
    "kernel_crossed_module",
    "make_cm_hom",
    "make_crossed_module",
    "make_strict_extension",
    "multiplication_functor",
    "normal_subgroup_crossed_module",
    "orbit_group",
    "pi1",
    "pi2",
    "quotient_by",
    "quotient_equivalence",
    "semidirect_crossed_module",
    "smallest_enlarging_subgroup",
    "smallest_quotient_subgroup",
    "trivial_crossed_module",
]
