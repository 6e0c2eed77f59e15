"""Finite groups, homomorphisms, quotients and Pontryagin duality."""

from .abelian import (
    abelian_decomposition,
    bidual_map,
    character_group,
    dual_hom,
    invariant_factors,
)
from .base import (
    compose,
    cyclic,
    direct_product,
    identity_hom,
    make_group,
    make_hom,
    symmetric,
    trivial_group,
    trivial_hom,
)
from .semidirect import semidirect_product, validate_action
from .subgroups import (
    ImageCokernel,
    coset_representatives,
    generated_subgroup,
    image,
    image_and_cokernel,
    is_extension,
    is_normal,
    kernel,
    quotient,
    subgroup,
)

__all__ = [
    "ImageCokernel",
    "abelian_decomposition",
    "bidual_map",
    "character_group",
    "compose",
    "coset_representatives",
    "cyclic",
    "direct_product",
    "dual_hom",
    "generated_subgroup",
    "identity_hom",
    "image",
    "image_and_cokernel",
    "invariant_factors",
    "is_extension",
    "is_normal",
    "kernel",
    "make_group",
    "make_hom",
    "quotient",
    "semidirect_product",
    "subgroup",
    "symmetric",
    "trivial_group",
    "trivial_hom",
    "validate_action",
]
