"""Duality for 2-Abelian and Abelian crossed modules."""

from .central import (
    central_structure,
    crossed_product_via_fiber_check,
    fiber_at,
    fiber_dimensions,
    fiber_ideal,
    spectral_projection,
)
from .takesaki import (
    backward_functor,
    duality_roundtrip_check,
    forward_functor,
    groupoid_roundtrip_check,
    make_groupoid_action,
    right_regular,
    takesaki_takai_check,
    takesaki_takai_map,
)

__all__ = [
    "backward_functor",
    "central_structure",
    "crossed_product_via_fiber_check",
    "duality_roundtrip_check",
    "fiber_at",
    "fiber_dimensions",
    "fiber_ideal",
    "forward_functor",
    "groupoid_roundtrip_check",
    "make_groupoid_action",
    "right_regular",
    "spectral_projection",
    "takesaki_takai_check",
    "takesaki_takai_map",
]
