"""Main package for crossmod."""

from .algebra import (
    complex_numbers,
    direct_sum,
    functions_on,
    group_algebra,
    make_algebra,
    make_star_hom,
    matrix_algebra,
    quotient_algebra,
    tensor,
    wedderburn,
)
from .bundles import (
    classical_crossed_product,
    cross_sectional,
    crossed_product,
    finite_torus_action,
    make_cm_bundle,
    make_fell_bundle,
    make_strict_action,
    semidirect_bundle,
)
from .config import Settings, settings, use_settings
from .corpus import bundled_corpus, get_instance
from .decomposition import full_decomposition, partial_crossed, verify_partial_crossed
from .duality import (
    central_structure,
    duality_roundtrip_check,
    fiber_at,
    takesaki_takai_check,
)
from .errors import CheckFailed, CrossmodError, ParseError, ValidationError
from .groups import (
    character_group,
    cyclic,
    direct_product,
    make_group,
    make_hom,
    semidirect_product,
    symmetric,
)
from .modules import (
    decompose,
    dual_crossed_module,
    example_extension,
    green_extension,
    make_crossed_module,
    make_strict_extension,
    pi1,
    pi2,
)
from .porters import BasePorter, JSONPorter
from .types import (
    CrossedModule,
    FellBundle,
    FellBundleCM,
    FiniteGroup,
    Report,
    RunConfig,
    StarAlgebra,
    StrictAction,
    StrictExtension,
)
from .utils import ReportPrinter, load_descriptor
from .verify import run_suite

__version__ = "0.1.0"
__name__ = "crossmod"

# Add basic package metadata to __all__
__all__ = [
    "__name__",
    "__version__",
]

# Add all data classes to __all__
__all__ += [
    "CrossedModule",
    "FellBundle",
    "FellBundleCM",
    "FiniteGroup",
    "Report",
    "RunConfig",
    "StarAlgebra",
    "StrictAction",
    "StrictExtension",
]

# Add configuration and errors to __all__
__all__ += [
    "CheckFailed",
    "CrossmodError",
    "ParseError",
    "Settings",
    "ValidationError",
    "settings",
    "use_settings",
]

# Add group and crossed module constructions to __all__
__all__ += [
    "character_group",
    "cyclic",
    "decompose",
    "direct_product",
    "dual_crossed_module",
    "example_extension",
    "green_extension",
    "make_crossed_module",
    "make_group",
    "make_hom",
    "make_strict_extension",
    "pi1",
    "pi2",
    "semidirect_product",
    "symmetric",
]

# Add algebra constructions to __all__
__all__ += [
    "complex_numbers",
    "direct_sum",
    "functions_on",
    "group_algebra",
    "make_algebra",
    "make_star_hom",
    "matrix_algebra",
    "quotient_algebra",
    "tensor",
    "wedderburn",
]

# Add bundles and crossed products to __all__
__all__ += [
    "classical_crossed_product",
    "cross_sectional",
    "crossed_product",
    "finite_torus_action",
    "make_cm_bundle",
    "make_fell_bundle",
    "make_strict_action",
    "semidirect_bundle",
]

# Add duality and decomposition to __all__
__all__ += [
    "central_structure",
    "duality_roundtrip_check",
    "fiber_at",
    "full_decomposition",
    "partial_crossed",
    "takesaki_takai_check",
    "verify_partial_crossed",
]

# Add corpus, verification, porters and utilities to __all__
__all__ += [
    "BasePorter",
    "JSONPorter",
    "ReportPrinter",
    "bundled_corpus",
    "get_instance",
    "load_descriptor",
    "run_suite",
]
