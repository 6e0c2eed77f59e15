"""Data types shared across crossmod."""

from .algebra import DimensionVector, StarAlgebra, StarHom, Subspace, WedderburnDecomposition
from .bundle import FellBundle, FellBundleCM, Representation, StrictAction
from .crossed import (
    CrossedModule,
    CrossedModuleHom,
    EquivalenceCertificate,
    FiniteGroupoid,
    MultiplicationFunctor,
    Pi2Module,
)
from .duality import CentralStructure, GroupoidAction
from .extension import DecompositionReport, IntermediateAction, StepRecord, StrictExtension
from .group import AbelianDecomposition, CharacterGroup, FiniteGroup, GroupHom, Subgroup
from .run import COMMANDS, FORMATS, SUITES, CheckResult, CorpusInstance, Report, RunConfig

__all__ = [
    "AbelianDecomposition",
    "CentralStructure",
    "CharacterGroup",
    "COMMANDS",
    "CheckResult",
    "CorpusInstance",
    "CrossedModule",
    "CrossedModuleHom",
    "DecompositionReport",
    "DimensionVector",
    "EquivalenceCertificate",
    "FORMATS",
    "FellBundle",
    "FellBundleCM",
    "FiniteGroup",
    "FiniteGroupoid",
    "GroupHom",
    "GroupoidAction",
    "IntermediateAction",
    "MultiplicationFunctor",
    "Pi2Module",
    "Report",
    "Representation",
    "RunConfig",
    "SUITES",
    "StarAlgebra",
    "StarHom",
    "StepRecord",
    "StrictAction",
    "StrictExtension",
    "Subgroup",
    "Subspace",
    "WedderburnDecomposition",
]
