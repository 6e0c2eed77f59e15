"""The four-step factorization of A⋊C.

1. Divide A⋊(1, ker ∂) by the fibre ideal at the trivial character of ker ∂.
2. Take the partial crossed product by the thin part (∂H, H/ker ∂).
3. Push the resulting bundle down to L = G/∂H.
4. Take the crossed product by L and compare with A⋊C computed in one go.
"""

from typing import Dict, List, Optional

from crossmod.algebra import wedderburn
from crossmod.bundles import (
    cross_sectional,
    crossed_product,
    crossed_product_ideal,
    descend_bundle,
    semidirect_bundle,
)
from crossmod.config import resolve_tolerance, settings
from crossmod.decomposition.partial import (
    base_copy,
    partial_crossed,
    restrict_strict_action,
    transport_action,
)
from crossmod.duality import central_structure, crossed_product_via_fiber_check, fiber_at
from crossmod.errors import CrossmodError
from crossmod.modules import decompose, quotient_equivalence
from crossmod.types import DecompositionReport, StarAlgebra, StepRecord, StrictAction


def _record(
    name: str,
    algebra: StarAlgebra,
    tol: float,
    seed: int,
    ideal_dim: Optional[int] = None,
    checks: Optional[Dict[str, bool]] = None,
) -> StepRecord:
    vector = wedderburn(algebra, tol, seed).dimension_vector.to_list()
    return StepRecord(name, algebra.dim, vector, ideal_dim, dict(checks or {}))


def full_decomposition(
    act: StrictAction, tol: Optional[float] = None, seed: Optional[int] = None
) -> DecompositionReport:
    """Run the four-step factorization of A⋊C and compare with the direct computation.

    Failures inside a step do not raise; they end the run with a ``failed``
    record naming the error, and ``success`` is False.

    Args:
        act: A strict action of any crossed module.
        tol: Tolerance; defaults to the active setting.
        seed: Seed for every Wedderburn computation; defaults to the active setting.

    Returns:
        DecompositionReport: Per-step dimensions, dimension vectors and checks.

    """
    tol = resolve_tolerance(tol)
    seed = settings.seed if seed is None else seed
    steps: List[StepRecord] = []

    direct_cmb = semidirect_bundle(act, tol)
    direct, _ = crossed_product(direct_cmb, tol)
    direct_record = _record(
        "direct", direct, tol, seed, crossed_product_ideal(direct_cmb, tol).dim
    )

    try:
        parts = decompose(act.C)
        kernel_cmb = semidirect_bundle(restrict_strict_action(act, parts.first), tol)
        fibre_algebra, _ = crossed_product(kernel_cmb, tol)
        structure = central_structure(kernel_cmb, tol)
        fibre = fiber_at(structure, structure.characters.trivial, tol)
        fibre_record = _record(
            "fiber",
            fibre,
            tol,
            seed,
            crossed_product_ideal(kernel_cmb, tol).dim,
            {"ideal_is_fiber_ideal": crossed_product_via_fiber_check(kernel_cmb, tol)},
        )
        fibre_record.checks["fiber_is_crossed_product"] = (
            fibre_record.dimension_vector
            == wedderburn(fibre_algebra, tol, seed).dimension_vector.to_list()
        )
        steps.append(fibre_record)

        first = partial_crossed(act, parts.first, tol)
        over_c2 = transport_action(first.action, first.to_quotient, tol)
        thin = partial_crossed(over_c2, parts.second, tol)
        steps.append(
            _record(
                "thin",
                thin.base,
                tol,
                seed,
                checks={
                    "kernel_certificate": first.certificate.is_equivalence,
                    # step 2 acts on the fibre from step 1
                    "acts_on_fiber": wedderburn(first.base, tol, seed).dimension_vector.to_list()
                    == fibre_record.dimension_vector,
                    "thin_certificate": thin.certificate.is_equivalence,
                },
            )
        )

        thin_cmb = semidirect_bundle(thin.action, tol)
        before, _ = crossed_product(thin_cmb, tol)
        _, projection = quotient_equivalence(thin.Cmid, base_copy(thin, parts.second))
        descended = descend_bundle(thin_cmb, projection, tol=tol)
        sections, _ = cross_sectional(descended.bundle, tol)
        steps.append(
            _record(
                "descend",
                sections,
                tol,
                seed,
                checks={"over_cokernel": descended.C.G.order == parts.C4.G.order},
            )
        )

        final, _ = crossed_product(descended, tol)
        before_vector = wedderburn(before, tol, seed).dimension_vector.to_list()
        final_record = _record("final", final, tol, seed)
        final_record.checks["descent_preserves_crossed_product"] = (
            final_record.dimension_vector == before_vector
        )
        final_record.checks["matches_direct"] = (
            final_record.dimension_vector == direct_record.dimension_vector
        )
        steps.append(final_record)
    except CrossmodError as error:
        steps.append(
            StepRecord("failed", 0, [], checks={type(error).__name__: False})
        )
        return DecompositionReport(steps, direct_record, seed, False)

    success = all(all(step.checks.values()) for step in steps)
    return DecompositionReport(steps, direct_record, seed, success)
