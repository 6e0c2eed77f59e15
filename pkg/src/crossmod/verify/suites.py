"""The verification suites run by ``crossmod verify``."""

from typing import Any, Dict, List

import numpy as np

from crossmod.algebra import (
    check_cstar,
    group_algebra,
    wedderburn,
)
from crossmod.algebra.base import check_associative, check_involution
from crossmod.bundles import (
    brute_force_crossed_product,
    canonical_representation,
    conjugate_representation,
    cross_sectional,
    crossed_product,
    descend_bundle,
    restrict_bundle,
    semidirect_bundle,
    universal_factorization,
)
from crossmod.decomposition import full_decomposition, naturality_check, verify_partial_crossed
from crossmod.duality import (
    central_structure,
    crossed_product_via_fiber_check,
    duality_roundtrip_check,
    fiber_dimensions,
    forward_functor,
    groupoid_roundtrip_check,
    takesaki_takai_check,
    takesaki_takai_map,
)
from crossmod.errors import CrossmodError
from crossmod.groups import bidual_map, character_group, cyclic, direct_product, symmetric
from crossmod.modules import (
    enlarge_equivalence,
    identity_cm_hom,
    induced_pi_maps,
    quotient_equivalence,
    smallest_enlarging_subgroup,
    smallest_quotient_subgroup,
)
from crossmod.types import CheckResult, CorpusInstance, StarAlgebra, StrictAction
from crossmod.verify.base import BaseCheck

# Largest algebra the dual-of-dual round trip may build, |G|³·dim A.
MAX_ROUNDTRIP_DIM = 128


def _vector(algebra: StarAlgebra, tol: float, seed: int) -> List[int]:
    return wedderburn(algebra, tol, seed).dimension_vector.to_list()


class FiberCheck(BaseCheck):
    """A⋊C is the fibre at the trivial character of C[H] when c is trivial."""

    name = "fiber"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for 2-Abelian crossed modules."""
        return act.C.is_two_abelian

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Compare I_u with the fibre ideal and add up the fibre dimensions."""
        cmb = semidirect_bundle(act, self.tol)
        equal = crossed_product_via_fiber_check(cmb, self.tol)
        structure = central_structure(cmb, self.tol)
        dims = fiber_dimensions(structure, self.tol)
        total = sum(dims) == structure.algebra.dim
        return {
            "passed": equal and total,
            "ideal_equals_fiber_ideal": equal,
            "fiber_dimensions": dims,
            "fibers_add_up": total,
        }


class TorusCheck(BaseCheck):
    """The finite noncommutative torus of size n has crossed product M_n."""

    name = "torus"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for the finite torus family."""
        return instance.name.startswith("finite-torus-")

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Compare the crossed product with the brute-force quotient."""
        cmb = semidirect_bundle(act, self.tol)
        crossed, _ = crossed_product(cmb, self.tol)
        oracle, _ = brute_force_crossed_product(cmb, self.tol)
        computed = _vector(crossed, self.tol, self.seed)
        expected = _vector(oracle, self.tol, self.seed)
        return {
            "passed": computed == expected and len(computed) == 1,
            "dimension_vector": computed,
            "brute_force": expected,
        }


class TakesakiCheck(BaseCheck):
    """A⋊G⋊Ĝ ≅ A⊗M_|G| for the G-part of the action."""

    name = "takesaki"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True when G is Abelian."""
        return act.C.G.is_abelian

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Compare dimension vectors and build the explicit isomorphism."""
        same = takesaki_takai_check(act, self.tol)
        try:
            takesaki_takai_map(act, self.tol)
            explicit = True
        except CrossmodError:
            explicit = False
        return {"passed": same and explicit, "dimension_vectors_agree": same, "explicit_map": explicit}


class RoundtripCheck(BaseCheck):
    """The strict action comes back from its dual up to the right regular representation."""

    name = "roundtrip"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for Abelian crossed modules."""
        return act.C.is_abelian

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Run both round trips; the groupoid one only on small instances."""
        strict = duality_roundtrip_check(act, self.tol)
        details: Dict[str, Any] = {"strict_roundtrip": strict}
        if act.C.G.order**3 * act.A.dim <= MAX_ROUNDTRIP_DIM:
            groupoid = groupoid_roundtrip_check(forward_functor(act, self.tol), self.tol)
            details["groupoid_roundtrip"] = groupoid
        details["passed"] = strict and details.get("groupoid_roundtrip", True)
        return details


class PartialCheck(BaseCheck):
    """(A⋊C₁)⋊Cmid ≅ A⋊C₂ along the instance's strict extension."""

    name = "partial"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for instances that carry an extension."""
        return instance.extension is not None

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Verify the partial crossed product and, when possible, naturality."""
        assert instance.extension is not None
        ext = instance.extension(act)
        verified = verify_partial_crossed(act, ext, self.tol, self.seed)
        details: Dict[str, Any] = {"extension": ext.name, "isomorphic": verified}
        if instance.automorphism is not None:
            theta = act.alpha[instance.automorphism]
            details["natural"] = naturality_check(act, theta, ext, self.tol)
        details["passed"] = verified and details.get("natural", True)
        return details


class DecompositionCheck(BaseCheck):
    """The four-step factorization reproduces A⋊C."""

    name = "decomposition"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for every instance."""
        return True

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Run the pipeline and keep its report."""
        report = full_decomposition(act, self.tol, self.seed)
        return {"passed": report.success, **report.to_dict()}


class EquivalenceCheck(BaseCheck):
    """π₁, π₂ and crossed products survive the canonical equivalences."""

    name = "equivalence"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for every instance."""
        return True

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Descend along a quotient, restrict along an enlargement and compare."""
        C = act.C
        cmb = semidirect_bundle(act, self.tol)
        crossed, _ = crossed_product(cmb, self.tol)
        expected = _vector(crossed, self.tol, self.seed)
        details: Dict[str, Any] = {"dimension_vector": expected}

        details["identity_pi"] = induced_pi_maps(identity_cm_hom(C)).is_isomorphism

        # Without a non-trivial N the quotient leg is the identity.
        N = smallest_quotient_subgroup(C)
        details["N"] = [0] if N is None else N.elements.tolist()
        _, projection = quotient_equivalence(C, details["N"])
        details["quotient_pi"] = induced_pi_maps(projection).is_isomorphism
        descended, _ = crossed_product(descend_bundle(cmb, projection, tol=self.tol), self.tol)
        details["quotient_crossed_product"] = _vector(descended, self.tol, self.seed) == expected

        G1 = smallest_enlarging_subgroup(C)
        details["G1"] = list(range(C.G.order)) if G1 is None else G1.elements.tolist()
        _, inclusion = enlarge_equivalence(C, details["G1"])
        details["enlarge_pi"] = induced_pi_maps(inclusion).is_isomorphism
        restricted, _ = crossed_product(restrict_bundle(cmb, inclusion, self.tol), self.tol)
        details["enlarge_crossed_product"] = _vector(restricted, self.tol, self.seed) == expected

        details["passed"] = all(v for k, v in details.items() if isinstance(v, bool))
        return details


class UniversalCheck(BaseCheck):
    """Representations of the semidirect bundle factor uniquely through A⋊C."""

    name = "universal"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for every instance."""
        return True

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Factor the canonical representation and a conjugate of it by some δ_g."""
        cmb = semidirect_bundle(act, self.tol)
        rep, projection = canonical_representation(cmb, self.tol)
        crossed = (rep.target, projection)
        f = universal_factorization(cmb, rep, crossed, self.tol)
        identity = bool(np.allclose(f.matrix, np.eye(rep.target.dim), atol=1e-6))
        details: Dict[str, Any] = {"crossed_product_dim": rep.target.dim, "identity": identity}
        if rep.target.degenerate:
            details["passed"] = identity
            return details

        g = act.C.G.order - 1
        w = projection.matrix @ cmb.bundle.embed(g, act.A.unit)
        conjugated = conjugate_representation(rep, w, self.tol)
        f_conj = universal_factorization(cmb, conjugated, crossed, self.tol)
        ad = rep.target.left_matrix(w) @ rep.target.right_matrix(rep.target.adjoint(w))
        details["conjugated_by"] = g
        details["conjugate"] = bool(np.allclose(f_conj.matrix, ad, atol=1e-6))
        details["passed"] = identity and details["conjugate"]
        return details


class AlgebraCheck(BaseCheck):
    """Every algebra built for an instance satisfies the C*-algebra axioms."""

    name = "algebra"

    def applies(self, instance: CorpusInstance, act: StrictAction) -> bool:
        """Return True for every instance."""
        return True

    def run(self, instance: CorpusInstance, act: StrictAction) -> Dict[str, Any]:
        """Check associativity, the involution and the trace form."""
        cmb = semidirect_bundle(act, self.tol)
        sections, _ = cross_sectional(cmb.bundle, self.tol)
        crossed, _ = crossed_product(cmb, self.tol)
        for algebra in (act.A, sections, crossed):
            if algebra.degenerate:
                continue
            check_associative(algebra.mul, self.tol)
            check_involution(algebra.mul, algebra.star, self.tol)
            check_cstar(algebra, self.tol)
        return {"passed": True, "dims": [act.A.dim, sections.dim, crossed.dim]}


def library_self_checks(tol: float, seed: int) -> CheckResult:
    """Run the checks that do not depend on a corpus instance.

    C[S₃] splits as [1, 1, 2], and evaluation is an isomorphism onto the
    dual of the dual for every Abelian group of order at most 8.
    """
    details: Dict[str, Any] = {}
    try:
        details["group_algebra_s3"] = _vector(group_algebra(symmetric(3)), tol, seed)
        abelian = [cyclic(n) for n in range(1, 9)] + [
            direct_product(cyclic(2), cyclic(2)),
            direct_product(cyclic(2), cyclic(4)),
            direct_product(cyclic(2), cyclic(2), cyclic(2)),
        ]
        details["biduality"] = all(
            bidual_map(character_group(g))[0].is_isomorphism for g in abelian
        )
        passed = details["group_algebra_s3"] == [1, 1, 2] and details["biduality"]
    except CrossmodError as error:
        details.update(error=type(error).__name__, witness=list(error.witness))
        passed = False
    return CheckResult("algebra", "(library)", "passed" if passed else "failed", details)


SUITE_CLASSES = {
    cls.name: cls
    for cls in (
        FiberCheck,
        TorusCheck,
        TakesakiCheck,
        RoundtripCheck,
        PartialCheck,
        DecompositionCheck,
        EquivalenceCheck,
        UniversalCheck,
        AlgebraCheck,
    )
}
