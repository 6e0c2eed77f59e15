"""Exceptions and warnings raised by crossmod.

Every validation failure derives from :class:`CrossmodError`, which is itself a
``ValueError``: code that only cares about "invalid input" can keep catching
``ValueError``. The witnesses that make a check fail are kept on the exception.
"""

from typing import Any, Tuple


class CrossmodError(ValueError):
    """Base class for every crossmod validation error.

    Attributes:
        witness (Tuple[Any, ...]): The offending elements, indices or pairs.

    """

    def __init__(self, message: str, witness: Tuple[Any, ...] = ()) -> None:
        """Initialize the error with a message and its witnesses.

        Args:
            message: Human readable description of the failure.
            witness: The offending elements, indices or pairs.

        """
        super().__init__(message)
        self.witness = tuple(witness)


# Group layer
class GroupError(CrossmodError):
    """Invalid group data."""


class NotAssociative(GroupError):
    """A multiplication table (or structure constants) is not associative."""


class NoIdentity(GroupError):
    """A multiplication table has no two-sided identity."""


class NoInverse(GroupError):
    """Some element has no two-sided inverse."""


class NotHomomorphism(GroupError):
    """A map between groups does not respect multiplication."""


class NotNormal(GroupError):
    """A subgroup is not normal where normality is required."""


class NotAction(GroupError):
    """A family of automorphisms is not a group action."""


class NotAbelian(GroupError):
    """A group is required to be Abelian but is not."""


class Mismatch(GroupError):
    """Two objects that must share a group (or algebra) do not."""


class NotSubgroup(GroupError):
    """A set of elements is not closed under multiplication."""


# Crossed module layer
class CrossedModuleError(CrossmodError):
    """Invalid crossed module data."""


class Peiffer1Violation(CrossedModuleError):
    """The identity ∂(c_g(h)) = g∂(h)g⁻¹ fails."""


class Peiffer2Violation(CrossedModuleError):
    """The identity c_{∂(h)}(k) = hkh⁻¹ fails."""


class BoundaryMismatch(CrossedModuleError):
    """A crossed module hom does not satisfy ∂₂∘ψ = φ∘∂₁."""


class EquivarianceMismatch(CrossedModuleError):
    """A crossed module hom does not intertwine the conjugation actions."""


class NotSurjective(CrossedModuleError):
    """The product G₁·∂(H) does not exhaust G."""


class NotInvariant(CrossedModuleError):
    """A subgroup of H is not invariant under the conjugation action."""


class NotInjectiveOnN(CrossedModuleError):
    """The boundary map is not injective on the given subgroup."""


class NotAbelianCM(CrossedModuleError):
    """A crossed module is required to be Abelian (G Abelian, c trivial)."""


class NotTwoAbelian(CrossedModuleError):
    """A crossed module is required to be 2-Abelian (c trivial)."""


class FunctorialityViolation(CrossedModuleError):
    """The multiplication functor does not respect composition."""


class NotExtension(CrossedModuleError):
    """One of the diagrams of a strict extension is not a group extension."""


# Algebra layer
class AlgebraError(CrossmodError):
    """Invalid *-algebra data."""


class BadInvolution(AlgebraError):
    """The involution is not an anti-multiplicative conjugate-linear involution."""


class NoUnit(AlgebraError):
    """The algebra has no two-sided unit."""


class NotCStar(AlgebraError):
    """The trace form is not positive definite."""


class NotIdeal(AlgebraError):
    """A subspace is not a *-closed two-sided ideal."""


class NonIntegerBlock(AlgebraError):
    """A Wedderburn block size is not an integer square root."""


class StarHomError(AlgebraError):
    """A linear map is not a unital *-homomorphism."""


class NotClosed(AlgebraError):
    """A family of matrices does not span a *-subalgebra."""


class NotCentral(AlgebraError):
    """An element expected to be central does not commute with the algebra."""


# Bundle layer
class BundleError(CrossmodError):
    """Invalid Fell bundle data."""


class GradingViolation(BundleError):
    """A product or involution leaves its prescribed fiber."""


class NotPositive(BundleError):
    """Some a*a is not positive in the unit fiber."""


class UnitFiberInvalid(BundleError):
    """The unit fiber is not a valid C*-algebra."""


class NotUnitary(BundleError):
    """A unitary of the crossed module structure is not unitary."""


class NotHom(BundleError):
    """The unitary family is not a group homomorphism."""


class EquivarianceViolation(BundleError):
    """The unitaries do not intertwine the grading (a·u_h ≠ u_{c_g(h)}·a)."""


class InnerMismatch(BundleError):
    """α_{∂(h)} differs from Ad(u_h)."""


class RepresentationError(BundleError):
    """A representation violates one of its defining conditions."""


class NoFactorization(BundleError):
    """A representation does not factor through the crossed product."""


class NotUnique(BundleError):
    """The factorization through the crossed product is not unique."""


# CLI layer
class ParseError(CrossmodError):
    """A descriptor file could not be parsed or does not match the schema."""


class ValidationError(CrossmodError):
    """A parsed descriptor describes invalid mathematical data."""


class CheckFailed(CrossmodError):
    """A verification check returned false."""


# Warnings
class DegenerateQuotientWarning(UserWarning):
    """A quotient algebra collapsed to dimension zero."""


class WedderburnRetryWarning(UserWarning):
    """A central element had a degenerate spectrum and was resampled."""
