"""Exception hierarchy.

Every error the kernel raises derives from FglError so callers can catch the
whole family; the CLI maps subfamilies to exit codes (parse errors -> 2,
mathematical violations -> 1, truncation shortfalls -> 3).
"""


class FglError(Exception):
    """Base class for all kernel errors."""


class ParseError(FglError):
    """Malformed JSON document or inline expression."""


class SpecError(ParseError):
    """Algebra description violates its preconditions (e.g. a coproduct
    table that is not counital or not degree-homogeneous)."""


class DegreeOverflow(ParseError):
    """A required structure constant lives above the degree bound."""


class AlgebraMismatch(FglError):
    """Operands belong to different Hopf algebras."""


class ArityMismatch(FglError):
    """Tensor arity outside {1,2,3} or inconsistent between operands."""


class ShapeMismatch(FglError):
    """Series operands disagree in arity, variable count or variable names."""


class NonNilpotentConstantTerm(FglError):
    """Substitution target has a constant term with nonzero full counit,
    so the composition would not terminate."""


class NonInvertibleConstantTerm(FglError):
    """Multiplicative or compositional inverse requested where the relevant
    coefficient does not have full counit 1."""


class NonZeroConstantTerm(FglError):
    """Compositional inverse requested for a series with f(0) != 0."""


class TruncationInsufficient(FglError):
    """The inputs cannot certify an identity through the requested order."""

    def __init__(self, message, certified=None, requested=None):
        super().__init__(message)
        self.certified = certified
        self.requested = requested


class MathViolation(FglError):
    """Base class for violations of the mathematical contracts."""


class ResidualNonConstant(MathViolation):
    """Cocycle extraction found surviving nonconstant terms: the input is
    not a formal group law or the truncation is too coarse."""


class CocycleViolation(MathViolation):
    """A claimed 2-cocycle fails condition (i) or (ii)."""


class AxiomViolation(MathViolation):
    """A claimed formal group law fails unit, symmetry or associativity."""


class NoInverse(MathViolation):
    """The recursive solve for the inverse element is inconsistent."""


class NotAugmented(MathViolation):
    """Coboundary requested for an element with nonzero counit."""
