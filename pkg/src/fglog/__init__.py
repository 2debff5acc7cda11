"""Exact-arithmetic kernel for formal group laws over graded connected
Hopf algebras: axiom verification, invariant differential and logarithm,
cobar 2-cocycle extraction and the reconstruction of the group law from
its cocycle."""

from .errors import (
    AlgebraMismatch,
    ArityMismatch,
    AxiomViolation,
    CocycleViolation,
    DegreeOverflow,
    FglError,
    MathViolation,
    NoInverse,
    NonInvertibleConstantTerm,
    NonNilpotentConstantTerm,
    NonZeroConstantTerm,
    NotAugmented,
    ParseError,
    ResidualNonConstant,
    ShapeMismatch,
    SpecError,
    TruncationInsufficient,
)
from .hopf import (
    BUILTIN_ALGEBRAS,
    HopfAlgebra,
    HopfElement,
    TensorElement,
    algebra_description,
    antipode,
    apply_slot,
    build_hopf_algebra,
    builtin_algebra,
    comul,
    contract_mul,
    counit,
    embed,
    mul,
    tensor_mul,
    verify_hopf_axioms,
)
from .fgl import (
    additive_law,
    associativity_defect,
    check_axioms,
    check_cocycle,
    check_log,
    coboundary,
    cocycle_defect,
    extract_cocycle,
    invariant_differential,
    inverse_series,
    lemma_law,
    logarithm,
    reconstruct,
    specialize,
    strict_grading_defect,
    symmetry_defect,
    unit_defects,
)
from .report import Report, StageReport, Violation
from .scalars import HAVE_GMPY2, Q, format_rational, parse_rational, rational
from .series import (
    INF,
    Series,
    comp_inverse,
    derivative,
    integrate,
    map_coefficients,
    mul_inverse,
    series_add,
    series_mul,
    substitute,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
