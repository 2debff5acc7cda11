"""Group-law layer: axiom verification, invariant differential and
logarithm, cocycle extraction, reconstruction, group inverse and the
classical specialization."""

import math

import pytest
from fractions import Fraction

from fglog import (
    HopfElement,
    Series,
    TensorElement,
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
from fglog.errors import (
    AxiomViolation,
    CocycleViolation,
    NoInverse,
    NonInvertibleConstantTerm,
    NotAugmented,
    ResidualNonConstant,
    TruncationInsufficient,
)

INF = math.inf
XY = ("X", "Y")


def t_elem(algebra):
    return HopfElement.generator(algebra, "t")


def two_t_t(algebra):
    t = t_elem(algebra)
    return TensorElement.from_slots(t, t) * 2


def log_x_plus_tx2(algebra):
    """g(x) = x + t x^2."""
    t = t_elem(algebra)
    return Series(algebra, 1, 1, {
        (1,): TensorElement.unit(algebra, 1),
        (2,): TensorElement.from_slots(t),
    })


# -- constructors --------------------------------------------------------------


class TestConstructors:
    def test_additive_law(self, qt1):
        F = additive_law(qt1)
        assert F.order == INF
        assert F.coeff((1, 0)) == TensorElement.unit(qt1, 2)
        assert F.coeff((0, 1)) == TensorElement.unit(qt1, 2)
        assert F.constant_term().is_zero()

    def test_lemma_law_constant(self, qt1):
        c = two_t_t(qt1)
        F = lemma_law(qt1, c)
        assert F.constant_term() == c
        assert F.coeff((1, 0)) == TensorElement.unit(qt1, 2)
        assert F.order == INF

    def test_lemma_law_truncated(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1), order=3)
        assert F.order == 3


# -- axiom verification --------------------------------------------------------


class TestCheckAxioms:
    def test_additive_passes_exactly(self, qt1):
        rep = check_axioms(additive_law(qt1))
        assert rep.passed
        assert rep.certified_order is None

    def test_lemma_law_valid_cocycle_passes(self, qt1):
        rep = check_axioms(lemma_law(qt1, two_t_t(qt1)))
        assert rep.passed

    def test_lemma_law_coboundary_cocycle_passes(self, qtu):
        t = HopfElement.generator(qtu, "t")
        u = HopfElement.generator(qtu, "u")
        c = coboundary(t * t + u * t)
        # symmetrize so the twisted symmetry axiom holds as well
        c = (c + c.permute((1, 0))) * Fraction(1, 2)
        rep = check_axioms(lemma_law(qtu, c))
        assert rep.passed

    def test_truncated_law_certifies_to_its_order(self, qt1):
        F = additive_law(qt1).truncate(5)
        rep = check_axioms(F)
        assert rep.passed
        assert rep.certified_order == 5

    def test_order_beyond_certification_raises(self, qt1):
        F = additive_law(qt1).truncate(5)
        with pytest.raises(TruncationInsufficient) as exc:
            check_axioms(F, order=9)
        assert exc.value.certified == 5
        assert exc.value.requested == 9

    def test_symmetry_violation_detected(self, qt1):
        t = t_elem(qt1)
        skew = TensorElement.from_slots(t).embed(2, (0,))
        F = additive_law(qt1) + Series(qt1, 2, 2, {(1, 1): skew}, INF, XY)
        rep = check_axioms(F)
        assert not rep.passed
        assert "symmetry" in {v.axiom for v in rep.violations}

    def test_unit_violation_detected(self, qt1):
        t = t_elem(qt1)
        left = TensorElement.from_slots(t).embed(2, (0,))
        right = TensorElement.from_slots(t).embed(2, (1,))
        F = additive_law(qt1) + Series(
            qt1, 2, 2, {(2, 0): left, (0, 2): right}, INF, XY)
        rep = check_axioms(F)
        assert not rep.passed
        hit = {v.axiom for v in rep.violations}
        assert "unit" in hit
        assert "symmetry" not in hit

    def test_bad_cocycle_lemma_law_fails_associativity(self, qt1):
        t = t_elem(qt1)
        c_bad = TensorElement.from_slots(t, t * t)
        rep = check_axioms(lemma_law(qt1, c_bad))
        assert not rep.passed
        assert "associativity" in {v.axiom for v in rep.violations}

    def test_defect_reports_carry_series(self, qt1):
        t = t_elem(qt1)
        c_bad = TensorElement.from_slots(t, t * t)
        rep = check_axioms(lemma_law(qt1, c_bad))
        assoc = [v for v in rep.violations if v.axiom == "associativity"]
        assert assoc and not assoc[0].defect.is_zero()


class TestDefects:
    def test_additive_defects_all_zero(self, qt1):
        F = additive_law(qt1)
        assert symmetry_defect(F).is_zero()
        assert associativity_defect(F).is_zero()
        left, right = unit_defects(F)
        assert left.is_zero() and right.is_zero()

    def test_lemma_assoc_defect_is_the_cobar_defect(self, qt1):
        """For F = c + X + Y the associativity defect is a constant equal
        to the cobar defect of c."""
        t = t_elem(qt1)
        c_bad = TensorElement.from_slots(t, t * t)
        d = associativity_defect(lemma_law(qt1, c_bad))
        const = d.constant_term()
        assert const == cocycle_defect(c_bad)
        expected = TensorElement.from_slots(t, t, t) * 2
        assert const == expected
        rest = d - Series.constant(const, 3, d.order, d.names)
        assert rest.is_zero()

    def test_unit_defect_picks_counit_projection(self, qt1):
        t = t_elem(qt1)
        left_coeff = TensorElement.from_slots(t).embed(2, (0,))
        F = additive_law(qt1) + Series(
            qt1, 2, 2, {(2, 0): left_coeff}, INF, XY)
        left, right = unit_defects(F)
        assert not left.is_zero()
        assert right.is_zero()
        assert left.coeff((2, 0)) == TensorElement.from_slots(t)


class TestStrictGrading:
    def test_lemma_law_weight(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1))
        base, offending = strict_grading_defect(F, 2)
        assert offending.is_zero()
        assert base == 2

    def test_wrong_weight_flags_terms(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1))
        _, offending = strict_grading_defect(F, 1)
        assert not offending.is_zero()

    def test_reconstructed_law_weight(self, qt1):
        F = reconstruct(qt1, TensorElement.zero(qt1, 2),
                        log_x_plus_tx2(qt1), 6)
        _, offending = strict_grading_defect(F, -1)
        assert offending.is_zero()

    def test_check_axioms_strict_grading_violation(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1))
        rep = check_axioms(F, strict_grading_weight=1)
        assert not rep.passed
        assert "strict-grading" in {v.axiom for v in rep.violations}

    def test_check_axioms_strict_grading_pass(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1))
        rep = check_axioms(F, strict_grading_weight=2)
        assert rep.passed


# -- invariant differential and logarithm ---------------------------------------


class TestLogarithm:
    def test_additive_differential_is_one(self, qt1):
        omega = invariant_differential(additive_law(qt1))
        assert omega.constant_term() == TensorElement.unit(qt1, 1)
        assert (omega - Series.constant(
            TensorElement.unit(qt1, 1), 1, omega.order, ("x",))).is_zero()

    def test_lemma_law_logarithm_is_x(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1))
        g = logarithm(F)
        x = Series.variable(qt1, 1, 1, 0, g.order, ("x",))
        assert (g - x).is_zero()

    def test_additive_logarithm_exact(self, qt1):
        g = logarithm(additive_law(qt1))
        assert g.order == INF
        x = Series.variable(qt1, 1, 1, 0, INF, ("x",))
        assert (g - x).is_zero()

    def test_reconstructed_law_logarithm_round_trip(self, qt1):
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, TensorElement.zero(qt1, 2), g, 6)
        back = logarithm(F, order=6)
        assert (back - g.truncate(6)).is_zero()

    def test_nonunit_linear_coefficient_rejected(self, qt1):
        F = additive_law(qt1) + Series.variable(qt1, 2, 2, 1, INF, XY)
        with pytest.raises(NonInvertibleConstantTerm):
            logarithm(F)

    def test_check_log_lemma_law(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1))
        x = Series.variable(qt1, 1, 1, 0, INF, ("x",))
        rep = check_log(F, x)
        assert rep.passed

    def test_check_log_reconstructed(self, qt1):
        # The invariance route differentiates, costing one order, so a law
        # certified through 7 supports the check through 6.
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, TensorElement.zero(qt1, 2), g, 7)
        rep = check_log(F, g.truncate(7), order=6)
        assert rep.passed
        assert rep.certified_order == 6

    def test_check_log_wrong_candidate_fails(self, qt1):
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, TensorElement.zero(qt1, 2), g, 6)
        x = Series.variable(qt1, 1, 1, 0, 6, ("x",))
        rep = check_log(F, x)
        assert not rep.passed
        hit = {v.axiom for v in rep.violations}
        assert hit <= {"log-functional", "log-invariance"}
        assert hit

    def test_check_log_order_too_high_raises(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1)).truncate(4)
        x = Series.variable(qt1, 1, 1, 0, 4, ("x",))
        with pytest.raises(TruncationInsufficient):
            check_log(F, x, order=10)


# -- cocycles -------------------------------------------------------------------


class TestCocycles:
    def test_valid_cocycle(self, qt1):
        assert cocycle_defect(two_t_t(qt1)).is_zero()
        assert check_cocycle(two_t_t(qt1)).passed

    def test_defect_oracle_t_tsq(self, qt1):
        t = t_elem(qt1)
        c = TensorElement.from_slots(t, t * t)
        assert cocycle_defect(c) == TensorElement.from_slots(t, t, t) * 2

    def test_defect_oracle_antisymmetric(self, qt1):
        t = t_elem(qt1)
        c = (TensorElement.from_slots(t * t, t)
             - TensorElement.from_slots(t, t * t))
        assert cocycle_defect(c) == TensorElement.from_slots(t, t, t) * (-4)

    def test_counit_condition(self, qt1):
        t = t_elem(qt1)
        c = TensorElement.from_slots(t, HopfElement.one(qt1))
        rep = check_cocycle(c)
        assert not rep.passed
        assert "counit" in {v.axiom for v in rep.violations}

    def test_coboundary_oracles(self, qt1):
        t = t_elem(qt1)
        assert coboundary(t * t) == two_t_t(qt1)
        expected = (TensorElement.from_slots(t * t, t) * 3
                    + TensorElement.from_slots(t, t * t) * 3)
        assert coboundary(t * t * t) == expected
        assert coboundary(t).is_zero()

    def test_coboundary_is_cocycle(self, qtu):
        t = HopfElement.generator(qtu, "t")
        u = HopfElement.generator(qtu, "u")
        h = t * t + u * 2 + t * u
        assert check_cocycle(coboundary(h)).passed

    def test_coboundary_needs_augmentation(self, qt1):
        t = t_elem(qt1)
        with pytest.raises(NotAugmented):
            coboundary(t + HopfElement.one(qt1))

    def test_extract_from_lemma_law(self, qt1):
        c = two_t_t(qt1)
        assert extract_cocycle(lemma_law(qt1, c)) == c

    def test_extract_with_explicit_logarithm(self, qt1):
        c = two_t_t(qt1)
        F = lemma_law(qt1, c)
        x = Series.variable(qt1, 1, 1, 0, INF, ("x",))
        assert extract_cocycle(F, g=x) == c

    def test_extract_from_reconstructed_law(self, qt1):
        c = two_t_t(qt1)
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, c, g, 4 + c.nilpotency_slack())
        assert extract_cocycle(F, order=4) == c

    def test_extract_zero_cocycle(self, qt1):
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, TensorElement.zero(qt1, 2), g, 6)
        assert extract_cocycle(F, order=6).is_zero()

    def test_extract_wrong_logarithm_nonconstant_residual(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1))
        with pytest.raises(ResidualNonConstant):
            extract_cocycle(F, g=log_x_plus_tx2(qt1))

    def test_extract_non_cocycle_constant_rejected(self, qt1):
        t = t_elem(qt1)
        F = lemma_law(qt1, TensorElement.from_slots(t, t * t))
        with pytest.raises(CocycleViolation):
            extract_cocycle(F)

    def test_extract_order_beyond_data(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1)).truncate(3)
        with pytest.raises(TruncationInsufficient):
            extract_cocycle(F, order=7)


# -- reconstruction -------------------------------------------------------------


class TestReconstruct:
    def test_order_two_coefficients(self, qt1):
        """Frozen low-order values for g = x + t x^2, c = 0."""
        t = t_elem(qt1)
        F = reconstruct(qt1, TensorElement.zero(qt1, 2),
                        log_x_plus_tx2(qt1), 2)
        one_t = TensorElement.from_slots(HopfElement.one(qt1), t)
        t_one = TensorElement.from_slots(t, HopfElement.one(qt1))
        assert F.coeff((1, 0)) == TensorElement.unit(qt1, 2)
        assert F.coeff((0, 1)) == TensorElement.unit(qt1, 2)
        assert F.coeff((2, 0)) == -one_t
        assert F.coeff((1, 1)) == (t_one + one_t) * (-2)
        assert F.coeff((0, 2)) == -t_one

    def test_zero_cocycle_identity_logarithm(self, qt1):
        """g = x, c = 0 gives back the additive law."""
        x = Series.variable(qt1, 1, 1, 0, INF, ("x",))
        F = reconstruct(qt1, TensorElement.zero(qt1, 2), x, 5)
        assert (F - additive_law(qt1, 5)).is_zero()

    def test_identity_logarithm_gives_lemma_law(self, qt1):
        c = two_t_t(qt1)
        x = Series.variable(qt1, 1, 1, 0, INF, ("x",))
        F = reconstruct(qt1, c, x, 6)
        assert (F - lemma_law(qt1, c, 6).truncate(6)).is_zero()

    def test_internal_gate_certifies_requested_order(self, qt1):
        """Success of reconstruct at order N is the order-N certification;
        the returned truncation cannot be re-verified externally past
        N - slack."""
        c = two_t_t(qt1)
        F = reconstruct(qt1, c, log_x_plus_tx2(qt1), 4)
        assert F.order == 4
        with pytest.raises(TruncationInsufficient):
            check_axioms(F, order=4)

    def test_elevated_reconstruction_verifies_externally(self, qt1):
        c = two_t_t(qt1)
        F = reconstruct(qt1, c, log_x_plus_tx2(qt1),
                        4 + c.nilpotency_slack())
        rep = check_axioms(F, order=4)
        assert rep.passed
        assert rep.certified_order == 4

    def test_mixed_law_logarithm_round_trip(self, qt1):
        c = two_t_t(qt1)
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, c, g, 4 + c.nilpotency_slack())
        back = logarithm(F, order=4)
        assert (back - g.truncate(4)).is_zero()

    def test_non_cocycle_rejected(self, qt1):
        # t^2 x t^2 is symmetric but not a cocycle, so the internal gate
        # trips on associativity.
        t = t_elem(qt1)
        bad = TensorElement.from_slots(t * t, t * t)
        assert not check_cocycle(bad).passed
        with pytest.raises(AxiomViolation) as exc:
            reconstruct(qt1, bad, log_x_plus_tx2(qt1), 4)
        assert "associativity" in str(exc.value)

    def test_asymmetric_constant_rejected(self, qt1):
        t = t_elem(qt1)
        bad = TensorElement.from_slots(t, t * t)
        with pytest.raises(AxiomViolation) as exc:
            reconstruct(qt1, bad, log_x_plus_tx2(qt1), 4)
        assert "symmetry" in str(exc.value)

    def test_logarithm_not_normalized_rejected(self, qt1):
        x2 = Series.variable(qt1, 1, 1, 0, INF, ("x",)) * 2
        with pytest.raises(NoInverse):
            reconstruct(qt1, TensorElement.zero(qt1, 2), x2, 4)

    def test_logarithm_with_constant_rejected(self, qt1):
        t = t_elem(qt1)
        g = log_x_plus_tx2(qt1) + Series.constant(
            TensorElement.from_slots(t), 1, INF, ("x",))
        with pytest.raises(NoInverse):
            reconstruct(qt1, TensorElement.zero(qt1, 2), g, 4)

    def test_short_logarithm_rejected(self, qt1):
        c = two_t_t(qt1)
        g = log_x_plus_tx2(qt1).truncate(3)
        with pytest.raises(TruncationInsufficient):
            reconstruct(qt1, c, g, 4)

    def test_two_generator_algebra(self, qtu):
        t = HopfElement.generator(qtu, "t")
        u = HopfElement.generator(qtu, "u")
        c = TensorElement.from_slots(t, u) + TensorElement.from_slots(u, t)
        assert check_cocycle(c).passed
        x = Series.variable(qtu, 1, 1, 0, INF, ("x",))
        F = reconstruct(qtu, c, x, 4)
        assert (F - lemma_law(qtu, c, 4).truncate(4)).is_zero()


# -- group inverse ---------------------------------------------------------------


class TestInverseSeries:
    def test_additive_needs_explicit_order(self, qt1):
        with pytest.raises(ValueError):
            inverse_series(additive_law(qt1))

    def test_additive_inverse_is_negation(self, qt1):
        iota = inverse_series(additive_law(qt1), order=6)
        x = Series.variable(qt1, 1, 1, 0, iota.order, ("x",))
        assert (iota + x).is_zero()
        assert iota.order == INF

    def test_lemma_law_inverse_oracle(self, qt1):
        """iota = 2 t^2 - x for F = 2(t x t) + X + Y."""
        t = t_elem(qt1)
        iota = inverse_series(lemma_law(qt1, two_t_t(qt1)), order=5)
        assert iota.order == INF
        assert iota.constant_term() == TensorElement.from_slots(t * t) * 2
        assert iota.coeff((1,)) == -TensorElement.unit(qt1, 1)
        assert not any(sum(e) > 1 for e, _ in iota.sorted_terms())

    def test_reconstructed_law_inverse(self, qt1):
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, TensorElement.zero(qt1, 2), g, 6)
        iota = inverse_series(F)
        x = Series.variable(qt1, 1, 1, 0, iota.order, ("x",))
        assert (iota + x).is_zero()
        assert iota.order == 6

    def test_inverse_satisfies_fold_identity(self, qt1):
        """mu(id x S) F(x, iota(x)) = 0 through the certified order."""
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, TensorElement.zero(qt1, 2), g, 6)
        iota = inverse_series(F)
        folded = F.map_coefficients(
            lambda A: A.apply_slot(1, "antipode").contract_mul((0, 1)),
            arity=1)
        xv = Series.variable(qt1, 1, 1, 0, 6, ("x",))
        residual = folded.substitute([xv, iota])
        assert residual.truncate(iota.order).is_zero()

    def test_order_beyond_law_raises(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1)).truncate(3)
        with pytest.raises(TruncationInsufficient):
            inverse_series(F, order=5)


# -- classical specialization ----------------------------------------------------


class TestSpecialize:
    def test_lemma_law_collapses_to_additive(self, qt1):
        F = lemma_law(qt1, two_t_t(qt1))
        S = specialize(F)
        assert (S - additive_law(qt1)).is_zero()

    def test_rational_series_unchanged(self, qt1):
        x = Series.variable(qt1, 1, 1, 0, INF, ("x",))
        g = x + x * x * Fraction(1, 3)
        assert (specialize(g) - g).is_zero()

    def test_specialized_coefficients_are_scalar(self, qt1):
        g = log_x_plus_tx2(qt1)
        F = reconstruct(qt1, TensorElement.zero(qt1, 2), g, 4)
        S = specialize(F)
        unit = TensorElement.unit(qt1, 2)
        for _, coeff in S.sorted_terms():
            assert coeff == unit * coeff.full_counit()
