"""Series engine: ring laws, certified-order bookkeeping, calculus,
substitution with nilpotent constants, both inverses."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fglog import (
    HopfElement,
    NonInvertibleConstantTerm,
    NonNilpotentConstantTerm,
    NonZeroConstantTerm,
    Series,
    ShapeMismatch,
    TensorElement,
    TruncationInsufficient,
)
from fglog.scalars import Q

INF = math.inf


def unit_series(H, arity=1, nvars=1, order=INF):
    return Series.constant(TensorElement.unit(H, arity), nvars, order)


def var(H, arity=1, nvars=1, idx=0, order=INF):
    return Series.variable(H, arity, nvars, idx, order)


class TestRingBasics:
    def test_add_sub(self, qt1):
        x = var(qt1, order=8)
        assert (x + x - x) == x
        assert (x - x).is_zero()

    def test_mul_matches_pow(self, qt1):
        x = var(qt1, order=8)
        t = HopfElement.generator(qt1, "t")
        f = x + Series.constant(TensorElement.from_slots(t), 1, 8) * x * x
        assert f * f == f ** 2

    def test_scalar_scaling(self, qt1):
        x = var(qt1)
        assert 2 * x == x + x
        assert (Q(1, 3) * x) * 3 == x

    def test_coeff_lookup(self, qt1):
        x = var(qt1, order=5)
        f = x ** 2 * 3
        assert f.coeff((2,)) == TensorElement.unit(qt1, 1) * 3
        assert f.coeff((1,)).is_zero()

    def test_two_variable_product(self, qt1):
        X = var(qt1, 2, 2, 0, order=4)
        Y = var(qt1, 2, 2, 1, order=4)
        F = (X + Y) * (X - Y)
        assert F == X ** 2 - Y ** 2

    def test_shape_mismatch(self, qt1):
        with pytest.raises(ShapeMismatch):
            var(qt1, 1, 1, 0) + var(qt1, 1, 2, 0)


class TestOrderBookkeeping:
    def test_add_takes_min_order(self, qt1):
        a = var(qt1, order=5)
        b = var(qt1, order=3)
        assert (a + b).order == 3

    def test_mul_uses_valuations(self, qt1):
        # x certified to 4: x*x is certified to min(4+1, 4+1) = 5, and a
        # further factor certified to 3 with valuation 1 gives
        # min(5+1, 3+2) = 5
        x4 = var(qt1, order=4)
        x3 = var(qt1, order=3)
        f = x4 * x4
        g = x3
        assert f.order == 5 and g.order == 3
        assert (f * g).order == 5

    def test_polynomials_stay_exact(self, qt1):
        x = var(qt1)
        f = (1 + x) ** 3
        assert f.order == INF

    def test_truncate_drops_and_stamps(self, qt1):
        x = var(qt1)
        f = (unit_series(qt1) + x) ** 4
        g = f.truncate(2)
        assert g.order == 2
        assert g.max_degree() <= 2

    def test_derivative_and_integral_shift_order(self, qt1):
        # x certified to 6, so x^3 is certified to 8 by the valuation rule
        x = var(qt1, order=6)
        f = x ** 3
        assert f.order == 8
        assert f.derivative().order == 7
        assert f.integrate().order == 9

    def test_constructor_drops_uncertified_terms(self, qt1):
        u = TensorElement.unit(qt1, 1)
        s = Series(qt1, 1, 1, {(1,): u, (5,): u}, order=3)
        assert (5,) not in s.terms and (1,) in s.terms


class TestCalculus:
    def test_derivative_product_rule(self, qt1):
        x = var(qt1, order=7)
        t = Series.constant(
            TensorElement.from_slots(HopfElement.generator(qt1, "t")), 1, 7)
        f = x + t * x ** 2
        g = x ** 2 - t * x
        lhs = (f * g).derivative()
        rhs = f.derivative() * g + f * g.derivative()
        assert lhs.same_through(rhs)

    def test_integrate_then_differentiate(self, qt1):
        x = var(qt1, order=6)
        f = (unit_series(qt1, order=6) + x) ** 2
        assert f.integrate().derivative().same_through(f)

    def test_partial_derivative_two_vars(self, qt1):
        X = var(qt1, 1, 2, 0)
        Y = var(qt1, 1, 2, 1)
        F = X ** 2 * Y + Y ** 3
        dY = F.derivative(1)
        assert dY == X ** 2 + 3 * Y ** 2


class TestSubstitution:
    def test_nilpotent_constant_assignment(self, qt1):
        t = HopfElement.generator(qt1, "t")
        x = var(qt1, 2, 1, 0)
        f = x + x ** 2
        kappa = Series.constant(TensorElement.from_slots(t, t) * 2, 1)
        out = f.substitute([kappa])
        expected = (TensorElement.from_slots(t, t) * 2
                    + TensorElement.from_slots(t ** 2, t ** 2) * 4)
        assert out.constant_term() == expected

    def test_rejects_non_nilpotent_constant(self, qt1):
        x = var(qt1, 1, 1, 0)
        f = x + x ** 2
        one = unit_series(qt1)
        with pytest.raises(NonNilpotentConstantTerm):
            f.substitute([one])

    def test_slack_lowers_certified_order(self, qt1):
        t = HopfElement.generator(qt1, "t")
        u = TensorElement.unit(qt1, 1)
        f = Series(qt1, 1, 1, {(2,): u}, order=6)
        shifted = (var(qt1, 1, 1, 0)
                   + Series.constant(TensorElement.from_slots(t), 1))
        out = f.substitute([shifted])
        # slack of the constant t is 8, so certification drops to 6 - 8
        assert out.order == -2

    def test_polynomial_substitution_stays_exact(self, qt1):
        t = HopfElement.generator(qt1, "t")
        x = var(qt1, 1, 1, 0)
        f = x ** 2 + x
        shifted = x + Series.constant(TensorElement.from_slots(t), 1)
        out = f.substitute([shifted])
        assert out.order == INF
        direct = shifted ** 2 + shifted
        assert out == direct

    def test_two_into_one_collapse(self, qt1):
        X = var(qt1, 1, 2, 0)
        Y = var(qt1, 1, 2, 1)
        F = X + Y + X * Y
        x = var(qt1, 1, 1, 0)
        out = F.substitute([x, x])
        assert out == 2 * x + x ** 2

    def test_order_propagates_from_assignment(self, qt1):
        x = var(qt1, 1, 1, 0)
        f = x ** 3 + x
        g = var(qt1, 1, 1, 0, order=4) * 2
        assert f.substitute([g]).order == 4

    def test_unused_variable_ignored(self, qt1):
        X = var(qt1, 1, 2, 0)
        Y = var(qt1, 1, 2, 1)
        F = X ** 2  # Y absent
        # assignment for Y has low order; it must not hurt certification
        a = var(qt1, 1, 1, 0)
        b = var(qt1, 1, 1, 0, order=1)
        out = F.substitute([a, b])
        assert out.order == INF


class TestMulInverse:
    def test_geometric(self, qt1):
        t = Series.constant(
            TensorElement.from_slots(HopfElement.generator(qt1, "t")), 1, 8)
        x = var(qt1, order=8)
        f = unit_series(qt1, order=8) + t * x
        g = f.mul_inverse()
        assert (f * g).same_through(unit_series(qt1, order=8))
        assert g.coeff((3,)) == TensorElement.from_slots(
            -(HopfElement.generator(qt1, "t") ** 3))

    def test_rational_series(self, qt1):
        x = var(qt1, order=6)
        f = unit_series(qt1, order=6) - x
        g = f.mul_inverse()
        u = TensorElement.unit(qt1, 1)
        for k in range(7):
            assert g.coeff((k,)) == u

    def test_needs_unit_constant(self, qt1):
        x = var(qt1, order=4)
        with pytest.raises(NonInvertibleConstantTerm):
            (2 * unit_series(qt1, order=4) + x).mul_inverse()
        with pytest.raises(NonInvertibleConstantTerm):
            x.mul_inverse()

    def test_exhaustive_polynomial_inverse(self, qt1):
        # 1 + t x is a complete polynomial with counit-zero positive part;
        # its inverse terminates by degree exhaustion and is again exact.
        t = Series.constant(
            TensorElement.from_slots(HopfElement.generator(qt1, "t")), 1)
        f = unit_series(qt1) + t * var(qt1)
        g = f.mul_inverse()
        assert g.order == INF
        assert (f * g) == unit_series(qt1)

    def test_infinite_inverse_requires_order(self, qt1):
        f = unit_series(qt1) - var(qt1)
        with pytest.raises(ValueError):
            f.mul_inverse()
        assert f.mul_inverse(order=5).order == 5

    def test_order_beyond_certification_raises(self, qt1):
        f = unit_series(qt1, order=4) - var(qt1, order=4)
        with pytest.raises(TruncationInsufficient):
            f.mul_inverse(order=9)

    def test_multivariate_inverse(self, qt1):
        X = var(qt1, 1, 2, 0, order=4)
        Y = var(qt1, 1, 2, 1, order=4)
        one = Series.constant(TensorElement.unit(qt1, 1), 2, 4)
        f = one + X + Y
        g = f.mul_inverse()
        assert (f * g).same_through(one)


class TestCompInverse:
    def test_catalan_pattern(self, qt1):
        x = var(qt1)
        f = x + x ** 2
        h = f.comp_inverse(order=6)
        u = TensorElement.unit(qt1, 1)
        expect = {1: 1, 2: -1, 3: 2, 4: -5, 5: 14, 6: -42}
        for k, q in expect.items():
            assert h.coeff((k,)) == u * Q(q)

    def test_round_trip_both_directions(self, qt1):
        t = Series.constant(
            TensorElement.from_slots(HopfElement.generator(qt1, "t")), 1, 8)
        x = var(qt1, order=8)
        f = x + t * x ** 2 + t * t * x ** 3
        h = f.comp_inverse()
        assert f.substitute([h]).same_through(x)
        assert h.substitute([f]).same_through(x)

    def test_requires_zero_constant(self, qt1):
        f = unit_series(qt1) + var(qt1)
        with pytest.raises(NonZeroConstantTerm):
            f.comp_inverse(order=4)

    def test_requires_unit_linear_coefficient(self, qt1):
        f = 2 * var(qt1)
        with pytest.raises(NonInvertibleConstantTerm):
            f.comp_inverse(order=4)

    def test_polynomial_needs_explicit_order(self, qt1):
        f = var(qt1) + var(qt1) ** 2
        with pytest.raises(ValueError):
            f.comp_inverse()

    def test_order_beyond_certification_raises(self, qt1):
        f = var(qt1, order=3)
        with pytest.raises(TruncationInsufficient):
            f.comp_inverse(order=5)


class TestCoefficientMaps:
    def test_comul_lift(self, qt1):
        t = HopfElement.generator(qt1, "t")
        f = Series.constant(TensorElement.from_slots(t), 1) + var(qt1)
        lifted = f.map_coefficients(lambda c: c.apply_slot(0, "comul"))
        assert lifted.arity == 2
        assert lifted.constant_term() == t.comul()

    def test_counit_lift_keeps_shape(self, qt1):
        t = HopfElement.generator(qt1, "t")
        f = (Series.constant(TensorElement.from_slots(t, t), 1)
             + var(qt1, 2) * 3)
        out = f.map_coefficients(lambda c: c.apply_slot(1, "counit"))
        assert out.arity == 1
        assert out.constant_term().is_zero()
        assert out.coeff((1,)) == TensorElement.unit(qt1, 1) * 3

    def test_empty_result_keeps_declared_arity(self, qt1):
        t = HopfElement.generator(qt1, "t")
        f = Series.constant(TensorElement.from_slots(t, t), 1)
        out = f.map_coefficients(lambda c: c.apply_slot(0, "counit"), arity=1)
        assert out.is_zero() and out.arity == 1


class TestVariablePlumbing:
    def test_embed_vars(self, qt1):
        x = var(qt1, 1, 1, 0)
        f = x ** 2
        g = f.embed_vars(3, (1,))
        assert g.nvars == 3
        assert g.coeff((0, 2, 0)) == TensorElement.unit(qt1, 1)

    def test_set_variable_zero(self, qt1):
        X = var(qt1, 1, 2, 0)
        Y = var(qt1, 1, 2, 1)
        F = X + Y + X * Y
        assert F.set_variable_zero(1) == X
        reduced = F.set_variable_zero(1).drop_variable(1).rename(("x",))
        assert reduced == var(qt1, 1, 1, 0)

    def test_permute_vars(self, qt1):
        X = var(qt1, 1, 2, 0)
        Y = var(qt1, 1, 2, 1)
        F = X + 2 * Y
        G = F.permute_vars((1, 0))
        assert G.coeff((1, 0)) == TensorElement.unit(qt1, 1) * 2


@st.composite
def small_series(draw, algebra, order=5):
    """Random arity-1 series over qt1 with small integer coefficients."""
    t = HopfElement.generator(algebra, "t")
    basis = [HopfElement.one(algebra), t, t ** 2]
    terms = {}
    for deg in range(order + 1):
        coeffs = draw(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
        el = HopfElement.zero(algebra)
        for q, b in zip(coeffs, basis):
            el = el + q * b
        if not el.is_zero():
            terms[(deg,)] = TensorElement.from_slots(el)
    return Series(algebra, 1, 1, terms, order)


class TestPropertyRingLaws:
    @given(st.data())
    def test_mul_commutes_and_associates(self, qt1, data):
        f = data.draw(small_series(qt1))
        g = data.draw(small_series(qt1))
        h = data.draw(small_series(qt1))
        assert (f * g).same_through(g * f)
        assert ((f * g) * h).same_through(f * (g * h))

    @given(st.data())
    def test_distributivity(self, qt1, data):
        f = data.draw(small_series(qt1))
        g = data.draw(small_series(qt1))
        h = data.draw(small_series(qt1))
        assert (f * (g + h)).same_through(f * g + f * h)

    @given(st.data())
    def test_leibniz(self, qt1, data):
        f = data.draw(small_series(qt1))
        g = data.draw(small_series(qt1))
        lhs = (f * g).derivative()
        rhs = f.derivative() * g + f * g.derivative()
        assert lhs.same_through(rhs)

    @given(st.data())
    def test_inverse_round_trip(self, qt1, data):
        f = data.draw(small_series(qt1))
        one = TensorElement.unit(qt1, 1)
        f = f + Series.constant(one - f.constant_term(), 1, f.order)
        g = f.mul_inverse()
        assert (f * g).same_through(Series.constant(one, 1, f.order))
