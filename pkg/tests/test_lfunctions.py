from fractions import Fraction

import pytest

from eulerlp import (
    PadicContext,
    TruncationPlan,
    euler_number,
    euler_polynomial_value,
    generalized_euler_number,
    interpolation_check,
    kummer_check,
    l_at_negative_int,
    legendre_like,
    padic_l,
    padic_partial_zeta,
    padic_partial_zeta_at_neg,
    series_closed_check,
    teichmuller_power,
    trivial_character,
)


class TestTruncationPlan:
    def test_default_cutoff_is_target(self):
        assert TruncationPlan(4).series_cutoff == 4

    def test_rejects_short_cutoff(self):
        with pytest.raises(ValueError):
            TruncationPlan(4, 3)
        with pytest.raises(ValueError):
            TruncationPlan(0)


class TestGeneralizedEulerNumbers:
    def test_trivial_character_recovers_euler_numbers(self):
        ctx = PadicContext(3, 6)
        chi = trivial_character(ctx)
        for n in range(9):
            assert generalized_euler_number(n, chi, ctx) == ctx.from_rational(
                euler_number(n)
            )

    def test_conductor_one_teichmuller_power_agrees(self):
        ctx = PadicContext(5, 4)
        chi = teichmuller_power(4, ctx)  # exponent reduces to 0
        for n in range(6):
            assert generalized_euler_number(n, chi, ctx) == ctx.from_rational(
                euler_number(n)
            )

    def test_w1_at_three(self):
        ctx = PadicContext(3, 6)
        chi = teichmuller_power(1, ctx)
        assert generalized_euler_number(0, chi, ctx) == ctx.from_int(-2)
        assert generalized_euler_number(1, chi, ctx).is_zero

    def test_legendre_matches_exact_rational_sum(self):
        # +-1 valued characters admit a purely rational evaluation
        ctx = PadicContext(7, 5)
        f = 3
        chi = legendre_like(f, ctx)
        signs = {1: 1, 2: -1}
        for n in range(7):
            exact = Fraction(f) ** n * sum(
                signs[a] * (-1) ** a * euler_polynomial_value(n, Fraction(a, f))
                for a in (1, 2)
            )
            assert generalized_euler_number(n, chi, ctx) == ctx.from_rational(exact)

    def test_l_at_negative_int(self):
        ctx = PadicContext(3, 6)
        triv = trivial_character(ctx)
        assert l_at_negative_int(1, triv, ctx) == ctx.from_rational(Fraction(-1, 2))
        assert l_at_negative_int(2, triv, ctx).is_zero
        assert l_at_negative_int(1, teichmuller_power(1, ctx), ctx).is_zero
        with pytest.raises(ValueError):
            l_at_negative_int(0, triv, ctx)


class TestPartialZetaSeries:
    def test_s_zero_collapses_to_first_term(self):
        # C(0, j) = 0 for j >= 1, so only (-1)^a / 2 survives
        for p in (3, 5):
            ctx = PadicContext(p, 6)
            plan = TruncationPlan(6)
            for a in range(1, p):
                expected = ctx.from_rational(Fraction((-1) ** a, 2))
                assert padic_partial_zeta(0, a, p, ctx, plan) == expected.reduce(6)

    def test_negative_s_example(self):
        ctx = PadicContext(5, 2)
        value = padic_partial_zeta(-1, 1, 5, ctx, TruncationPlan(2))
        assert value.residue == 7  # 3/4 embedded in Z_5

    def test_positive_s_example(self):
        ctx = PadicContext(3, 2)
        assert padic_partial_zeta(1, 1, 3, ctx, TruncationPlan(2)).residue == 1
        assert padic_partial_zeta(1, 2, 3, ctx, TruncationPlan(2)).residue == 8

    def test_frozen_positive_s_values_mod_nine(self):
        ctx = PadicContext(3, 2)
        plan = TruncationPlan(2)
        assert padic_partial_zeta(2, 1, 3, ctx, plan).residue == 7
        assert padic_partial_zeta(2, 2, 3, ctx, plan).residue == 2

    def test_guards(self):
        ctx = PadicContext(3, 4)
        plan = TruncationPlan(3)
        with pytest.raises(ValueError):
            padic_partial_zeta(1, 1, 5, ctx, plan)  # p does not divide modulus
        with pytest.raises(ValueError):
            padic_partial_zeta(1, 1, 6, ctx, plan)  # even modulus
        with pytest.raises(ValueError):
            padic_partial_zeta(1, 3, 9, ctx, plan)  # a not a unit
        with pytest.raises(ValueError):
            padic_partial_zeta(1, 4, 3, ctx, plan)  # a out of range
        with pytest.raises(ValueError):
            padic_partial_zeta(1, 1, 3, ctx, TruncationPlan(9))  # beyond context


class TestPartialZetaClosedForm:
    def test_examples(self):
        ctx = PadicContext(3, 6)
        quarter = ctx.from_rational(Fraction(1, 4))
        assert padic_partial_zeta_at_neg(1, 1, 3, ctx) == quarter
        assert padic_partial_zeta_at_neg(1, 2, 3, ctx) == -quarter
        assert padic_partial_zeta_at_neg(2, 1, 3, ctx) == ctx.one()

    def test_series_agrees_with_closed_form(self):
        for p in (3, 5, 7):
            ctx = PadicContext(p, 6)
            for n in range(1, 9):
                for a in range(1, p):
                    report = series_closed_check(n, a, ctx, 6)
                    assert report.match, (p, n, a)

    def test_agreement_at_lower_precisions(self):
        ctx = PadicContext(5, 6)
        for digits in (1, 2, 3, 4, 5):
            for a in (1, 2, 3, 4):
                assert series_closed_check(3, a, ctx, digits).match

    def test_composite_odd_multiple_of_p(self):
        # F = 3p exercises the general modulus path of the series
        ctx = PadicContext(5, 6)
        plan = TruncationPlan(6, 12)
        for n in (1, 2, 3):
            for a in (1, 2, 4, 7, 8, 11, 13, 14):
                series = padic_partial_zeta(-n, a, 15, ctx, plan)
                closed = padic_partial_zeta_at_neg(n, a, 15, ctx)
                assert series == closed.reduce(6)


class TestPadicL:
    def test_value_at_minus_one(self):
        ctx = PadicContext(3, 6)
        value = padic_l(-1, teichmuller_power(1, ctx), ctx, TruncationPlan(6))
        assert value == ctx.one()  # equals (1 - 3) E_1 exactly

    def test_positive_argument_example(self):
        ctx = PadicContext(3, 2)
        value = padic_l(1, teichmuller_power(1, ctx), ctx, TruncationPlan(2))
        assert value.residue == 4

    def test_trivial_character_example(self):
        ctx = PadicContext(3, 2)
        value = padic_l(2, teichmuller_power(0, ctx), ctx, TruncationPlan(2))
        assert value.is_zero

    def test_conductor_one_modulus_one_agree(self):
        ctx = PadicContext(5, 4)
        plan = TruncationPlan(4)
        for s in (-3, -1, 0, 2, 5):
            a = padic_l(s, trivial_character(ctx), ctx, plan)
            b = padic_l(s, teichmuller_power(0, ctx), ctx, plan)
            assert a == b

    def test_values_lie_in_zp(self):
        for p in (3, 5, 7):
            ctx = PadicContext(p, 5)
            plan = TruncationPlan(5)
            for t in range(p - 1):
                chi = teichmuller_power(t, ctx)
                for s in range(-4, 5):
                    assert padic_l(s, chi, ctx, plan).valuation >= 0

    def test_truncation_soundness(self):
        # a larger cutoff never changes the reported residue
        for p in (3, 5):
            ctx = PadicContext(p, 5)
            chi = teichmuller_power(1, ctx)
            for s in (-4, -1, 1, 3, 6):
                tight = padic_l(s, chi, ctx, TruncationPlan(5))
                wide = padic_l(s, chi, ctx, TruncationPlan(5, 9))
                assert tight == wide

    def test_character_modulus_must_divide_p(self):
        ctx = PadicContext(7, 4)
        with pytest.raises(ValueError):
            padic_l(1, legendre_like(3, ctx), ctx, TruncationPlan(4))


class TestInterpolation:
    def test_diagonal_twists_give_euler_numbers(self):
        # l_p(-n, w^t) = (1 - p^n) E_n whenever n = t mod p-1
        for p in (3, 5, 7):
            ctx = PadicContext(p, 6)
            plan = TruncationPlan(6)
            for n in range(1, 9):
                chi = teichmuller_power(n, ctx)
                lhs = padic_l(-n, chi, ctx, plan)
                rhs = ctx.from_rational((1 - Fraction(p) ** n) * euler_number(n))
                assert lhs == rhs.reduce(6)

    def test_report_examples(self):
        ctx3 = PadicContext(3, 6)
        report = interpolation_check(1, teichmuller_power(1, ctx3), ctx3, 6)
        assert report.match
        assert report.lhs["digits"][0] == 1 and report.lhs["valuation"] == 0

        report = interpolation_check(2, teichmuller_power(2, ctx3), ctx3, 6)
        assert report.match
        assert report.lhs["valuation"] == 6  # both sides vanish (E_2 = 0)

        ctx5 = PadicContext(5, 6)
        report = interpolation_check(1, teichmuller_power(1, ctx5), ctx5, 6)
        assert report.match
        assert report.lhs["digits"] == [2, 0, 0, 0, 0, 0]  # (1 - 5) E_1 = 2

    def test_all_twists_interpolate(self):
        for p in (3, 5):
            ctx = PadicContext(p, 5)
            for n in range(1, 7):
                for t in range(p - 1):
                    chi = teichmuller_power(t, ctx)
                    assert interpolation_check(n, chi, ctx, 5).match, (p, n, t)

    def test_margin_does_not_change_reports(self):
        ctx = PadicContext(5, 5)
        chi = teichmuller_power(3, ctx)
        base = interpolation_check(4, chi, ctx, 5)
        wide = interpolation_check(4, chi, ctx, 5, margin=4)
        assert base == wide

    def test_untwistable_character_rejected(self):
        ctx = PadicContext(7, 4)
        with pytest.raises(ValueError):
            interpolation_check(1, legendre_like(3, ctx), ctx, 4)


class TestKummer:
    def test_step_p_congruence(self):
        for p in (3, 5, 7):
            ctx = PadicContext(p, 4)
            for k in range(1, 9):
                report = kummer_check(k, 0, ctx)
                assert report.match
                assert report.precision == 1

    def test_arbitrary_argument_pairs(self):
        ctx = PadicContext(3, 4)
        report = kummer_check(1, 0, ctx, k2=4)
        assert report.match
        assert report.params["k2"] == 4

    def test_values_vanish_mod_p_for_exponent_zero(self):
        for p in (3, 5, 7):
            ctx = PadicContext(p, 4)
            chi = teichmuller_power(0, ctx)
            for s in range(1, 9):
                value = padic_l(s, chi, ctx, TruncationPlan(1))
                assert value.is_zero

    def test_rejects_bad_exponent(self):
        ctx = PadicContext(5, 4)
        with pytest.raises(ValueError):
            kummer_check(1, 1, ctx)

    def test_nonzero_exponent_multiple_of_order_accepted(self):
        ctx = PadicContext(3, 4)
        assert kummer_check(2, 4, ctx).match
