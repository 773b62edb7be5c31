"""Tests for the finite-stage alternating sums and their p-adic behavior."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from qeuler import (
    DomainError,
    Integrand,
    IntegrandTerm,
    PAdicQParam,
    ResourceLimitError,
    convergence_report,
    higher_order_stage,
    p_valuation,
    q_bracket_signed,
    qeuler_higher,
    qeuler_mixed,
    stage_sum,
)

F = Fraction

CTX34 = PAdicQParam(3, 4)


class TestIntegrandAlgebra:
    def test_builders(self):
        assert Integrand.moment(1) == Integrand.term(1, 1, -2)
        assert Integrand.constant().terms[0] == IntegrandTerm(F(1), 0, 0)

    def test_evaluate(self):
        f = Integrand.term(F(2, 3), 2, -1)
        q = F(4)
        for j in range(5):
            bracket = (1 - q**j) / (1 - q)
            assert f.evaluate(j, q) == F(2, 3) * bracket**2 * q**-j

    def test_sum_and_scale(self):
        f = Integrand.moment(1)
        g = Integrand.moment(2)
        h = 2 * f + F(-1, 3) * g
        for j in range(4):
            want = 2 * f.evaluate(j, 4) - F(1, 3) * g.evaluate(j, 4)
            assert h.evaluate(j, 4) == want

    def test_rejects_bad_terms(self):
        with pytest.raises(DomainError):
            IntegrandTerm(F(1), -1, 0)
        with pytest.raises(DomainError):
            IntegrandTerm(F(1), 1, F(1, 2))
        with pytest.raises(DomainError):
            Integrand.moment(-1)


class TestStageSum:
    def test_constant_normalizes_to_one(self):
        for ctx in (CTX34, PAdicQParam(5, 6), PAdicQParam(3, F(7, 4))):
            for N in (1, 2, 3):
                assert stage_sum(Integrand.constant(), ctx, N) == 1

    def test_worked_three_term_example(self):
        # f(j) = q**(-2j) [j]_q at p=3, q=4, N=1:
        #   (0 - 4/16 + 16*5/256) / [3]_{-4} = (1/16) / 13 = 1/208
        assert stage_sum(Integrand.moment(1), CTX34, 1) == F(1, 208)

    def test_matches_reference_evaluation(self):
        f = Integrand.moment(2) + Integrand.term(F(-1, 5), 1, 1)
        ctx = CTX34
        for N in (1, 2):
            P = ctx.p**N
            brute = sum(f.evaluate(j, ctx.q) * (-ctx.q) ** j for j in range(P))
            brute /= q_bracket_signed(P, ctx.q)
            assert stage_sum(f, ctx, N) == brute

    def test_linearity(self):
        f = Integrand.moment(1)
        g = Integrand.moment(2)
        combo = F(2, 3) * f + (-5) * g
        for N in (1, 2, 3):
            want = F(2, 3) * stage_sum(f, CTX34, N) - 5 * stage_sum(g, CTX34, N)
            assert stage_sum(combo, CTX34, N) == want

    def test_resource_cap(self):
        with pytest.raises(ResourceLimitError):
            stage_sum(Integrand.constant(), CTX34, 20)
        with pytest.raises(ResourceLimitError):
            stage_sum(Integrand.constant(), CTX34, 3, term_cap=10)

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            stage_sum("not an integrand", CTX34, 1)
        with pytest.raises(DomainError):
            stage_sum(Integrand.constant(), CTX34, 0)


class TestConvergence:
    def test_constant_is_exact_at_every_stage(self):
        report = convergence_report(Integrand.constant(), CTX34, 3, reference=1)
        assert report.valuations == [math.inf, math.inf, math.inf]

    def test_moment_one_valuations(self):
        report = convergence_report(Integrand.moment(1), CTX34, 6, reference=F(-1, 2))
        assert report.valuations == [1, 2, 3, 4, 5, 6]
        assert [N for N, _ in report.stages] == [1, 2, 3, 4, 5, 6]

    def test_moment_two_and_three_valuations(self):
        r2 = convergence_report(Integrand.moment(2), CTX34, 6, reference=F(-3, 34))
        assert r2.valuations == [1, 2, 3, 4, 5, 6]
        r3 = convergence_report(Integrand.moment(3), CTX34, 6, reference=F(-5, 442))
        assert r3.valuations == [2, 3, 4, 5, 6, 7]

    def test_reference_values_are_the_closed_forms(self):
        assert qeuler_higher(1, 1, F(4)) == F(-1, 2)
        assert qeuler_higher(2, 1, F(4)) == F(-3, 34)
        assert qeuler_higher(3, 1, F(4)) == F(-5, 442)

    def test_wrong_reference_negative_control(self):
        # against 0 instead of the true limit -1/2 the valuations stall
        report = convergence_report(Integrand.moment(1), CTX34, 6, reference=0)
        assert report.valuations == [0, 0, 0, 0, 0, 0]
        assert max(report.valuations) <= 1

    def test_twisted_moment_converges_to_mixed_number(self):
        # integrand [t] q**(-3t): limit is the two-index number E_{1,2}(4)
        assert qeuler_mixed(1, 2, F(4)) == F(-4, 17)
        report = convergence_report(
            Integrand.term(1, 1, -3), CTX34, 6, reference=F(-4, 17)
        )
        assert report.valuations == [1, 2, 3, 4, 5, 6]

    def test_no_reference_gives_no_valuations(self):
        report = convergence_report(Integrand.moment(1), CTX34, 3)
        assert report.valuations is None
        assert report.reference is None
        assert len(report.stages) == 3


class TestHigherOrderStage:
    def test_order_one_matches_moment_stage(self):
        for m in (0, 1, 2, 3):
            for N in (1, 2, 3):
                assert higher_order_stage(m, 1, CTX34, N) == stage_sum(
                    Integrand.moment(m), CTX34, N
                )

    def test_degree_zero_closed_stage_value(self):
        # m=0, k=1 collapses to (1+q)/(1+q**(p**N)), tending to [2]_q/2
        q = F(4)
        for N in (1, 2, 3):
            assert higher_order_stage(0, 1, CTX34, N) == (1 + q) / (1 + q ** (3**N))

    def test_degree_zero_limit_valuations(self):
        q = F(4)
        ref = (1 + q) / 2
        v = [p_valuation(higher_order_stage(0, 1, CTX34, N) - ref, 3) for N in (1, 2, 3)]
        assert v == sorted(v) and v[0] >= 1

    def test_order_two_valuations(self):
        for m, pinned in ((1, [1, 2, 3]), (2, [1, 2, 3])):
            ref = qeuler_higher(m, 2, F(4))
            vals = [
                p_valuation(higher_order_stage(m, 2, CTX34, N) - ref, 3)
                for N in (1, 2, 3)
            ]
            assert vals == pinned

    def test_resource_cap_counts_nominal_grid(self):
        with pytest.raises(ResourceLimitError):
            higher_order_stage(1, 2, CTX34, 9)
        with pytest.raises(ResourceLimitError):
            higher_order_stage(1, 3, CTX34, 2, term_cap=500)  # 9**3 = 729 > 500

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            higher_order_stage(-1, 1, CTX34, 1)
        with pytest.raises(DomainError):
            higher_order_stage(1, 0, CTX34, 1)
        with pytest.raises(DomainError):
            higher_order_stage(1, 1, CTX34, 0)
