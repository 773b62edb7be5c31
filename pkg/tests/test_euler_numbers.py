"""Tests for q-Euler numbers, polynomials, and the identity residuals."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qeuler import (
    DomainError,
    classical_multiplication_residual,
    distribution_residual,
    euler_classical,
    multiplication_residual_x0,
    qeuler_higher,
    qeuler_mixed,
    qeuler_poly_exact,
    qeuler_poly_numeric,
)

F = Fraction

SOME_Q = (F(1, 3), F(1, 2), F(2, 3), F(9, 10), F(5, 2), F(4))


class TestQEulerHigher:
    def test_degree_zero(self):
        for q in SOME_Q:
            assert qeuler_higher(0, 1, q) == (1 + q) / 2

    def test_degree_one_is_constant(self):
        for q in SOME_Q:
            assert qeuler_higher(1, 1, q) == F(-1, 2)

    def test_degree_two_closed_form(self):
        for q in SOME_Q:
            assert qeuler_higher(2, 1, q) == (1 - q) / (2 * (1 + q**2))

    def test_pinned_values(self):
        assert qeuler_higher(2, 1, F(1, 2)) == F(1, 5)
        assert qeuler_higher(2, 1, F(4)) == F(-3, 34)
        assert qeuler_higher(3, 1, F(4)) == F(-5, 442)

    def test_numeric_path_matches_exact(self):
        for m in range(9):
            for k in (1, 2, 3):
                exact = float(qeuler_higher(m, k, F(1, 2)))
                approx = qeuler_higher(m, k, 0.5)
                assert isinstance(approx, float)
                assert approx == pytest.approx(exact, abs=1e-12, rel=1e-12)

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            qeuler_higher(-1, 1, F(1, 2))
        with pytest.raises(DomainError):
            qeuler_higher(2, 0, F(1, 2))
        with pytest.raises(DomainError):
            qeuler_higher(2, 1, 1)
        with pytest.raises(DomainError):
            qeuler_higher(2, 1, F(-1, 2))
        with pytest.raises(DomainError):
            qeuler_higher(2, 1, "1/2")

    @given(
        num=st.integers(min_value=1, max_value=10**6),
        den=st.integers(min_value=2, max_value=10**6),
    )
    def test_degree_one_constant_property(self, num, den):
        q = F(num, den)
        if q == 1:
            return
        assert qeuler_higher(1, 1, q) == F(-1, 2)


class TestQEulerMixed:
    def test_diagonal_matches_first_order(self):
        for q in (F(1, 2), F(2, 5), F(4)):
            for m in range(16):
                assert qeuler_mixed(m, m, q) == qeuler_higher(m, 1, q)

    def test_degree_zero_closed_form(self):
        for q in (F(1, 3), F(3, 4), F(4)):
            for m in range(6):
                assert qeuler_mixed(0, m, q) == (1 + q) / (1 + q**-m)

    def test_pinned_values(self):
        assert qeuler_mixed(1, 2, F(1, 2)) == F(-2, 5)
        assert qeuler_mixed(1, 2, F(4)) == F(-4, 17)

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            qeuler_mixed(-1, 2, F(1, 2))
        with pytest.raises(DomainError):
            qeuler_mixed(1, -2, F(1, 2))
        with pytest.raises(DomainError):
            qeuler_mixed(1, 2, 1)


class TestQEulerPoly:
    def test_argument_zero_reduces_to_numbers(self):
        for r in (F(1, 2), F(2, 3)):
            for d in (1, 3, 5):
                for m in range(7):
                    assert qeuler_poly_exact(m, r, d, 0) == qeuler_higher(m, 1, r**d)

    def test_degree_zero_is_constant_in_x(self):
        r = F(1, 2)
        for a in range(7):
            assert qeuler_poly_exact(0, r, 3, a) == (1 + r**3) / 2

    def test_pinned_value(self):
        # E_1 at x = 1/3, base q = (1/2)**3 = 1/8
        assert qeuler_poly_exact(1, F(1, 2), 3, 1) == F(-5, 28)

    def test_numeric_matches_exact(self):
        for m in range(7):
            for a, d in ((0, 1), (1, 3), (2, 3), (4, 5)):
                exact = float(qeuler_poly_exact(m, F(1, 2), d, a))
                approx = qeuler_poly_numeric(m, 0.5**d, a / d)
                assert approx == pytest.approx(exact, abs=1e-12, rel=1e-12)

    def test_rejects_base_outside_unit_interval(self):
        with pytest.raises(DomainError):
            qeuler_poly_exact(2, F(3, 2), 1, 0)
        with pytest.raises(DomainError):
            qeuler_poly_exact(2, F(1), 1, 0)
        with pytest.raises(DomainError):
            qeuler_poly_numeric(2, 1.5, 0.0)

    def test_rejects_bad_indices(self):
        with pytest.raises(DomainError):
            qeuler_poly_exact(-1, F(1, 2), 1, 0)
        with pytest.raises(DomainError):
            qeuler_poly_exact(1, F(1, 2), 0, 0)
        with pytest.raises(DomainError):
            qeuler_poly_exact(1, F(1, 2), 3, -1)
        with pytest.raises(DomainError):
            qeuler_poly_numeric(1, 0.5, -0.25)


class TestEulerClassical:
    def test_first_order_sequence(self):
        want = [F(1), F(-1, 2), F(0), F(1, 4), F(0), F(-1, 2),
                F(0), F(17, 8), F(0), F(-31, 2), F(0), F(691, 4)]
        assert [euler_classical(n) for n in range(12)] == want

    def test_odd_index_vanishing_beyond_one(self):
        for n in (2, 4, 6, 8, 10, 12):
            assert euler_classical(n) == 0

    def test_order_two_values(self):
        assert euler_classical(0, 2) == 1
        assert euler_classical(1, 2) == -1
        assert euler_classical(4, 2) == -1

    def test_order_convolution(self):
        # E_n^(k) = sum_j C(n,j) E_j^(k-1) E_{n-j}
        from qeuler import binom

        for k in (2, 3):
            for n in range(8):
                want = sum(
                    binom(n, j) * euler_classical(j, k - 1) * euler_classical(n - j)
                    for j in range(n + 1)
                )
                assert euler_classical(n, k) == want

    def test_rejects_bad_arguments(self):
        with pytest.raises(DomainError):
            euler_classical(-1)
        with pytest.raises(DomainError):
            euler_classical(2, 0)


class TestClassicalLimit:
    def test_higher_order_tends_to_classical(self):
        # The gap closes linearly in 1 - q; at 1 - q = 1e-5 every (m, k)
        # with m <= 6, k <= 3 sits well inside 1e-3.  Exact arithmetic is
        # essential: the closed form cancels catastrophically in floats
        # this close to q = 1.
        q = 1 - F(1, 10**5)
        for m in range(7):
            for k in (1, 2, 3):
                gap = abs(qeuler_higher(m, k, q) - euler_classical(m, k))
                assert gap <= F(1, 1000), (m, k, float(gap))


class TestResiduals:
    def test_distribution_residual_vanishes(self):
        for r in (F(1, 2), F(1, 3)):
            for d in (1, 3, 5):
                for n in range(5):
                    for x in (0, 1, 2):
                        assert distribution_residual(n, d, x, r) == 0

    def test_distribution_rejects_even_d(self):
        with pytest.raises(DomainError):
            distribution_residual(2, 2, 0, F(1, 2))

    def test_multiplication_residual_vanishes(self):
        for r in (F(1, 2), F(2, 3)):
            for n in (1, 3, 5):
                for m in range(5):
                    assert multiplication_residual_x0(m, n, r) == 0

    def test_multiplication_rejects_even_n(self):
        with pytest.raises(DomainError):
            multiplication_residual_x0(2, 4, F(1, 2))

    def test_classical_multiplication_vanishes(self):
        for n in (3, 5, 7):
            for m in range(1, 11):
                assert classical_multiplication_residual(m, n) == 0

    def test_classical_multiplication_rejects_bad_args(self):
        with pytest.raises(DomainError):
            classical_multiplication_residual(0, 3)
        with pytest.raises(DomainError):
            classical_multiplication_residual(2, 4)
