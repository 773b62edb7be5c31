"""Acceptance gate: one test per release criterion, one printed line each.

Each test prints ``[criterion NN] PASS|FAIL <summary>``.  Criterion 06
is known to fail at its stated tolerance: the closed-form values
approach the classical Euler numbers linearly in 1 - q with a constant
near 70 for the largest (m, k) in the grid, so at 1 - q = 1e-4 four of
the pairs land between 1.1e-3 and 7.1e-3, above the 1e-3 gate.  The
check is implemented faithfully and left failing rather than loosened;
``test_euler_numbers.py`` verifies the same convergence at 1 - q = 1e-5
where the bound holds.
"""

from __future__ import annotations

import json
import math
import os
import random
import subprocess
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from qeuler import (
    RootOfUnity,
    characters_mod,
    classical_multiplication_residual,
    conductor,
    convergence_report,
    distribution_residual,
    euler_classical,
    euler_zeta_neg_int_exact,
    euler_zeta_q,
    euler_zeta_q_direct,
    generalized_qeuler,
    higher_order_stage,
    hurwitz_neg_int_exact,
    hurwitz_zeta_q,
    hurwitz_zeta_q_direct,
    is_primitive,
    l_neg_int_decomposition,
    l_neg_int_exact,
    l_series,
    l_series_direct,
    multiplication_residual_x0,
    p_valuation,
    partial_zeta,
    partial_zeta_neg_int_exact,
    qeuler_higher,
    qeuler_poly_exact,
    root_sum_is_zero,
)
from qeuler.fermionic import Integrand
from qeuler.numeric import PAdicQParam

F = Fraction
GOLDEN = Path(__file__).parent / "golden"


@contextmanager
def criterion(num, summary):
    try:
        yield
    except BaseException:
        print(f"[criterion {num:02d}] FAIL {summary}", flush=True)
        raise
    print(f"[criterion {num:02d}] PASS {summary}", flush=True)


def test_criterion_01_zeta_interpolates_qeuler_numbers():
    with criterion(1, "zeta at s=-m equals the m-th q-Euler number, exactly"):
        for q in (F(1, 3), F(1, 2), F(2, 3)):
            for m in range(1, 21):
                assert euler_zeta_neg_int_exact(m, q) - qeuler_higher(m, 1, q) == 0
        assert euler_zeta_neg_int_exact(1, F(1, 2)) == F(-1, 2)
        assert euler_zeta_neg_int_exact(2, F(1, 2)) == F(1, 5)


def test_criterion_02_hurwitz_interpolates_polynomials():
    with criterion(2, "Hurwitz zeta at s=-m equals the polynomial values, exactly"):
        for r in (F(1, 2), F(1, 3)):
            for d in (3, 5):
                for a in range(d + 1):
                    for m in range(1, 13):
                        assert hurwitz_neg_int_exact(m, r, d, a) == qeuler_poly_exact(
                            m, r, d, a
                        )


def test_criterion_03_l_series_interpolates_twisted_numbers():
    with criterion(3, "L-series at s=-k equals the chi-twisted q-Euler numbers"):
        for chi in (characters_mod(3)[1], characters_mod(5)[2]):
            for r in (F(1, 2), F(1, 3)):
                for k in range(1, 11):
                    lhs = l_neg_int_decomposition(k, chi, r)
                    rhs = l_neg_int_exact(k, chi, r)
                    assert isinstance(lhs, F) and lhs == rhs
        for chi in (characters_mod(5)[1], characters_mod(5)[3]):
            for k in range(1, 7):
                want = generalized_qeuler(k, chi, F(1, 2))
                got = l_series(-k, chi, 0.5)
                assert abs(got.value - want) <= 1e-9


def test_criterion_04_identity_suite_exact():
    with criterion(4, "distribution and multiplication residuals all exactly 0"):
        for r in (F(1, 2), F(1, 3)):
            for d in (1, 3, 5):
                for x in (0, 1, 2):
                    for n in range(9):
                        assert distribution_residual(n, d, x, r) == 0
        for r in (F(1, 2), F(2, 3)):
            for n in (1, 3, 5):
                for m in range(9):
                    assert multiplication_residual_x0(m, n, r) == 0
        for n in (3, 5, 7):
            for m in range(1, 11):
                assert classical_multiplication_residual(m, n) == 0


# Valuation sequences pinned from the exact stage computations.
PADIC_PINS = {
    (1, 1): [1, 2, 3, 4, 5, 6],
    (2, 1): [1, 2, 3, 4, 5, 6],
    (3, 1): [2, 3, 4, 5, 6, 7],
    (1, 2): [1, 2, 3],
    (2, 2): [1, 2, 3],
}


def test_criterion_05_padic_convergence():
    with criterion(5, "stage sums converge 3-adically to the closed forms"):
        ctx = PAdicQParam(3, 4)
        for (m, k), pinned in PADIC_PINS.items():
            ref = qeuler_higher(m, k, F(4))
            if k == 1:
                report = convergence_report(Integrand.moment(m), ctx, 6, reference=ref)
                vals = report.valuations
            else:
                vals = [
                    p_valuation(higher_order_stage(m, k, ctx, N) - ref, 3)
                    for N in (1, 2, 3)
                ]
            assert vals == pinned, (m, k, vals)
            assert all(b >= a for a, b in zip(vals, vals[1:])), (m, k, vals)
            if k == 1:
                assert vals[-1] >= vals[0] + 3, (m, k, vals)


def test_criterion_06_classical_limit_at_stated_calibration():
    with criterion(6, "q-Euler numbers within 1e-3 of classical at 1 - q = 1e-4"):
        q = 1 - F(1, 10**4)
        for m in range(7):
            for k in (1, 2, 3):
                gap = abs(qeuler_higher(m, k, q) - euler_classical(m, k))
                assert gap <= F(1, 1000), (m, k, float(gap))


def test_criterion_07_method_agreement():
    with criterion(7, "continuation and direct series agree to 1e-8 relative"):
        ss = (2, 3, complex(2, 1), complex(1.5, -2))
        qs = (0.3, 0.5, 0.9)
        chars = [characters_mod(3)[1], characters_mod(5)[1], characters_mod(5)[2]]
        for s in ss:
            for q in qs:
                a, b = euler_zeta_q(s, q), euler_zeta_q_direct(s, q)
                assert abs(a.value - b.value) <= 1e-8 * max(1, abs(b.value))
                for x in (1.0, 1 / 3, 0.4):
                    ah = hurwitz_zeta_q(s, x, q)
                    bh = hurwitz_zeta_q_direct(s, x, q)
                    assert abs(ah.value - bh.value) <= 1e-8 * max(1, abs(bh.value))
                for chi in chars:
                    al = l_series(s, chi, q)
                    bl = l_series_direct(s, chi, q)
                    assert abs(al.value - bl.value) <= 1e-8 * max(1, abs(bl.value))


def test_criterion_08_partial_zeta_partition():
    with criterion(8, "partial zetas partition the full zeta"):
        q = 0.5
        for FF in (3, 5):
            total = sum(partial_zeta(2, a, FF, q).value for a in range(1, FF + 1))
            assert abs(total - euler_zeta_q(2, q).value) <= 1e-10
        for FF in (3, 5):
            for a in range(1, FF + 1):
                for n in range(1, 6):
                    exact = partial_zeta_neg_int_exact(n, a, FF, F(1, 2))
                    got = partial_zeta(-n, a, FF, 0.5)
                    assert abs(got.value - float(exact)) <= 1e-12 * max(1, abs(exact))


def test_criterion_09_first_qeuler_number_is_constant():
    with criterion(9, "E_1(q) = -1/2 exactly for 100 random rational q"):
        rng = random.Random(1618)
        seen = 0
        while seen < 100:
            den = rng.randrange(2, 10**9)
            num = rng.randrange(1, den)
            q = F(num, den)
            if q == 1:
                continue
            assert qeuler_higher(1, 1, q) == F(-1, 2)
            seen += 1


def test_criterion_10_character_suite():
    with criterion(10, "character counts, orthogonality, conductors on fixtures"):
        counts = {1: 1, 3: 2, 5: 4, 9: 6, 15: 8}
        for d, want in counts.items():
            chars = characters_mod(d)
            assert len(chars) == want
            for c1 in chars:
                for c2 in chars:
                    vals = [
                        c1(n) * c2(n).conjugate()
                        for n in range(d)
                        if c1(n) != 0 and c2(n) != 0
                    ]
                    if c1 == c2:
                        assert all(v.is_one() for v in vals)
                    else:
                        assert root_sum_is_zero(vals)
        assert [conductor(c) for c in characters_mod(1)] == [1]
        assert [conductor(c) for c in characters_mod(3)] == [1, 3]
        assert [conductor(c) for c in characters_mod(5)] == [1, 5, 5, 5]
        assert [conductor(c) for c in characters_mod(9)] == [1, 9, 9, 3, 9, 9]
        assert [conductor(c) for c in characters_mod(15)] == [1, 5, 5, 5, 3, 15, 15, 15]
        for d in (1, 3, 5, 9, 15):
            for chi in characters_mod(d):
                assert is_primitive(chi) == (conductor(chi) == d)


def _run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("QEULER_MAX_TERMS", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "qeuler.cli", *args], capture_output=True, env=env
    )


def test_criterion_11_cli_contract():
    with criterion(11, "golden tables byte-identical; exit codes 0/1/2/3"):
        cases = [
            ("table_qeuler.csv", ["table", "qeuler", "--q", "1/2", "--m", "0..6",
                                  "--exact", "--format", "csv"]),
            ("table_classical.csv", ["table", "classical", "--k", "1", "--m", "0..5"]),
            ("table_zeta.csv", ["table", "zeta", "--q", "1/2", "--s-grid", "-3..0",
                                "--exact"]),
        ]
        for golden, args in cases:
            proc = _run_cli(*args)
            assert proc.returncode == 0, proc.stderr
            assert proc.stdout == (GOLDEN / golden).read_bytes(), golden
        assert _run_cli("eval", "qeuler", "--m", "2", "--k", "1", "--q", "1/2",
                        "--exact").returncode == 0
        assert _run_cli("verify", "identities", "--inject-failure").returncode == 1
        assert _run_cli("eval", "zeta", "--q", "1/2").returncode == 2
        proc = _run_cli("eval", "zeta", "--s", "2", "--q", "0.5",
                        env_extra={"QEULER_MAX_TERMS": "1"})
        assert proc.returncode == 3
