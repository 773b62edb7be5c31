"""Finite stages of the alternating p-adic sums, watched through valuations.

The stage-N sum S_N(f) = (1/[p**N]_{-q}) sum_{j<p**N} f(j)(-q)**j is an
exact rational.  For moment integrands the sequence S_1, S_2, ... gets
p-adically closer and closer to the closed-form q-Euler number: the
valuation of the difference climbs by one per stage.  Against a wrong
reference value the valuations stall immediately -- that contrast is the
whole diagnostic.

Run:  python3 demos/fermionic_stages.py
"""

from __future__ import annotations

from fractions import Fraction

from qeuler import (
    Integrand,
    PAdicQParam,
    convergence_report,
    higher_order_stage,
    p_valuation,
    qeuler_higher,
    stage_sum,
)

F = Fraction


def main():
    ctx = PAdicQParam(3, 4)
    print(f"Context: p = {ctx.p}, q = {ctx.q}  (v_3(q - 1) = 1, so the sums converge)")
    print()

    print("Normalization: the constant integrand gives exactly 1 at every stage:")
    for N in (1, 2, 3):
        print(f"  S_{N}(1) = {stage_sum(Integrand.constant(), ctx, N)}")
    print()

    f = Integrand.moment(1)
    print("First moment integrand [t] q**(-2t); S_1 worked out by hand is 1/208:")
    print(f"  S_1 = {stage_sum(f, ctx, 1)}")
    print()

    for m in (1, 2, 3):
        ref = qeuler_higher(m, 1, F(4))
        report = convergence_report(Integrand.moment(m), ctx, 6, reference=ref)
        print(f"m = {m}: closed form E_{m}(4) = {ref}")
        print(f"  valuations v_3(S_N - E): {report.valuations}")
    print()

    print("Negative control: same sums measured against 0 instead of -1/2:")
    wrong = convergence_report(Integrand.moment(1), ctx, 6, reference=0)
    print(f"  valuations: {wrong.valuations}   (bounded -- nothing converges to 0)")
    print()

    print("Order k = 2 (two-dimensional digit sums), N = 1..3:")
    for m in (1, 2):
        ref = qeuler_higher(m, 2, F(4))
        vals = [p_valuation(higher_order_stage(m, 2, ctx, N) - ref, 3) for N in (1, 2, 3)]
        print(f"  m = {m}: reference {ref}, valuations {vals}")


if __name__ == "__main__":
    main()
