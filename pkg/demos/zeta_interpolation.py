"""The q-Euler zeta function and what it does at negative integers.

For 0 < q < 1 the alternating series defining zeta_E converges only for
Re(s) >= 1; the binomial continuation evaluates it everywhere.  At
s = -m the continuation terminates after m+1 terms and the value equals
the m-th q-Euler number, exactly -- that interpolation is checked here
in rational arithmetic, alongside the numeric routes agreeing with each
other and the partial zetas adding back up to the whole.

Run:  python3 demos/zeta_interpolation.py
"""

from __future__ import annotations

from fractions import Fraction

from qeuler import (
    euler_zeta_neg_int_exact,
    euler_zeta_q,
    euler_zeta_q_direct,
    hurwitz_zeta_q,
    partial_zeta,
    partial_zeta_neg_int_exact,
    qeuler_higher,
)

F = Fraction


def main():
    q = 0.5
    print("Two routes to zeta_E(s) for Re(s) >= 1, q = 0.5:")
    for s in (2, 3, complex(2, 1)):
        cont = euler_zeta_q(s, q)
        direct = euler_zeta_q_direct(s, q)
        print(f"  s = {s}:")
        print(f"    continuation {cont.value:.15f}   ({cont.terms_used} terms, est {cont.abs_error_estimate:.1e})")
        print(f"    direct       {direct.value:.15f}   ({direct.terms_used} terms)")
    print()

    print("Left of the abscissa only the continuation exists:")
    for s in (0.25, -0.5, complex(-1.5, 2)):
        v = euler_zeta_q(s, q)
        print(f"  zeta_E({s}) = {v.value:.12f}")
    print()

    print("At negative integers it lands exactly on the q-Euler numbers:")
    for m in range(1, 9):
        z = euler_zeta_neg_int_exact(m, F(1, 2))
        e = qeuler_higher(m, 1, F(1, 2))
        print(f"  zeta_E(-{m}) = {str(z):>14}   E_{m}(1/2) = {str(e):>14}   equal: {z == e}")
    print()

    print("s = 0 is the sign boundary (the continuation gives -E_0, not E_0):")
    print(f"  zeta_E(0) exact   = {euler_zeta_neg_int_exact(0, F(1, 2))}")
    print(f"  E_0(1/2)          = {qeuler_higher(0, 1, F(1, 2))}")
    print()

    print("Hurwitz form at rational first argument, continuation vs termination:")
    h = hurwitz_zeta_q(-2, 1 / 3, 0.125)
    print(f"  zeta_H(-2, 1/3; q=1/8) = {h.value:.15f}  ({h.terms_used} terms, estimate {h.abs_error_estimate})")
    print()

    print("Partial zetas over residue classes mod F partition the whole:")
    for FF in (3, 5):
        parts = [partial_zeta(2, a, FF, q).value for a in range(1, FF + 1)]
        total = sum(parts)
        whole = euler_zeta_q(2, q).value
        print(f"  F = {FF}: sum of {FF} classes = {total:.15f}, zeta = {whole:.15f}")
    print()
    print("...and exactly so at negative integers:")
    total = sum((partial_zeta_neg_int_exact(3, a, 5, F(1, 2)) for a in range(1, 6)), F(0))
    print(f"  sum_a H(-3, a, 5) = {total} = zeta_E(-3) = {euler_zeta_neg_int_exact(3, F(1, 2))}")


if __name__ == "__main__":
    main()
