"""Tour of the q-Euler numbers: closed forms, identities, classical limit.

Run:  python3 demos/qeuler_numbers.py
"""

from __future__ import annotations

from fractions import Fraction

from qeuler import (
    distribution_residual,
    euler_classical,
    multiplication_residual_x0,
    qeuler_higher,
    qeuler_mixed,
    qeuler_poly_exact,
)

F = Fraction


def main():
    q = F(1, 2)
    print(f"q-Euler numbers E_m(q) at q = {q} (exact):")
    for m in range(9):
        print(f"  E_{m} = {qeuler_higher(m, 1, q)}")
    print()

    print("E_1(q) = -1/2 no matter the base:")
    for qq in (F(1, 7), F(3, 5), F(9, 10), F(4), F(100)):
        print(f"  q = {str(qq):>6}: {qeuler_higher(1, 1, qq)}")
    print()

    print("Higher order (the k-fold construction), q = 1/2:")
    for k in (1, 2, 3):
        row = [str(qeuler_higher(m, k, q)) for m in range(5)]
        print(f"  k = {k}: {row}")
    print()

    print("Polynomial values E_2(x) at rational x (base q = r**d stays exact):")
    r, d = F(1, 2), 3
    for a in range(d + 1):
        print(f"  E_2({a}/{d}) at base {r}**{d} = {qeuler_poly_exact(2, r, d, a)}")
    print()

    print("Distribution and multiplication identities, residuals exactly 0:")
    print(f"  distribution (n=4, d=3, x=1, r=1/2): {distribution_residual(4, 3, 1, F(1, 2))}")
    print(f"  multiplication (m=5, n=3, r=2/3):    {multiplication_residual_x0(5, 3, F(2, 3))}")
    print()

    print("Classical limit: E_m(q) -> E_m as q -> 1 (exact rational sweep):")
    header = "  1 - q      " + "".join(f"m={m:<12}" for m in range(4))
    print(header)
    for exp in (2, 3, 4, 5):
        eps = F(1, 10**exp)
        gaps = [float(abs(qeuler_higher(m, 1, 1 - eps) - euler_classical(m))) for m in range(4)]
        print("  1e-%d      " % exp + "".join(f"{g:<12.2e}" for g in gaps))
    print()
    print("The two-index companions interpolate between orders:")
    for kdeg in range(4):
        print(f"  E_({kdeg},3)(1/2) = {qeuler_mixed(kdeg, 3, q)}")


if __name__ == "__main__":
    main()
