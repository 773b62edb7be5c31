"""Dirichlet characters on odd moduli and the L-series they twist.

Characters are enumerated lexicographically (principal first) with
exact root-of-unity values; orthogonality is verified by cyclotomic
reduction, not floating sums.  The L-series at negative integers land
on the chi-twisted q-Euler numbers -- exactly for real characters,
to high precision for the complex ones.

Run:  python3 demos/characters_lseries.py
"""

from __future__ import annotations

from fractions import Fraction

from qeuler import (
    characters_mod,
    conductor,
    generalized_qeuler,
    is_primitive,
    l_neg_int_exact,
    l_series,
    l_series_direct,
    root_sum_is_zero,
)

F = Fraction


def _show(v):
    if isinstance(v, F):
        return str(v)
    return f"{v.real:.12f}{v.imag:+.12f}i"


def main():
    print("Character table mod 15 (rows: chi, columns: n = 1..14):")
    chars = characters_mod(15)
    for chi in chars:
        cells = []
        for n in range(1, 15):
            v = chi(n)
            cells.append(" . " if v == 0 else f"{v.numerator}/{v.order}")
        flag = "primitive" if is_primitive(chi) else f"conductor {conductor(chi)}"
        print(f"  chi_{chi.index} [{flag:>12}]: " + " ".join(f"{c:>4}" for c in cells))
    print("  (entries are exponents k/n meaning e^(2 pi i k/n); '.' marks non-units)")
    print()

    print("Row orthogonality, checked exactly via cyclotomic reduction:")
    c1, c2 = chars[1], chars[5]
    vals = [c1(n) * c2(n).conjugate() for n in range(15) if c1(n) != 0 and c2(n) != 0]
    print(f"  sum_n chi_1(n) conj(chi_5(n)) == 0: {root_sum_is_zero(vals)}")
    print()

    chi = characters_mod(5)[2]
    print("Quadratic character mod 5: L(-k, chi) vs the twisted numbers (exact):")
    for k in range(1, 6):
        lk = l_neg_int_exact(k, chi, F(1, 2))
        ek = generalized_qeuler(k, chi, F(1, 2))
        print(f"  k = {k}: L(-{k}) = {str(lk):>22}  twisted E_{k} = {str(ek):>22}")
    print()

    chi4 = characters_mod(5)[1]
    print("Order-4 character mod 5: continuation vs twisted numbers (complex):")
    for k in (1, 2, 3):
        approx = l_series(-k, chi4, 0.5).value
        exact = generalized_qeuler(k, chi4, F(1, 2))
        print(f"  k = {k}: continuation {_show(approx)}")
        print(f"         twisted      {_show(exact)}")
    print()

    print("On Re(s) >= 1 the defining series is available as a cross-check:")
    for s in (2, complex(2, 1)):
        a = l_series(s, chi, 0.5)
        b = l_series_direct(s, chi, 0.5)
        print(f"  s = {s}: |continuation - direct| = {abs(a.value - b.value):.2e}")


if __name__ == "__main__":
    main()
