"""Dirichlet characters on odd moduli, with exact root-of-unity values.

For odd d the unit group (Z/dZ)* splits as a product of cyclic groups,
one per odd prime-power factor p**e, each generated by a primitive root.
A character is therefore determined by one exponent t_i per factor:
writing n = g_i**a_i locally, chi(n) = prod_i zeta_{phi_i}**(t_i * a_i).
Discrete-log tables are built once per modulus and shared by all of its
characters.

Character values are :class:`RootOfUnity` instances -- exact exponents
k/n of e**(2*pi*i*k/n) -- or the integer 0 on non-units.  Sums of such
values can be tested for exact vanishing with :func:`root_sum_is_zero`,
which reduces the sum as an integer polynomial in zeta_N modulo the
N-th cyclotomic polynomial; the orthogonality relations hold exactly,
not just to floating tolerance.

``generalized_qeuler`` builds the chi-twisted q-Euler numbers out of the
exact polynomial values of :mod:`qeuler.euler_numbers`; the result is a
Fraction whenever chi is real-valued and a complex number (assembled
from exact rational prestages) otherwise.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .euler_numbers import qeuler_poly_exact
from .numeric import is_prime, q_bracket

__all__ = [
    "RootOfUnity",
    "DirichletCharacter",
    "characters_mod",
    "char_eval",
    "conductor",
    "is_primitive",
    "root_sum_is_zero",
    "generalized_qeuler",
]


@dataclass(frozen=True)
class RootOfUnity:
    """The root of unity e**(2*pi*i*numerator/order), exponent kept reduced.

    Multiplication, powers, and conjugation act on the exponent exactly;
    the value is rational precisely when order <= 2 (then it is +1 or -1,
    available via :meth:`as_rational`).
    """

    numerator: int
    order: int

    def __post_init__(self):
        if not isinstance(self.numerator, int) or not isinstance(self.order, int):
            raise DomainError("RootOfUnity exponent must be a pair of integers")
        if self.order < 1:
            raise DomainError(f"order must be positive, got {self.order!r}")
        k = self.numerator % self.order
        g = math.gcd(k, self.order)
        object.__setattr__(self, "numerator", k // g)
        object.__setattr__(self, "order", self.order // g)

    @classmethod
    def from_exponent(cls, e):
        """Root with exponent e (a Fraction, taken mod 1)."""
        e = Fraction(e)
        return cls(e.numerator, e.denominator)

    @property
    def exponent(self):
        return Fraction(self.numerator, self.order)

    def __mul__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return RootOfUnity.from_exponent(self.exponent + other.exponent)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return RootOfUnity.from_exponent(e * self.exponent)

    def conjugate(self):
        return RootOfUnity.from_exponent(-self.exponent)

    def is_one(self):
        return self.order == 1

    def as_rational(self):
        """Exact value as a Fraction when the root is +-1, else None."""
        if self.order == 1:
            return Fraction(1)
        if self.order == 2:
            return Fraction(-1)
        return None

    def to_complex(self):
        if self.order == 1:
            return complex(1)
        if self.order == 2:
            return complex(-1)
        if self.order == 4:
            return 1j if self.numerator == 1 else -1j
        return cmath.exp(2j * cmath.pi * self.numerator / self.order)


# ---------------------------------------------------------------------------
# Exact vanishing test for sums of roots of unity.


@lru_cache(maxsize=None)
def _cyclotomic(n):
    """Coefficients of the n-th cyclotomic polynomial (index = degree)."""
    poly = [-1] + [0] * (n - 1) + [1]  # x**n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _polydivmod(poly, list(_cyclotomic(d)))[0]
    return tuple(poly)


def _polydivmod(num, den):
    """Long division of integer polynomials; den must be monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dc in enumerate(den):
            num[i - dd + j] -= c * dc
    return quot, num[:dd] if dd else []


def root_sum_is_zero(values):
    """Exact test of sum(values) == 0 for roots of unity (and literal zeros).

    The values are collected as an integer polynomial in zeta_N, N the
    lcm of the orders, and reduced modulo the N-th cyclotomic polynomial;
    the sum vanishes iff the remainder is identically zero.
    """
    roots = []
    for v in values:
        if isinstance(v, RootOfUnity):
            roots.append(v)
        elif v == 0:
            continue
        else:
            raise DomainError(f"expected roots of unity or 0, got {v!r}")
    if not roots:
        return True
    N = 1
    for r in roots:
        N = math.lcm(N, r.order)
    coeffs = [0] * N
    for r in roots:
        coeffs[r.numerator * (N // r.order) % N] += 1
    if N == 1:
        return coeffs[0] == 0
    _, rem = _polydivmod(coeffs, list(_cyclotomic(N)))
    return all(c == 0 for c in rem)


# ---------------------------------------------------------------------------
# Unit-group structure of an odd modulus.


def _factorize_odd(d):
    """Prime-power factorization of an odd d >= 1, ascending primes."""
    out = []
    f = 3
    while f * f <= d:
        if d % f == 0:
            e = 0
            while d % f == 0:
                d //= f
                e += 1
            out.append((f, e))
        f += 2
    if d > 1:
        out.append((d, 1))
    return out


def _prime_factors(n):
    """Set of prime divisors of n >= 1."""
    out = set()
    while n % 2 == 0:
        out.add(2)
        n //= 2
    f = 3
    while f * f <= n:
        while n % f == 0:
            out.add(f)
            n //= f
        f += 2
    if n > 1:
        out.add(n)
    return out


def _primitive_root(p, e):
    """A generator of (Z/p**e)* for odd prime p."""
    pf = _prime_factors(p - 1)
    g = next(
        g
        for g in range(2, p)
        if all(pow(g, (p - 1) // f, p) != 1 for f in pf)
    )
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p  # the lift of g that stays primitive mod p**e
    return g


@dataclass(frozen=True, eq=False)
class _CyclicFactor:
    prime: int
    exp: int
    modulus: int  # prime**exp
    generator: int
    order: int  # phi(prime**exp)
    dlog: dict  # residue -> discrete log base generator


@lru_cache(maxsize=None)
def _unit_group(d):
    if not isinstance(d, int) or d < 1 or d % 2 == 0:
        raise DomainError(f"modulus must be an odd positive integer, got {d!r}")
    factors = []
    for p, e in _factorize_odd(d):
        pe = p**e
        phi = pe // p * (p - 1)
        g = _primitive_root(p, e)
        dlog = {}
        x = 1
        for a in range(phi):
            dlog[x] = a
            x = x * g % pe
        factors.append(_CyclicFactor(p, e, pe, g, phi, dlog))
    return tuple(factors)


class DirichletCharacter:
    """A Dirichlet character mod odd d, given by one exponent per factor.

    ``exponents[i]`` is t_i in chi(g_i) = zeta_{phi_i}**t_i for the i-th
    prime-power factor (factors in ascending order).  The all-zero tuple
    is the principal character.  Calling the character returns a
    :class:`RootOfUnity`, or the integer 0 on arguments sharing a factor
    with d.
    """

    __slots__ = ("modulus", "exponents", "_factors")

    def __init__(self, modulus, exponents=None):
        factors = _unit_group(modulus)
        if exponents is None:
            exponents = (0,) * len(factors)
        exponents = tuple(int(t) for t in exponents)
        if len(exponents) != len(factors):
            raise DomainError(
                f"modulus {modulus} has {len(factors)} cyclic factors, "
                f"got {len(exponents)} exponents"
            )
        if any(not 0 <= t < f.order for t, f in zip(exponents, factors)):
            raise DomainError(f"exponents out of range for modulus {modulus}")
        self.modulus = modulus
        self.exponents = exponents
        self._factors = factors

    @property
    def factor_data(self):
        """List of (prime_power, generator, character_exponent, group_order)."""
        return [
            (f.modulus, f.generator, t, f.order)
            for f, t in zip(self._factors, self.exponents)
        ]

    @property
    def order(self):
        """Multiplicative order of the character."""
        o = 1
        for f, t in zip(self._factors, self.exponents):
            o = math.lcm(o, f.order // math.gcd(f.order, t))
        return o

    @property
    def is_principal(self):
        return all(t == 0 for t in self.exponents)

    @property
    def index(self):
        """Position of this character in ``characters_mod(modulus)``."""
        i = 0
        for f, t in zip(self._factors, self.exponents):
            i = i * f.order + t
        return i

    def __call__(self, n):
        if not isinstance(n, int):
            raise DomainError(f"character argument must be an integer, got {n!r}")
        n %= self.modulus
        if math.gcd(n, self.modulus) != 1:
            return 0
        e = Fraction(0)
        for f, t in zip(self._factors, self.exponents):
            if t:
                e += Fraction(t * f.dlog[n % f.modulus], f.order)
        return RootOfUnity.from_exponent(e)

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __repr__(self):
        return f"DirichletCharacter(modulus={self.modulus}, index={self.index})"


def characters_mod(d):
    """All phi(d) characters mod odd d, ordered lexicographically by
    exponent tuple (the principal character comes first)."""
    factors = _unit_group(d)
    return [
        DirichletCharacter(d, exps)
        for exps in itertools.product(*(range(f.order) for f in factors))
    ]


def char_eval(chi, n):
    """chi(n) as a RootOfUnity, or 0 when gcd(n, d) > 1."""
    return chi(n)


def conductor(chi):
    """Smallest modulus chi factors through (product of local conductors)."""
    f = 1
    for fac, t in zip(chi._factors, chi.exponents):
        if t == 0:
            continue
        local_order = fac.order // math.gcd(fac.order, t)
        v = 0
        while local_order % fac.prime == 0:
            local_order //= fac.prime
            v += 1
        f *= fac.prime ** (1 + v)
    return f


def is_primitive(chi):
    return conductor(chi) == chi.modulus


def generalized_qeuler(m, chi, r):
    """m-th chi-twisted q-Euler number at base q = r, exact where possible.

    E_{m,chi}(q) = ((1+q)/(1+q**d)) [d]_q**m
                   sum_{i=0}^{d-1} chi(i) (-1)**i q**(-m*i) E_m(i/d at base q**d)

    with d the modulus of chi.  Real-valued chi (order <= 2) gives an
    exact Fraction; otherwise each rational prestage is computed exactly
    and only the final chi-weighted combination is floating complex.
    """
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if not isinstance(chi, DirichletCharacter):
        raise DomainError(f"chi must be a DirichletCharacter, got {chi!r}")
    r = Fraction(r)
    if not 0 < r < 1:
        raise DomainError(f"r must be a rational in (0, 1), got {r}")
    d = chi.modulus
    prefactor = (1 + r) / (1 + r**d) * Fraction(q_bracket(d, r)) ** m
    weights = []  # (chi(i), exact rational cofactor) for units i
    for i in range(d):
        v = chi(i)
        if v == 0:
            continue
        c = prefactor * r ** (-m * i) * qeuler_poly_exact(m, r, d, i)
        weights.append((v, -c if i % 2 else c))
    if chi.order <= 2:
        return sum((v.as_rational() * c for v, c in weights), Fraction(0))
    return sum((v.to_complex() * float(c) for v, c in weights), complex(0))
