"""Scalar kernel: q-brackets, binomial coefficients, p-adic valuations.

Everything here is a pure function over plain numbers.  Exact inputs
(``int``, ``Fraction``) give exact outputs; ``float``/``complex`` inputs
stay floating.  The type of the argument selects the path -- exact and
floating arithmetic are never mixed silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "q_bracket",
    "q_bracket_signed",
    "q_bracket_pow",
    "binom",
    "gen_binom",
    "p_valuation",
    "is_prime",
    "PAdicQParam",
]


def q_bracket(x, q):
    """The q-number [x]_q = (1 - q**x) / (1 - q), with [x]_1 = x.

    ``q`` must be positive.  For exact ``q`` (int or Fraction) the
    exponent ``x`` must be an integer; use :func:`q_bracket_pow` when an
    exact bracket of a fractional argument is needed.
    """
    if q <= 0:
        raise DomainError(f"q must be positive, got {q!r}")
    if q == 1:
        return x  # limit value: lim_{q->1} [x]_q = x
    if isinstance(x, float) or isinstance(q, float):
        return (1.0 - q**x) / (1.0 - q)
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise DomainError(
                f"exact q_bracket needs an integer exponent, got x={x}; "
                "use q_bracket_pow for x = a/d"
            )
        x = int(x)
    return (1 - Fraction(q) ** x) / (1 - Fraction(q))


def q_bracket_signed(x, q):
    """The signed q-number [x]_{-q} = (1 - (-q)**x) / (1 + q).

    ``x`` must be a nonnegative integer and ``q`` positive.  This is the
    normalizing denominator of the alternating stage sums; for odd ``x``
    it equals (1 + q**x)/(1 + q).
    """
    if not isinstance(x, int) or x < 0:
        raise DomainError(f"x must be a nonnegative integer, got {x!r}")
    if q <= 0:
        raise DomainError(f"q must be positive, got {q!r}")
    if isinstance(q, float):
        return (1.0 - (-q) ** x) / (1.0 + q)
    q = Fraction(q)
    return (1 - (-q) ** x) / (1 + q)


def q_bracket_pow(r, a, d):
    """Exact bracket of a fractional argument: [a/d] at base q = r**d.

    Returns (1 - r**a) / (1 - r**d) as a Fraction.  Writing q = r**d
    makes q**(a/d) = r**a rational, so the bracket of x = a/d is exactly
    representable.  ``r`` must be a positive rational != 1.
    """
    r = Fraction(r)
    if r <= 0 or r == 1:
        raise DomainError(f"r must be a positive rational != 1, got {r}")
    if not isinstance(a, int) or not isinstance(d, int) or d < 1 or a < 0:
        raise DomainError(f"need integers a >= 0 and d >= 1, got a={a!r}, d={d!r}")
    return (1 - r**a) / (1 - r**d)


def binom(m, i):
    """Binomial coefficient C(m, i) for integer m >= 0; zero out of range."""
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if not isinstance(i, int) or i < 0 or i > m:
        return 0
    return math.comb(m, i)


def gen_binom(s, j):
    """Generalized binomial coefficient C(s + j - 1, j) = prod_{i=1}^{j} (s + i - 1)/i.

    These are the coefficients of (1 - z)**(-s).  Exact (Fraction) for
    int/Fraction ``s``; float for float ``s``; complex for complex ``s``.
    At s = -m with integer m >= 0 this equals (-1)**j * C(m, j), and in
    particular vanishes for all j > m.
    """
    if not isinstance(j, int) or j < 0:
        raise DomainError(f"j must be a nonnegative integer, got {j!r}")
    if isinstance(s, (int, Fraction)):
        out = Fraction(1)
        for i in range(1, j + 1):
            out *= Fraction(s + i - 1, i)
        return out
    out = complex(1) if isinstance(s, complex) else 1.0
    for i in range(1, j + 1):
        out *= (s + i - 1) / i
    return out


def is_prime(n):
    """Trial-division primality test for small integers."""
    if not isinstance(n, int) or n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _int_valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_valuation(r, p):
    """The p-adic valuation of a rational r; +infinity for r = 0.

    ``p`` must be prime.  For r = a/b in lowest terms the result is
    v_p(a) - v_p(b), so it is negative when p divides the denominator.
    """
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p!r}")
    r = Fraction(r)
    if r == 0:
        return math.inf
    return _int_valuation(abs(r.numerator), p) - _int_valuation(r.denominator, p)


@dataclass(frozen=True)
class PAdicQParam:
    """An odd prime p together with a rational q that is a p-adic unit
    congruent to 1 mod p (v_p(q) = 0 and v_p(q - 1) >= 1).

    This is the parameter region where the alternating stage sums of
    :mod:`qeuler.fermionic` converge p-adically.
    """

    p: int
    q: Fraction

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or not is_prime(self.p):
            raise DomainError(f"p must be an odd prime >= 3, got {self.p!r}")
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 0:
            raise DomainError(f"q must be positive, got {self.q}")
        if p_valuation(self.q, self.p) != 0:
            raise DomainError(f"q must be a p-adic unit: v_{self.p}({self.q}) != 0")
        if p_valuation(self.q - 1, self.p) < 1:
            raise DomainError(
                f"q must satisfy v_{self.p}(q - 1) >= 1, got q = {self.q}"
            )
