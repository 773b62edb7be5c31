"""q-Euler numbers and polynomials in closed form, plus classical limits.

The central objects are the higher-order q-Euler numbers

    E_m^(k)(q) = (1+q)**k / (1-q)**m *
                 sum_{i=0}^{m} C(m,i) (-1)**i  prod_{j=0}^{k-1} 1/(1 + q**(i-m-j))

their two-index companions (degree and twist split), and exact values of
the q-Euler polynomial E_m(x) at rational x = a/d, obtained by working at
base q = r**d so that q**x = r**a stays rational.

Exact entry points take int/Fraction arguments and return Fractions;
``qeuler_poly_numeric`` is the floating companion.  The ``*_residual``
functions package the distribution and multiplication identities as
"should be exactly zero" quantities so tests and demos can assert them
directly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .numeric import binom, q_bracket

__all__ = [
    "qeuler_higher",
    "qeuler_mixed",
    "qeuler_poly_exact",
    "qeuler_poly_numeric",
    "euler_classical",
    "distribution_residual",
    "multiplication_residual_x0",
    "classical_multiplication_residual",
]


def _check_q(q):
    """Validate the base of a closed-form evaluation; report exactness."""
    if isinstance(q, float):
        exact = False
    elif isinstance(q, (int, Fraction)):
        q = Fraction(q)
        exact = True
    else:
        raise DomainError(f"q must be a rational or a float, got {q!r}")
    if q <= 0 or q == 1:
        raise DomainError(f"q must be positive and != 1, got {q}")
    return q, exact


def qeuler_higher(m, k, q):
    """Order-k q-Euler number E_m^(k)(q), exact for rational q.

    For k = 1 these are the ordinary q-Euler numbers: E_0 = (1+q)/2,
    E_1 = -1/2 for every q, E_2 = (1-q)/(2(1+q**2)).  The denominators
    1 + q**(i-m-j) never vanish for positive q, but the guard is kept so
    a future extension of the domain fails loudly rather than wrongly.
    """
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    q, exact = _check_q(q)
    total = Fraction(0) if exact else 0.0
    for i in range(m + 1):
        prod = Fraction(1) if exact else 1.0
        for j in range(k):
            den = 1 + q ** (i - m - j)
            if den == 0:
                raise DomainError(f"vanishing denominator 1 + q**{i - m - j}")
            prod /= den
        term = binom(m, i) * prod
        total += -term if i % 2 else term
    return (1 + q) ** k / (1 - q) ** m * total


def qeuler_mixed(kdeg, m, q):
    """Two-index q-Euler number: degree kdeg with twist index m.

    E_{kdeg,m}(q) = (1+q)/(1-q)**kdeg *
                    sum_{i=0}^{kdeg} C(kdeg,i) (-1)**i / (1 + q**(i-m)).

    The diagonal kdeg = m recovers ``qeuler_higher(m, 1, q)``.  These
    off-diagonal values are exactly the coefficients that appear in the
    multiplication identity (see ``multiplication_residual_x0``).
    """
    if not isinstance(kdeg, int) or kdeg < 0:
        raise DomainError(f"kdeg must be a nonnegative integer, got {kdeg!r}")
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    q, exact = _check_q(q)
    total = Fraction(0) if exact else 0.0
    for i in range(kdeg + 1):
        den = 1 + q ** (i - m)
        if den == 0:
            raise DomainError(f"vanishing denominator 1 + q**{i - m}")
        term = binom(kdeg, i) / den
        total += -term if i % 2 else term
    return (1 + q) / (1 - q) ** kdeg * total


def qeuler_poly_exact(m, r, d, a):
    """Exact q-Euler polynomial value E_m(a/d) at base q = r**d.

    Returns (1+q)/(1-q)**m * sum_{j=0}^{m} C(m,j) (-1)**j r**(a*j) / (1 + q**(j-m))
    as a Fraction; the substitution q**(a/d) = r**a keeps everything
    rational.  With a = 0 this reduces to ``qeuler_higher(m, 1, r**d)``,
    and with d = 1 it gives E_m(a) at base r itself.
    """
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if not isinstance(a, int) or not isinstance(d, int) or a < 0 or d < 1:
        raise DomainError(f"need integers a >= 0 and d >= 1, got a={a!r}, d={d!r}")
    r = Fraction(r)
    if not 0 < r < 1:
        raise DomainError(f"r must be a rational in (0, 1), got {r}")
    q = r**d
    total = Fraction(0)
    for j in range(m + 1):
        den = 1 + q ** (j - m)
        term = binom(m, j) * r ** (a * j) / den
        total += -term if j % 2 else term
    return (1 + q) / (1 - q) ** m * total


def qeuler_poly_numeric(m, q, x):
    """Floating q-Euler polynomial value E_m(x) for real x >= 0, 0 < q < 1."""
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    q = float(q)
    x = float(x)
    if not 0 < q < 1:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x}")
    qx = q**x
    total = 0.0
    for j in range(m + 1):
        term = binom(m, j) * qx**j / (1 + q ** (j - m))
        total += -term if j % 2 else term
    return (1 + q) / (1 - q) ** m * total


@lru_cache(maxsize=None)
def _euler_first(n):
    # E_0 = 1 and sum_{j=0}^{n} C(n,j) E_j + E_n = 2*[n == 0],
    # i.e. the numbers generated by 2/(e^t + 1).
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(n):
        acc += binom(n, j) * _euler_first(j)
    return -acc / 2


@lru_cache(maxsize=None)
def _euler_order(n, k):
    if k == 1:
        return _euler_first(n)
    return sum(
        (binom(n, j) * _euler_order(j, k - 1) * _euler_first(n - j) for j in range(n + 1)),
        Fraction(0),
    )


def euler_classical(n, k=1):
    """Classical Euler number E_n^(k) of order k (generated by (2/(e^t+1))**k).

    E_0 = 1, E_1 = -1/2, E_2 = 0, E_3 = 1/4 for k = 1; order k is the
    k-fold binomial convolution of the order-1 sequence.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    return _euler_order(n, k)


def distribution_residual(n, d, x, r):
    """Distribution identity residual (exactly zero for odd d).

    Computes E_n(x) at base q = r minus
    ((1+q)/(1+q**d)) [d]_q**n sum_{i=0}^{d-1} (-1)**i q**(-n*i) E_n((x+i)/d)
    where the inner polynomial values live at base q**d.  Integer x >= 0
    keeps every term rational, so the return value is an exact Fraction.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(d, int) or d < 1 or d % 2 == 0:
        raise DomainError(f"d must be an odd positive integer, got {d!r}")
    if not isinstance(x, int) or x < 0:
        raise DomainError(f"x must be a nonnegative integer, got {x!r}")
    r = Fraction(r)
    lhs = qeuler_poly_exact(n, r, 1, x)
    rhs = Fraction(0)
    for i in range(d):
        term = r ** (-n * i) * qeuler_poly_exact(n, r, d, x + i)
        rhs += -term if i % 2 else term
    rhs *= (1 + r) / (1 + r**d) * q_bracket(d, r) ** n
    return lhs - rhs


def multiplication_residual_x0(m, n, r):
    """Multiplication identity residual at x = 0 (exactly zero for odd n).

    E_m(q) - ((1+q)/(1+q**n)) [n]_q**m E_m(q**n)
      = ((1+q)/(1+q**n)) sum_{k=0}^{m-1} C(m,k) [n]_q**k E_{k,m}(q**n)
                         sum_{j=1}^{n-1} q**(-(m-k)*j) (-1)**j [j]_q**(m-k)

    with E_{k,m} the two-index numbers of ``qeuler_mixed``.  The left
    side minus the right side is returned as an exact Fraction.
    """
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise DomainError(f"n must be an odd positive integer, got {n!r}")
    r = Fraction(r)
    if r <= 0 or r == 1:
        raise DomainError(f"r must be a positive rational != 1, got {r}")
    rn = r**n
    ratio = (1 + r) / (1 + rn)
    lhs = qeuler_higher(m, 1, r) - ratio * q_bracket(n, r) ** m * qeuler_higher(m, 1, rn)
    rhs = Fraction(0)
    for k in range(m):
        inner = Fraction(0)
        for j in range(1, n):
            term = r ** (-(m - k) * j) * q_bracket(j, r) ** (m - k)
            inner += -term if j % 2 else term
        rhs += binom(m, k) * q_bracket(n, r) ** k * qeuler_mixed(k, m, rn) * inner
    rhs *= ratio
    return lhs - rhs


def classical_multiplication_residual(m, n):
    """q -> 1 limit of the multiplication identity, as an exact residual.

    (1 - n**m) E_m = sum_{k=0}^{m-1} C(m,k) n**k E_k sum_{j=1}^{n-1} (-1)**j j**(m-k)
    for odd n; returns LHS - RHS as a Fraction (zero when the identity holds).
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise DomainError(f"n must be an odd positive integer, got {n!r}")
    lhs = (1 - Fraction(n) ** m) * euler_classical(m)
    rhs = Fraction(0)
    for k in range(m):
        inner = sum(
            (Fraction(-1) ** j * Fraction(j) ** (m - k) for j in range(1, n)),
            Fraction(0),
        )
        rhs += binom(m, k) * Fraction(n) ** k * euler_classical(k) * inner
    return lhs - rhs
