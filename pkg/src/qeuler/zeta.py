"""q-analogue Euler zeta functions, their Hurwitz forms, and L-series.

Two evaluation routes are kept deliberately separate:

* ``*_direct`` -- the defining alternating Dirichlet series, valid for
  Re(s) >= 1 only (the domain is enforced, never silently widened).
  These exist as oracles for the continuation route.

* the binomial continuation -- for 0 < q < 1 and x > 0,

      zeta_H(s, x) = (1+q) (1-q)**s sum_{j>=0} C(s+j-1, j) q**(x*j) / (1 + q**(s+j))

  converges for every complex s: expanding [x+n]**(-s) in powers of
  q**(x+n) and resumming the geometric n-sum term by term turns the
  series in n into a series in j whose terms decay like q**(x*j).  At a
  negative integer s = -m the binomial coefficients vanish for j > m, so
  the series terminates and reproduces the exact q-Euler polynomial
  values (the ``*_neg_int_exact`` functions compute that truncation in
  rational arithmetic).

Series are driven by a :class:`PrecisionPolicy`: stopping needs
``consecutive_small`` successive terms below eps * max(1, |partial|)
AND a geometric tail bound below the same threshold; the bound uses the
larger of the a-priori ratio (q**x, resp. q**Re(s)) and the observed
recent term ratio.  Exhausting ``max_terms`` raises
:class:`~qeuler.errors.NonConvergenceError` carrying the partial value;
a continuation denominator within 1e-12 of zero raises
:class:`~qeuler.errors.NearSingularError` naming the term index.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import DirichletCharacter, generalized_qeuler
from .errors import DomainError, NearSingularError, NonConvergenceError
from .euler_numbers import qeuler_poly_exact
from .numeric import gen_binom, q_bracket

__all__ = [
    "PrecisionPolicy",
    "SeriesValue",
    "hurwitz_zeta_q",
    "hurwitz_zeta_q_direct",
    "hurwitz_neg_int_exact",
    "euler_zeta_q",
    "euler_zeta_q_direct",
    "euler_zeta_neg_int_exact",
    "l_series",
    "l_series_direct",
    "l_neg_int_exact",
    "l_neg_int_decomposition",
    "partial_zeta",
    "partial_zeta_direct",
    "partial_zeta_neg_int_exact",
]

NEAR_SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class PrecisionPolicy:
    """Stopping rule for the series evaluators."""

    eps: float = 1e-12
    max_terms: int = 10_000
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError(f"eps must be positive, got {self.eps!r}")
        if not isinstance(self.max_terms, int) or self.max_terms < 1:
            raise DomainError(f"max_terms must be a positive integer, got {self.max_terms!r}")
        if not isinstance(self.consecutive_small, int) or self.consecutive_small < 1:
            raise DomainError(
                f"consecutive_small must be a positive integer, got {self.consecutive_small!r}"
            )


@dataclass(frozen=True)
class SeriesValue:
    """A series evaluation: value, tail bound, cost, and which route ran."""

    value: complex
    abs_error_estimate: float
    terms_used: int
    method: str


_TERMINATED = object()


def _sum_series(terms, ratio_bound, policy, method):
    """Drive a term generator under the stopping rule.

    ``terms`` yields complex term values, or the ``_TERMINATED`` sentinel
    when every remaining term is exactly zero (then the partial sum is
    the exact series value).  ``ratio_bound`` is the a-priori limit of
    the term ratio, in [0, 1).
    """
    total = complex(0)
    small_run = 0
    last_nonzero = 0.0
    ratio = ratio_bound
    tail = math.inf
    n = 0
    for term in terms:
        if term is _TERMINATED:
            return SeriesValue(total, 0.0, n, method)
        n += 1
        total += term
        a = abs(term)
        if a > 0:
            if last_nonzero > 0:
                ratio = max(ratio_bound, a / last_nonzero)
            last_nonzero = a
            tail = last_nonzero * ratio / (1 - ratio) if ratio < 1 else math.inf
        threshold = policy.eps * max(1.0, abs(total))
        small_run = small_run + 1 if a <= threshold else 0
        if small_run >= policy.consecutive_small and tail <= threshold:
            return SeriesValue(total, tail, n, method)
        if n >= policy.max_terms:
            partial = SeriesValue(total, tail, n, method)
            raise NonConvergenceError(
                f"no convergence in {n} terms (method {method}); "
                f"partial value {total}",
                partial=partial,
            )
    return SeriesValue(total, 0.0, n, method)


def _check_base(q):
    q = float(q)
    if not 0 < q < 1:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    return q


def _check_exact_base(r):
    r = Fraction(r)
    if not 0 < r < 1:
        raise DomainError(f"r must be a rational in (0, 1), got {r}")
    return r


def _rpow(base, s):
    """base**s for positive real base and complex s, via the real log."""
    if isinstance(s, complex):
        return cmath.exp(s * math.log(base))
    return base**s


def hurwitz_zeta_q(s, x, q, policy=None):
    """Hurwitz-type q-Euler zeta zeta_H(s, x) by the binomial continuation.

    Defined for all complex s when 0 < q < 1 and x > 0.  At s = -m the
    series terminates after m+1 terms and agrees with the exact rational
    value of ``hurwitz_neg_int_exact``.
    """
    policy = policy or PrecisionPolicy()
    s = complex(s)
    x = float(x)
    q = _check_base(q)
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    prefactor = (1 + q) * _rpow(1 - q, s)
    qx = q**x

    def terms():
        coeff = complex(1)  # C(s+j-1, j)
        qxj = 1.0  # q**(x*j)
        qsj = _rpow(q, s)  # q**(s+j)
        j = 0
        while True:
            if coeff == 0:
                yield _TERMINATED
                return
            den = 1 + qsj
            if abs(den) < NEAR_SINGULAR_TOL:
                raise NearSingularError(
                    f"denominator 1 + q**(s+j) within {NEAR_SINGULAR_TOL} of zero "
                    f"at term j={j} (s={s}, q={q})",
                    term_index=j,
                )
            yield prefactor * coeff * qxj / den
            coeff *= (s + j) / (j + 1)
            qxj *= qx
            qsj *= q
            j += 1

    return _sum_series(terms(), qx, policy, "continuation")


def hurwitz_zeta_q_direct(s, x, q, policy=None):
    """Defining series sum_{n>=0} (-1)**n q**(s*n) / [n+x]**s, Re(s) >= 1.

    Oracle route; raises DomainError left of Re(s) = 1 instead of
    pretending the series still means anything there.
    """
    policy = policy or PrecisionPolicy()
    s = complex(s)
    x = float(x)
    q = _check_base(q)
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    if s.real < 1:
        raise DomainError(f"direct series needs Re(s) >= 1, got Re(s) = {s.real}")
    prefactor = 1 + q

    def terms():
        qsn = complex(1)  # q**(s*n)
        qnx = q**x  # q**(n+x)
        sign = 1
        while True:
            bracket = (1 - qnx) / (1 - q)
            yield prefactor * sign * qsn / _rpow(bracket, s)
            qsn *= _rpow(q, s)
            qnx *= q
            sign = -sign

    return _sum_series(terms(), q**s.real, policy, "direct")


def _hurwitz_trunc_exact(m, r, d, a):
    """Exact truncation of the continuation at s = -m (m >= 0) and x = a/d,
    evaluated at base q = r**d so q**x = r**a is rational."""
    q = r**d
    total = Fraction(0)
    for j in range(m + 1):
        total += gen_binom(-m, j) * r ** (a * j) / (1 + q ** (j - m))
    return (1 + q) * total / (1 - q) ** m


def hurwitz_neg_int_exact(m, r, d, a):
    """Exact rational zeta_H(-m, a/d) at base q = r**d, for m >= 1.

    Equals ``qeuler_poly_exact(m, r, d, a)``: the terminating
    continuation reproduces the q-Euler polynomial values.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    if not isinstance(a, int) or not isinstance(d, int) or d < 1 or a < 0:
        raise DomainError(f"need integers a >= 0 and d >= 1, got a={a!r}, d={d!r}")
    r = _check_exact_base(r)
    return _hurwitz_trunc_exact(m, r, d, a)


def euler_zeta_q(s, q, policy=None):
    """q-Euler zeta zeta_E(s) = -q**s * zeta_H(s, 1), by continuation."""
    h = hurwitz_zeta_q(s, 1, q, policy)
    qs = _rpow(float(q), complex(s))
    return SeriesValue(-qs * h.value, abs(qs) * h.abs_error_estimate, h.terms_used, h.method)


def euler_zeta_q_direct(s, q, policy=None):
    """Defining series sum_{n>=1} (-1)**n q**(s*n) / [n]**s, Re(s) >= 1."""
    policy = policy or PrecisionPolicy()
    s = complex(s)
    q = _check_base(q)
    if s.real < 1:
        raise DomainError(f"direct series needs Re(s) >= 1, got Re(s) = {s.real}")
    prefactor = 1 + q

    def terms():
        qsn = _rpow(q, s)  # q**(s*n)
        qn = q  # q**n
        sign = -1
        while True:
            bracket = (1 - qn) / (1 - q)
            yield prefactor * sign * qsn / _rpow(bracket, s)
            qsn *= _rpow(q, s)
            qn *= q
            sign = -sign

    return _sum_series(terms(), q**s.real, policy, "direct")


def euler_zeta_neg_int_exact(m, r):
    """Exact rational zeta_E(-m) = -r**(-m) * zeta_H(-m, 1) for m >= 0.

    For m >= 1 this equals the m-th q-Euler number (``qeuler_higher(m, 1, r)``);
    at m = 0 the continuation gives -(1+r)/2, the negative of the 0-th
    q-Euler number -- the sign boundary of the interpolation.
    """
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    r = _check_exact_base(r)
    return -(r**-m) * _hurwitz_trunc_exact(m, r, 1, 1)


def _char_weights(chi):
    """(a, chi(a)) pairs over 1 <= a <= d with chi(a) != 0."""
    out = []
    for a in range(1, chi.modulus + 1):
        v = chi(a)
        if v != 0:
            out.append((a, v))
    return out


def l_series(s, chi, q, policy=None):
    """L(s, chi) for all complex s, via the continuation decomposition

    L(s, chi) = ((1+q)/(1+q**d)) [d]_q**(-s)
                sum_{a=1}^{d} chi(a) (-1)**a q**(s*a) zeta_H(s, a/d at base q**d).
    """
    if not isinstance(chi, DirichletCharacter):
        raise DomainError(f"chi must be a DirichletCharacter, got {chi!r}")
    policy = policy or PrecisionPolicy()
    s = complex(s)
    q = _check_base(q)
    d = chi.modulus
    qd = q**d
    pref = (1 + q) / (1 + qd) * _rpow(q_bracket(d, q), -s)
    total = complex(0)
    err = 0.0
    terms_used = 0
    for a, v in _char_weights(chi):
        h = hurwitz_zeta_q(s, a / d, qd, policy)
        w = pref * v.to_complex() * (-1) ** a * _rpow(q, s * a)
        total += w * h.value
        err += abs(w) * h.abs_error_estimate
        terms_used += h.terms_used
    return SeriesValue(total, err, terms_used, "continuation")


def l_series_direct(s, chi, q, policy=None):
    """Defining series sum_{n>=1} chi(n) (-1)**n q**(s*n) / [n]**s, Re(s) >= 1."""
    if not isinstance(chi, DirichletCharacter):
        raise DomainError(f"chi must be a DirichletCharacter, got {chi!r}")
    policy = policy or PrecisionPolicy()
    s = complex(s)
    q = _check_base(q)
    if s.real < 1:
        raise DomainError(f"direct series needs Re(s) >= 1, got Re(s) = {s.real}")
    prefactor = 1 + q

    def terms():
        qsn = complex(1)
        qn = 1.0
        n = 0
        while True:
            n += 1
            qsn *= _rpow(q, s)
            qn *= q
            v = chi(n)
            if v == 0:
                yield complex(0)
                continue
            bracket = (1 - qn) / (1 - q)
            sign = -1 if n % 2 else 1
            yield prefactor * sign * v.to_complex() * qsn / _rpow(bracket, s)

    return _sum_series(terms(), q**s.real, policy, "direct")


def l_neg_int_exact(k, chi, r):
    """L(-k, chi) exactly: the k-th chi-twisted q-Euler number, k >= 1."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    return generalized_qeuler(k, chi, r)


def l_neg_int_decomposition(k, chi, r):
    """L(-k, chi) through the decomposition route, exactly.

    Evaluates the a-sum of :func:`l_series` at s = -k with the rational
    truncation in place of the continuation; agrees with
    :func:`l_neg_int_exact` (exact Fraction for real chi, complex with
    exact rational prestages otherwise).
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if not isinstance(chi, DirichletCharacter):
        raise DomainError(f"chi must be a DirichletCharacter, got {chi!r}")
    r = _check_exact_base(r)
    d = chi.modulus
    pref = (1 + r) / (1 + r**d) * Fraction(q_bracket(d, r)) ** k
    weights = []
    for a in range(1, d + 1):
        v = chi(a)
        if v == 0:
            continue
        c = pref * r ** (-k * a) * _hurwitz_trunc_exact(k, r, d, a)
        weights.append((v, -c if a % 2 else c))
    if chi.order <= 2:
        return sum((v.as_rational() * c for v, c in weights), Fraction(0))
    return sum((v.to_complex() * float(c) for v, c in weights), complex(0))


def _check_partial_args(a, F):
    if not isinstance(F, int) or F < 3 or F % 2 == 0:
        raise DomainError(f"F must be an odd integer >= 3, got {F!r}")
    if not isinstance(a, int) or not 1 <= a <= F:
        raise DomainError(f"a must satisfy 1 <= a <= F, got a={a!r}, F={F!r}")


def partial_zeta(s, a, F, q, policy=None):
    """Partial zeta H(s, a, F): the zeta_E series restricted to n == a (mod F).

    Computed for all complex s through the single-term decomposition

      H(s, a, F) = ((1+q)/(1+q**F)) [F]_q**(-s) (-1)**a q**(s*a)
                   zeta_H(s, a/F at base q**F),

    for odd F >= 3 and 1 <= a <= F (a = F selects the multiples of F).
    """
    _check_partial_args(a, F)
    policy = policy or PrecisionPolicy()
    s = complex(s)
    q = _check_base(q)
    qF = q**F
    h = hurwitz_zeta_q(s, a / F, qF, policy)
    w = (
        (1 + q)
        / (1 + qF)
        * _rpow(q_bracket(F, q), -s)
        * (-1) ** a
        * _rpow(q, s * a)
    )
    return SeriesValue(w * h.value, abs(w) * h.abs_error_estimate, h.terms_used, h.method)


def partial_zeta_direct(s, a, F, q, policy=None):
    """Defining restricted series over n = a, a+F, a+2F, ...; Re(s) >= 1."""
    _check_partial_args(a, F)
    policy = policy or PrecisionPolicy()
    s = complex(s)
    q = _check_base(q)
    if s.real < 1:
        raise DomainError(f"direct series needs Re(s) >= 1, got Re(s) = {s.real}")
    prefactor = 1 + q

    def terms():
        n = a
        qn = q**a
        qsn = _rpow(q, s * a)
        qF = q**F
        qsF = _rpow(q, s * F)
        while True:
            bracket = (1 - qn) / (1 - q)
            sign = -1 if n % 2 else 1
            yield prefactor * sign * qsn / _rpow(bracket, s)
            n += F
            qn *= qF
            qsn *= qsF

    return _sum_series(terms(), q ** (s.real * F), policy, "direct")


def partial_zeta_neg_int_exact(n, a, F, r):
    """Exact rational H(-n, a, F) for n >= 1.

    Summing over a = 1..F partitions the full series, so these values
    add up to ``euler_zeta_neg_int_exact(n, r)`` exactly.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    _check_partial_args(a, F)
    r = _check_exact_base(r)
    rF = r**F
    return (
        (1 + r)
        / (1 + rF)
        * Fraction(q_bracket(F, r)) ** n
        * (-1) ** a
        * r ** (-n * a)
        * _hurwitz_trunc_exact(n, r, F, a)
    )
