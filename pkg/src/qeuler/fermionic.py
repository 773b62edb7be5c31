"""Finite-stage alternating sums over p-adic digit ranges.

The stage-N sum of an integrand f is

    S_N(f) = (1 / [p**N]_{-q}) * sum_{j=0}^{p**N - 1} f(j) (-q)**j ,

an exact rational whenever f maps integers to rationals.  As N grows the
values converge p-adically (the valuation of S_N minus the limit keeps
increasing) whenever v_p(q - 1) >= 1, which :class:`~qeuler.numeric.PAdicQParam`
enforces.  Integrands are finite sums of terms c * [t]_q**a * q**(b*t);
that little language covers everything needed here (moment integrands,
twisted moments) while letting the stage loop update powers of q
incrementally instead of exponentiating at every j.

``higher_order_stage`` is the k-dimensional version: the stage sum over
(x_1, ..., x_k) of [x_1 + ... + x_k]**m * q**(-sum_i (m+i) x_i), computed
by convolving per-axis weight vectors so the cost stays polynomial in
p**N instead of p**(N*k) -- the term cap is still enforced on the
nominal p**(N*k) count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .numeric import PAdicQParam, p_valuation, q_bracket, q_bracket_signed

__all__ = [
    "IntegrandTerm",
    "Integrand",
    "StageReport",
    "stage_sum",
    "convergence_report",
    "higher_order_stage",
    "DEFAULT_TERM_CAP",
]

DEFAULT_TERM_CAP = 10_000_000


@dataclass(frozen=True)
class IntegrandTerm:
    """One term c * [t]_q**bracket_power * q**(exp_coeff * t)."""

    coeff: Fraction
    bracket_power: int
    exp_coeff: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if not isinstance(self.bracket_power, int) or self.bracket_power < 0:
            raise DomainError(f"bracket_power must be >= 0, got {self.bracket_power!r}")
        if not isinstance(self.exp_coeff, int):
            raise DomainError(f"exp_coeff must be an integer, got {self.exp_coeff!r}")


@dataclass(frozen=True)
class Integrand:
    """A finite sum of :class:`IntegrandTerm`; closed under + and rational *."""

    terms: tuple[IntegrandTerm, ...]

    @classmethod
    def term(cls, coeff, bracket_power=0, exp_coeff=0):
        """Single term coeff * [t]**bracket_power * q**(exp_coeff * t)."""
        return cls((IntegrandTerm(Fraction(coeff), bracket_power, exp_coeff),))

    @classmethod
    def constant(cls, c=1):
        return cls.term(c)

    @classmethod
    def moment(cls, m):
        """The integrand [t]_q**m * q**(-(m+1) t) whose stage sums converge
        to the m-th q-Euler number E_m(q)."""
        if not isinstance(m, int) or m < 0:
            raise DomainError(f"m must be a nonnegative integer, got {m!r}")
        return cls.term(1, m, -(m + 1))

    def __add__(self, other):
        if not isinstance(other, Integrand):
            return NotImplemented
        return Integrand(self.terms + other.terms)

    def __rmul__(self, scalar):
        c = Fraction(scalar)
        return Integrand(
            tuple(
                IntegrandTerm(c * t.coeff, t.bracket_power, t.exp_coeff)
                for t in self.terms
            )
        )

    __mul__ = __rmul__

    def evaluate(self, j, q):
        """f(j) at base q, as an exact Fraction (reference path; the stage
        loop uses incremental power updates instead of calling this)."""
        q = Fraction(q)
        br = Fraction(q_bracket(j, q))
        return sum(
            (t.coeff * br**t.bracket_power * q ** (t.exp_coeff * j) for t in self.terms),
            Fraction(0),
        )


@dataclass(frozen=True)
class StageReport:
    """Stage values S_1..S_N with p-adic valuations against a reference.

    ``stages`` is a list of (N, S_N); ``valuations`` holds
    v_p(S_N - reference) per stage (math.inf when the difference is 0)
    and is None when no reference was supplied.
    """

    ctx: PAdicQParam
    stages: list
    reference: Fraction | None
    valuations: list | None


def _stage_range(ctx, N, term_cap, k=1):
    if not isinstance(N, int) or N < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")
    P = ctx.p**N
    if P**k > term_cap:
        raise ResourceLimitError(
            f"stage p**N = {ctx.p}**{N} needs {P**k} terms, over the cap {term_cap}"
        )
    return P


def stage_sum(f, ctx, N, term_cap=DEFAULT_TERM_CAP):
    """Exact stage-N sum S_N(f) = sum_{j<p**N} f(j)(-q)**j / [p**N]_{-q}.

    The constant integrand gives exactly 1 at every stage (p**N is odd).
    """
    if not isinstance(f, Integrand):
        raise DomainError(f"f must be an Integrand, got {f!r}")
    P = _stage_range(ctx, N, term_cap)
    q = ctx.q
    # Per-term state: running value of q**(exp_coeff * j), stepped by q**exp_coeff.
    steps = [q**t.exp_coeff for t in f.terms]
    powers = [Fraction(1)] * len(f.terms)
    bracket = Fraction(0)  # [j]_q, stepped by q**j
    qj = Fraction(1)  # q**j
    sign_pow = Fraction(1)  # (-q)**j
    total = Fraction(0)
    for _ in range(P):
        fj = Fraction(0)
        for idx, t in enumerate(f.terms):
            fj += t.coeff * bracket**t.bracket_power * powers[idx]
            powers[idx] *= steps[idx]
        total += fj * sign_pow
        bracket += qj
        qj *= q
        sign_pow *= -q
    return total / q_bracket_signed(P, q)


def convergence_report(f, ctx, N_max, reference=None, term_cap=DEFAULT_TERM_CAP):
    """Stage values S_1..S_{N_max} and their p-adic distance to ``reference``."""
    stages = [(N, stage_sum(f, ctx, N, term_cap)) for N in range(1, N_max + 1)]
    valuations = None
    if reference is not None:
        reference = Fraction(reference)
        valuations = [p_valuation(S - reference, ctx.p) for _, S in stages]
    return StageReport(ctx=ctx, stages=stages, reference=reference, valuations=valuations)


def higher_order_stage(m, k, ctx, N, term_cap=DEFAULT_TERM_CAP):
    """Stage-N sum for the order-k moment integrand.

    Computes, with P = p**N and all axes running over 0..P-1,

      sum_{x_1..x_k} [x_1+...+x_k]_q**m * q**(-sum_i (m+i) x_i) * (-q)**(sum x_i)
      ------------------------------------------------------------------------
                                 [P]_{-q}**k

    whose p-adic limit in N is the order-k q-Euler number E_m^(k)(q).
    Axis i (1-based) contributes the weight vector (-1)**x * q**(x*(1-(m+i)));
    their convolution reduces the k-fold loop to one pass over digit sums.
    """
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    P = _stage_range(ctx, N, term_cap, k=k)
    q = ctx.q
    combined = [Fraction(1)]
    for i in range(1, k + 1):
        step = -(q ** (1 - (m + i)))
        axis = [Fraction(1)]
        for _ in range(P - 1):
            axis.append(axis[-1] * step)
        new = [Fraction(0)] * (len(combined) + P - 1)
        for s, ws in enumerate(combined):
            if ws == 0:
                continue
            for x, wx in enumerate(axis):
                new[s + x] += ws * wx
        combined = new
    bracket = Fraction(0)  # [s]_q, stepped by q**s
    qj = Fraction(1)
    total = Fraction(0)
    for w in combined:
        if w != 0:
            total += w * bracket**m
        bracket += qj
        qj *= q
    return total / q_bracket_signed(P, q) ** k
