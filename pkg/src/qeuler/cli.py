"""The ``qeuler`` command line: evaluate, tabulate, verify.

Subcommands
    eval    one evaluation -> one JSON record on stdout
    table   sweep one parameter -> CSV (default) or JSON array
    verify  run verification suites -> pass/fail lines (or JSON report)

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 non-convergence.  Exact values are rendered as "num/den" strings that
parse back to the identical rational; numeric values use shortest
round-trip floats.  Identical invocations (including --seed) produce
byte-identical output.  The environment variable QEULER_MAX_TERMS
overrides the default series term cap (explicit --max-terms wins).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from ._verify import SUITES, Check, run_suites
from .characters import characters_mod
from .errors import DomainError, NearSingularError, NonConvergenceError, ResourceLimitError
from .euler_numbers import (
    euler_classical,
    qeuler_higher,
    qeuler_poly_exact,
    qeuler_poly_numeric,
)
from .fermionic import higher_order_stage
from .numeric import PAdicQParam
from .zeta import (
    PrecisionPolicy,
    euler_zeta_neg_int_exact,
    euler_zeta_q,
    euler_zeta_q_direct,
    hurwitz_neg_int_exact,
    hurwitz_zeta_q,
    hurwitz_zeta_q_direct,
    l_neg_int_exact,
    l_series,
    l_series_direct,
    partial_zeta,
    partial_zeta_direct,
    partial_zeta_neg_int_exact,
)

__all__ = ["main"]


# ---------------------------------------------------------------------------
# Argument parsing helpers.


def _parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse rational {text!r}: {exc}") from None


def _parse_s(text):
    parts = text.split(",")
    if len(parts) > 2:
        raise DomainError(f"s must be 're' or 're,im', got {text!r}")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise DomainError(f"cannot parse s {text!r}") from None
    return complex(re, im)


def _parse_char(text):
    try:
        d_text, idx_text = text.split(":")
        d, idx = int(d_text), int(idx_text)
    except ValueError:
        raise DomainError(f"character must be 'modulus:index', got {text!r}") from None
    chars = characters_mod(d)
    if not 0 <= idx < len(chars):
        raise DomainError(f"character index {idx} out of range for modulus {d} (phi = {len(chars)})")
    return chars[idx]


def _parse_int_range(text):
    """'a..b' inclusive, or a single integer."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..")
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise DomainError(f"cannot parse range {text!r} (expected 'a..b')") from None
    if hi < lo:
        raise DomainError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _parse_q_list(text):
    return [_parse_rational(part) for part in text.split(",")]


def _neg_int_s(s):
    """The m >= 0 with s = -m, or None if s is not a nonpositive integer."""
    if s.imag == 0 and s.real <= 0 and s.real == int(s.real):
        return -int(s.real)
    return None


def _iroot(n, d):
    """Exact integer d-th root of n >= 0, or None."""
    if n < 0:
        return None
    lo, hi = 0, 1 << (n.bit_length() // d + 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**d < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**d == n else None


def _exact_root(q, d):
    """Rational r with r**d = q, or a domain error explaining the need."""
    num = _iroot(q.numerator, d)
    den = _iroot(q.denominator, d)
    if num is None or den is None:
        raise DomainError(
            f"exact evaluation at x = a/{d} needs q to be an exact {d}-th power "
            f"of a rational; {q} is not"
        )
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# Output records.


def _value_obj(v):
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, complex):
        # + 0.0 folds IEEE negative zero into plain zero for stable goldens.
        return {"re": v.real + 0.0, "im": v.imag + 0.0}
    return {"re": float(v), "im": 0.0}


def _record(function, params, value, method, err=None, terms=None):
    return {
        "function": function,
        "params": params,
        "value": _value_obj(value),
        "method": method,
        "err": err,
        "terms": terms,
    }


def _cell(v):
    """Render one CSV cell: exact rationals as num/den, floats round-trip."""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        return repr(v.real) if v.imag == 0 else repr(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _real_str(x):
    return str(int(x)) if x == int(x) else repr(x)


def _param_str(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, complex):
        if v.imag:
            return f"{_real_str(v.real)},{_real_str(v.imag)}"
        return _real_str(v.real)
    return v if isinstance(v, str) else str(v)


def _policy_from_args(args):
    max_terms = args.max_terms
    if max_terms is None:
        env = os.environ.get("QEULER_MAX_TERMS")
        if env is not None:
            try:
                max_terms = int(env)
            except ValueError:
                raise DomainError(f"QEULER_MAX_TERMS must be an integer, got {env!r}") from None
    if max_terms is None:
        max_terms = 10_000
    return PrecisionPolicy(
        eps=args.eps, max_terms=max_terms, consecutive_small=args.consecutive_small
    )


def _require(args, names):
    for name in names:
        if getattr(args, name.replace("-", "_"), None) is None:
            raise DomainError(f"--{name} is required for this function")


# ---------------------------------------------------------------------------
# eval


def _eval_record(args):
    policy = _policy_from_args(args)
    fn = args.function
    direct = args.method == "direct"

    if fn == "qeuler":
        _require(args, ["m", "q"])
        k = args.k if args.k is not None else 1
        q = args.q if args.exact else float(args.q)
        value = qeuler_higher(args.m, k, q)
        return _record(
            fn,
            {"m": args.m, "k": k, "q": _param_str(args.q)},
            value,
            "closed-form",
        )

    if fn == "qeuler-poly":
        _require(args, ["m", "q", "x"])
        if args.exact:
            x = _parse_rational(args.x)
            if not 0 <= x:
                raise DomainError(f"x must be nonnegative, got {x}")
            a, d = x.numerator, x.denominator
            r = _exact_root(args.q, d)
            value = qeuler_poly_exact(args.m, r, d, a)
        else:
            value = qeuler_poly_numeric(args.m, float(args.q), float(Fraction(args.x)))
        return _record(
            fn,
            {"m": args.m, "q": _param_str(args.q), "x": args.x},
            value,
            "closed-form",
        )

    if fn == "classical":
        _require(args, ["m"])
        k = args.k if args.k is not None else 1
        return _record(fn, {"m": args.m, "k": k}, euler_classical(args.m, k), "closed-form")

    if fn == "integral-stage":
        _require(args, ["m", "p", "q", "N"])
        k = args.k if args.k is not None else 1
        ctx = PAdicQParam(args.p, args.q)
        value = higher_order_stage(args.m, k, ctx, args.N)
        return _record(
            fn,
            {"m": args.m, "k": k, "p": args.p, "q": _param_str(args.q), "N": args.N},
            value,
            "stage",
        )

    if fn == "zeta":
        _require(args, ["s", "q"])
        params = {"s": _param_str(args.s), "q": _param_str(args.q)}
        if args.exact:
            m = _neg_int_s(args.s)
            if m is None:
                raise DomainError(f"exact zeta needs s a nonpositive integer, got {args.s}")
            return _record(fn, params, euler_zeta_neg_int_exact(m, args.q), "exact-negative-integer")
        sv = (euler_zeta_q_direct if direct else euler_zeta_q)(args.s, float(args.q), policy)
        return _record(fn, params, sv.value, sv.method, sv.abs_error_estimate, sv.terms_used)

    if fn == "hurwitz":
        _require(args, ["s", "q", "x"])
        params = {"s": _param_str(args.s), "x": args.x, "q": _param_str(args.q)}
        if args.exact:
            m = _neg_int_s(args.s)
            if m is None or m == 0:
                raise DomainError(f"exact hurwitz needs s a negative integer, got {args.s}")
            x = _parse_rational(args.x)
            if not x > 0:
                raise DomainError(f"x must be positive, got {x}")
            a, d = x.numerator, x.denominator
            r = _exact_root(args.q, d)
            return _record(
                fn, params, hurwitz_neg_int_exact(m, r, d, a), "exact-negative-integer"
            )
        x = float(Fraction(args.x))
        sv = (hurwitz_zeta_q_direct if direct else hurwitz_zeta_q)(args.s, x, float(args.q), policy)
        return _record(fn, params, sv.value, sv.method, sv.abs_error_estimate, sv.terms_used)

    if fn == "lseries":
        _require(args, ["s", "q", "char"])
        chi = _parse_char(args.char)
        params = {"s": _param_str(args.s), "char": args.char, "q": _param_str(args.q)}
        if args.exact:
            k = _neg_int_s(args.s)
            if k is None or k == 0:
                raise DomainError(f"exact lseries needs s a negative integer, got {args.s}")
            return _record(fn, params, l_neg_int_exact(k, chi, args.q), "exact-negative-integer")
        sv = (l_series_direct if direct else l_series)(args.s, chi, float(args.q), policy)
        return _record(fn, params, sv.value, sv.method, sv.abs_error_estimate, sv.terms_used)

    if fn == "partial":
        _require(args, ["s", "q", "a", "F"])
        params = {"s": _param_str(args.s), "a": args.a, "F": args.F, "q": _param_str(args.q)}
        if args.exact:
            n = _neg_int_s(args.s)
            if n is None or n == 0:
                raise DomainError(f"exact partial needs s a negative integer, got {args.s}")
            return _record(
                fn, params, partial_zeta_neg_int_exact(n, args.a, args.F, args.q),
                "exact-negative-integer",
            )
        sv = (partial_zeta_direct if direct else partial_zeta)(
            args.s, args.a, args.F, float(args.q), policy
        )
        return _record(fn, params, sv.value, sv.method, sv.abs_error_estimate, sv.terms_used)

    raise DomainError(f"unknown function {fn!r}")


def _cmd_eval(args):
    record = _eval_record(args)
    print(json.dumps(record))
    return 0


# ---------------------------------------------------------------------------
# table


def _table_rows(args):
    """Yield (sweep_name, sweep_value, record) per row in sweep order."""
    policy = _policy_from_args(args)
    fn = args.function
    sweeps = [name for name in ("m_range", "s_grid", "q_list") if getattr(args, name) is not None]
    if len(sweeps) != 1:
        raise DomainError("exactly one of --m, --s-grid, --q-list must sweep")
    sweep = sweeps[0]

    if fn == "qeuler":
        k = args.k if args.k is not None else 1
        if sweep == "m_range":
            _require(args, ["q"])
            for m in args.m_range:
                q = args.q if args.exact else float(args.q)
                yield "m", m, _record(
                    fn, {"m": m, "k": k, "q": _param_str(args.q)},
                    qeuler_higher(m, k, q), "closed-form",
                )
        elif sweep == "q_list":
            if args.m_single is None:
                raise DomainError("--q-list sweep for qeuler needs a fixed --m like '2'")
            for q in args.q_list:
                qq = q if args.exact else float(q)
                yield "q", _param_str(q), _record(
                    fn, {"m": args.m_single, "k": k, "q": _param_str(q)},
                    qeuler_higher(args.m_single, k, qq), "closed-form",
                )
        else:
            raise DomainError("table qeuler sweeps --m or --q-list")
        return

    if fn == "classical":
        if sweep != "m_range":
            raise DomainError("table classical sweeps --m")
        k = args.k if args.k is not None else 1
        for m in args.m_range:
            yield "m", m, _record(fn, {"m": m, "k": k}, euler_classical(m, k), "closed-form")
        return

    if fn == "zeta":
        if sweep == "s_grid":
            _require(args, ["q"])
            for s_int in args.s_grid:
                params = {"s": str(s_int), "q": _param_str(args.q)}
                if args.exact:
                    if s_int > 0:
                        raise DomainError(
                            f"exact zeta table needs a nonpositive integer grid, got s={s_int}"
                        )
                    rec = _record(
                        fn, params, euler_zeta_neg_int_exact(-s_int, args.q),
                        "exact-negative-integer",
                    )
                else:
                    sv = euler_zeta_q(s_int, float(args.q), policy)
                    rec = _record(
                        fn, params, sv.value, sv.method, sv.abs_error_estimate, sv.terms_used
                    )
                yield "s", s_int, rec
        elif sweep == "q_list":
            _require(args, ["s"])
            for q in args.q_list:
                params = {"s": _param_str(args.s), "q": _param_str(q)}
                if args.exact:
                    m = _neg_int_s(args.s)
                    if m is None:
                        raise DomainError(
                            f"exact zeta needs s a nonpositive integer, got {args.s}"
                        )
                    rec = _record(
                        fn, params, euler_zeta_neg_int_exact(m, q), "exact-negative-integer"
                    )
                else:
                    sv = euler_zeta_q(args.s, float(q), policy)
                    rec = _record(
                        fn, params, sv.value, sv.method, sv.abs_error_estimate, sv.terms_used
                    )
                yield "q", _param_str(q), rec
        else:
            raise DomainError("table zeta sweeps --s-grid or --q-list")
        return

    raise DomainError(f"table supports qeuler | classical | zeta, got {fn!r}")


def _cmd_table(args):
    rows = list(_table_rows(args))
    if args.format == "json":
        print(json.dumps([rec for _, _, rec in rows], indent=2))
        return 0
    name = rows[0][0] if rows else "param"
    print(f"{name},value")
    for _, sweep_value, rec in rows:
        v = rec["value"]
        if "num" in v:
            cell = _cell(Fraction(v["num"], v["den"]))
        elif v["im"] == 0:
            cell = repr(v["re"])
        else:
            cell = repr(complex(v["re"], v["im"]))
        print(f"{sweep_value},{cell}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    checks = run_suites(names, seed=args.seed)
    if args.inject_failure:
        checks.append(Check("injected-failure", False, "requested via --inject-failure"))
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "suites": names,
                    "seed": args.seed,
                    "passed": not failed,
                    "checks": [
                        {"name": c.name, "passed": c.passed, "detail": c.detail}
                        for c in checks
                    ],
                },
                indent=2,
            )
        )
    else:
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            detail = f": {c.detail}" if (not c.passed and c.detail) else ""
            print(f"{status} {c.name}{detail}")
        if failed:
            print(f"FAILED {len(failed)} of {len(checks)} checks")
        else:
            print(f"ok {len(checks)} checks")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qeuler",
        description="Evaluate q-Euler numbers, zeta continuations, and L-series.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_policy(p):
        p.add_argument("--eps", type=float, default=1e-12, help="stopping threshold")
        p.add_argument("--max-terms", type=int, default=None,
                       help="series term cap (default 10000; env QEULER_MAX_TERMS)")
        p.add_argument("--consecutive-small", type=int, default=3,
                       help="small terms required before stopping")

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument(
        "function",
        choices=["zeta", "hurwitz", "lseries", "partial", "qeuler", "qeuler-poly",
                 "classical", "integral-stage"],
    )
    p_eval.add_argument("--q", type=_parse_rational, help="base q, as 'a/b' or decimal")
    p_eval.add_argument("--s", type=_parse_s, help="s as 're' or 're,im'")
    p_eval.add_argument("--x", help="polynomial argument x (rational 'a/b' or decimal)")
    p_eval.add_argument("--char", help="Dirichlet character as 'modulus:index'")
    p_eval.add_argument("--m", type=int, help="degree")
    p_eval.add_argument("--k", type=int, help="order (default 1)")
    p_eval.add_argument("--a", type=int, help="residue class for partial zeta")
    p_eval.add_argument("--F", type=int, help="modulus for partial zeta")
    p_eval.add_argument("--p", type=int, help="odd prime for integral-stage")
    p_eval.add_argument("--N", type=int, help="stage index for integral-stage")
    p_eval.add_argument("--exact", action="store_true", help="exact rational path")
    p_eval.add_argument("--method", choices=["continuation", "direct"],
                        default="continuation", help="numeric series route")
    add_policy(p_eval)
    p_eval.set_defaults(run=_cmd_eval)

    p_table = sub.add_parser("table", help="sweep one parameter into a table")
    p_table.add_argument("function", choices=["qeuler", "classical", "zeta"])
    p_table.add_argument("--q", type=_parse_rational, help="fixed base q")
    p_table.add_argument("--s", type=_parse_s, help="fixed s (for --q-list sweeps)")
    p_table.add_argument("--m", dest="m_range", type=_parse_int_range, default=None,
                         help="m sweep 'a..b'")
    p_table.add_argument("--m-fixed", dest="m_single", type=int, default=None,
                         help="fixed m (for --q-list sweeps)")
    p_table.add_argument("--k", type=int, help="order (default 1)")
    p_table.add_argument("--s-grid", dest="s_grid", type=_parse_int_range, default=None,
                         help="integer s sweep 'a..b'")
    p_table.add_argument("--q-list", dest="q_list", type=_parse_q_list, default=None,
                         help="comma-separated q sweep")
    p_table.add_argument("--exact", action="store_true", help="exact rational rows")
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    add_policy(p_table)
    p_table.set_defaults(run=_cmd_table)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite", nargs="?", default="all",
                          choices=[*SUITES, "all"])
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.add_argument("--inject-failure", action="store_true",
                          help="append one failing check (exit-code testing)")
    p_verify.set_defaults(run=_cmd_verify)

    return parser


_VALUE_OPTS = frozenset(
    {"--s", "--s-grid", "--m", "--m-fixed", "--x", "--q", "--q-list", "--eps"}
)


def _merge_negative_values(argv):
    """Join value options with a following negative-looking token.

    argparse treats a bare ``-3..0`` as an option string; rewriting
    ``--s-grid -3..0`` to ``--s-grid=-3..0`` lets ranges, negative s,
    and scientific eps through unambiguously.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTS and i + 1 < len(argv):
            nxt = argv[i + 1]
            if len(nxt) >= 2 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == "."):
                out.append(f"{tok}={nxt}")
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def main(argv=None):
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_negative_values(list(argv)))
    try:
        return args.run(args)
    except NonConvergenceError as exc:
        print(f"qeuler: non-convergence: {exc}", file=sys.stderr)
        return 3
    except (DomainError, ResourceLimitError, NearSingularError, ValueError) as exc:
        print(f"qeuler: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
