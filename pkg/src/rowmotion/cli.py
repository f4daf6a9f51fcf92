"""Command-line driver: orbit tables, certificates, verification suites, and
q-rowmotion experiments, with deterministic JSON/CSV output.

Exit codes: 0 answer produced / checks pass, 1 verification failure,
2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import dynamics, families, qrow, statistics as st, verify
from .decompose import decompose, q_decompose
from .poset import CapExceededError, enumerate_antichains, enumerate_ideals
from .qpoly import Polynomial, RationalFunction, q_binomial, q_number

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _emit(args, payload):
    if getattr(args, "format", "json") == "csv":
        _emit_csv(payload)
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def _emit_csv(payload):
    rows = payload.get("rows")
    if rows is None:
        raise ValueError("this command has no CSV table form")
    if rows:
        header = list(rows[0])
        print(",".join(header))
        for row in rows:
            print(",".join(str(row[h]) for h in header))


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


# -- orbits ---------------------------------------------------------------------------


def cmd_orbits(args) -> int:
    P = families.from_specifier(args.family)
    variant = args.variant
    if args.level != "combinatorial":
        return _lifted_orbit_payload(args, P)
    if variant.startswith("q:"):
        r, s = (int(t) for t in variant[2:].split(","))
        alphabet = _alphabet(args, r, s)
        orbits = qrow.q_orbits(P, alphabet)
        total = qrow.labeling_count(P, alphabet)
        sizes = [len(o) for o in orbits]
        reps = ["".join(map(str, o[0])) for o in orbits]
    else:
        if variant == "rowmotion":
            step = lambda I: dynamics.rowmotion(P, I)
            space = enumerate_ideals(P)
        elif variant == "gyration":
            step = dynamics.gyration(P)
            space = enumerate_ideals(P)
        elif variant == "antichain":
            step = lambda A: dynamics.antichain_rowmotion(P, A)
            space = enumerate_antichains(P)
        elif variant.startswith("sigma:"):
            sigma = tuple(int(t) for t in variant[6:].split(","))
            step = dynamics.rowmotion_sigma(P, sigma)
            space = enumerate_ideals(P)
        else:
            raise ValueError(f"unknown variant {variant!r}")
        orbits = dynamics.orbit_partition(step, space)
        total = len(space)
        sizes = [o.period for o in orbits]
        reps = [str(list(o.states[0].members)) for o in orbits]
    payload = {
        "family": args.family,
        "variant": variant,
        "orbit_sizes": sizes,
        "representatives": reps,
        "total_states": total,
        "sum_check": sum(sizes) == total,
        "rows": [
            {"orbit": k, "size": sz, "representative": rep}
            for k, (sz, rep) in enumerate(zip(sizes, reps))
        ],
    }
    _emit(args, payload)
    return EXIT_OK if payload["sum_check"] else EXIT_FAIL


def _lifted_orbit_payload(args, P) -> int:
    from . import lifted

    alpha = Fraction(args.alpha) if args.alpha else None
    omega = Fraction(args.omega) if args.omega else None
    values = _start_values(args, P)
    if args.level == "pl":
        pt = lifted.PLPoint(P, values,
                            alpha if alpha is not None else Fraction(0),
                            omega if omega is not None else Fraction(1))
    else:
        pt = lifted.BPoint(P, values,
                           alpha if alpha is not None else Fraction(1),
                           omega if omega is not None else Fraction(1))
    sigma = None
    if args.variant.startswith("sigma:"):
        sigma = tuple(int(t) for t in args.variant[6:].split(","))
    elif args.variant != "rowmotion":
        raise ValueError("lifted levels support variants rowmotion and sigma:<perm>")
    states = lifted.lifted_orbit(pt, sigma=sigma, max_iter=args.max_iter)
    if args.level == "pl":
        laws = all(
            sum(lifted.pl_t_signed(s, p) for s in states) == 0
            for p in range(P.n)
        )
    else:
        laws = True
        for p in range(P.n):
            prod = Fraction(1)
            for s in states:
                prod *= lifted.b_t_ratio(s, p)
            laws = laws and prod == 1
    payload = {
        "family": args.family,
        "level": args.level,
        "variant": args.variant,
        "alpha": _frac(pt.alpha),
        "omega": _frac(pt.omega),
        "start": [_frac(v) for v in pt.values],
        "period": len(states),
        "toggleability_orbit_law": laws,
        "rows": [{"step": k, "values": [_frac(v) for v in s.values]}
                 for k, s in enumerate(states)],
    }
    _emit(args, payload)
    return EXIT_OK if laws else EXIT_FAIL


def _start_values(args, P):
    from . import lifted

    spec = args.start
    if spec.startswith("random:"):
        rng = random.Random(int(spec.split(":", 1)[1]))
        return [lifted.random_fraction(rng) for _ in range(P.n)]
    if spec.startswith("file:"):
        with open(spec.split(":", 1)[1]) as fh:
            data = json.load(fh)
        return [Fraction(v) for v in data]
    raise ValueError("start must be 'random:<seed>' or 'file:<path>'")


def _alphabet(args, r, s):
    theta = getattr(args, "theta", "default") or "default"
    if theta == "default":
        return qrow.FlavorAlphabet.default(r, s)
    if theta.startswith("random:"):
        rng = random.Random(int(theta.split(":", 1)[1]))
        return qrow.FlavorAlphabet.random(r, s, rng)
    raise ValueError("theta must be 'default' or 'random:<seed>'")


# -- decompose -------------------------------------------------------------------------


def cmd_decompose(args) -> int:
    P = families.from_specifier(args.family)
    stat = st.parse_statistic(P, args.stat)
    if args.q:
        dec = q_decompose(P, stat)
    else:
        dec = decompose(P, stat)
    if dec is None:
        _emit(args, {"family": args.family, "stat": args.stat,
                     "status": "NOT IN SPAN"})
        return EXIT_OK
    payload = {
        "family": args.family,
        "stat": args.stat,
        "status": "ok",
        "constant": f"c = {dec.constant}",
        "certificate": dec.to_json_dict(),
    }
    _emit(args, payload)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------------


def cmd_verify(args) -> int:
    result = verify.run_suite(
        args.suite,
        max_cells=args.max_cells,
        max_size=args.max,
        seed=args.seed,
        jobs=args.jobs,
    )
    payload = result.to_json_dict()
    payload["rows"] = [
        {"check": c.label, "passed": c.passed, "detail": c.detail}
        for c in result.checks
    ]
    _emit(args, payload)
    return EXIT_OK if result.passed else EXIT_FAIL


# -- qrow ------------------------------------------------------------------------------


def cmd_qrow(args) -> int:
    P = families.from_specifier(args.family)
    alphabet = _alphabet(args, args.r, args.s)
    stat = st.parse_statistic(P, args.stat)
    expected = parse_q_expression(args.expect) if args.expect else None
    report = qrow.q_homomesy_check(P, alphabet, stat, expected=expected)
    payload = {
        "family": args.family,
        "r": args.r,
        "s": args.s,
        "theta": list(alphabet.theta),
        "stat": args.stat,
        "orbit_sizes": list(report.orbit_sizes),
        "orbit_averages": [_frac(a) for a in report.orbit_averages],
        "is_homomesic": report.is_homomesic,
    }
    if expected is not None:
        payload["expected_at_q"] = _frac(report.expected)
        payload["matches_expected"] = report.matches_expected
    _emit(args, payload)
    if expected is not None:
        return EXIT_OK if report.matches_expected else EXIT_FAIL
    return EXIT_OK if report.is_homomesic else EXIT_FAIL


# -- q-expression grammar ----------------------------------------------------------------
#
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := base ('^' int)?
#   base   := 'q' | int | 'qnum(n)' | 'qfact(n)' | 'qbinom(n,k)' | '(' expr ')'


def parse_q_expression(text: str) -> RationalFunction:
    tokens = _tokenize_q(text)
    value, pos = _parse_expr(tokens, 0)
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in q-expression: {tokens[pos:]}")
    return value


def _tokenize_q(text):
    out = []
    k = 0
    while k < len(text):
        ch = text[k]
        if ch.isspace():
            k += 1
        elif ch.isdigit():
            j = k
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(text[k:j])
            k = j
        elif ch.isalpha():
            j = k
            while j < len(text) and text[j].isalpha():
                j += 1
            out.append(text[k:j])
            k = j
        elif ch in "+-*/^(),":
            out.append(ch)
            k += 1
        else:
            raise ValueError(f"bad character {ch!r} in q-expression")
    return out


def _parse_expr(tokens, pos):
    value, pos = _parse_term(tokens, pos)
    while pos < len(tokens) and tokens[pos] in "+-":
        op = tokens[pos]
        rhs, pos = _parse_term(tokens, pos + 1)
        value = value + rhs if op == "+" else value - rhs
    return value, pos


def _parse_term(tokens, pos):
    value, pos = _parse_factor(tokens, pos)
    while pos < len(tokens) and tokens[pos] in "*/":
        op = tokens[pos]
        rhs, pos = _parse_factor(tokens, pos + 1)
        value = value * rhs if op == "*" else value / rhs
    return value, pos


def _parse_factor(tokens, pos):
    value, pos = _parse_base(tokens, pos)
    if pos < len(tokens) and tokens[pos] == "^":
        exp = int(tokens[pos + 1])
        value = value ** exp
        pos += 2
    return value, pos


def _parse_base(tokens, pos):
    if pos >= len(tokens):
        raise ValueError("q-expression ended unexpectedly")
    tok = tokens[pos]
    if tok == "(":
        value, pos = _parse_expr(tokens, pos + 1)
        if tokens[pos] != ")":
            raise ValueError("unbalanced parentheses in q-expression")
        return value, pos + 1
    if tok == "q":
        return RationalFunction.q(), pos + 1
    if tok.isdigit():
        return RationalFunction.const(int(tok)), pos + 1
    if tok in ("qnum", "qfact", "qbinom"):
        if tokens[pos + 1] != "(":
            raise ValueError(f"{tok} needs parenthesized arguments")
        argv = []
        p = pos + 2
        while tokens[p] != ")":
            if tokens[p] != ",":
                argv.append(int(tokens[p]))
            p += 1
        if tok == "qnum":
            return RationalFunction(q_number(*argv)), p + 1
        if tok == "qfact":
            from .qpoly import q_factorial

            return RationalFunction(q_factorial(*argv)), p + 1
        return q_binomial(*argv), p + 1
    raise ValueError(f"unexpected token {tok!r} in q-expression")


# -- entry point ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rowmotion",
        description="Rowmotion dynamics and exact homomesy certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_orb = sub.add_parser("orbits", help="orbit structure of a rowmotion variant")
    p_orb.add_argument("family")
    p_orb.add_argument("--variant", default="rowmotion",
                       help="rowmotion|gyration|antichain|sigma:<perm>|q:<r,s>")
    p_orb.add_argument("--theta", default="default")
    p_orb.add_argument("--level", choices=("combinatorial", "pl", "birational"),
                       default="combinatorial")
    p_orb.add_argument("--alpha", default=None, help="boundary value, e.g. 2/3")
    p_orb.add_argument("--omega", default=None)
    p_orb.add_argument("--start", default="random:1",
                       help="random:<seed> or file:<path> (lifted levels)")
    p_orb.add_argument("--max-iter", type=int, default=10_000)
    p_orb.add_argument("--format", choices=("json", "csv"), default="json")
    p_orb.set_defaults(fn=cmd_orbits)

    p_dec = sub.add_parser("decompose", help="certificate for a statistic")
    p_dec.add_argument("family")
    p_dec.add_argument("stat")
    p_dec.add_argument("--q", action="store_true", help="work over Q(q)")
    p_dec.add_argument("--format", choices=("json",), default="json")
    p_dec.set_defaults(fn=cmd_decompose)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=verify.SUITES)
    p_ver.add_argument("--max-cells", type=int, default=16)
    p_ver.add_argument("--max", type=int, default=4)
    p_ver.add_argument("--seed", type=int, default=1)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--format", choices=("json", "csv"), default="json")
    p_ver.set_defaults(fn=cmd_verify)

    p_q = sub.add_parser("qrow", help="q-rowmotion homomesy experiment")
    p_q.add_argument("--family", required=True)
    p_q.add_argument("--r", type=int, required=True)
    p_q.add_argument("--s", type=int, required=True)
    p_q.add_argument("--theta", default="default",
                     help="default or random:<seed>")
    p_q.add_argument("--stat", required=True)
    p_q.add_argument("--expect", default=None,
                     help="rational function of q, e.g. 'qnum(2)*qnum(3)/qnum(5)'")
    p_q.add_argument("--format", choices=("json",), default="json")
    p_q.set_defaults(fn=cmd_qrow)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CapExceededError as exc:
        print(json.dumps({"error": "resource cap", "detail": str(exc)}))
        return EXIT_CAP
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
