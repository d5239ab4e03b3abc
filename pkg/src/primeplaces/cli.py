"""Command-line front end: one subcommand per library operation.

Exit codes: 0 success, 1 usage or domain error, 2 resource/budget limit,
3 a cited theorem appears to fail (a counterexample or progression was
found where none can exist).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import ap, arith, classes, places, smooth, verifiers
from .config import Limits
from .errors import BoundExceededError, ContradictionError, PrimePlacesError
from .pipeline import Route, run_pipeline
from .report import render_rational, to_csv, to_jsonable, witness_rows

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_CONTRADICTION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Output:
    payload: object
    table: str
    rows: list = field(default_factory=list)
    columns: list = field(default_factory=list)
    status: int = EXIT_OK


def _int_list(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from exc


def _rational(text):
    try:
        return arith.parse_rational(text)
    except PrimePlacesError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _target(text):
    place, sep, value = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected PLACE:VALUE, got {text!r}")
    return place, _rational(value)


def _q(args, x):
    return render_rational(x, args.decimal)


# ---------------------------------------------------------------------------
# handlers


def cmd_primes(args, lim):
    ps = arith.primes_up_to(args.bound, limit=lim.sieve_limit)
    return Output(ps, " ".join(map(str, ps)), [{"prime": p} for p in ps], ["prime"])


def cmd_factor(args, lim):
    fac = arith.factorize(args.n, limit=lim.factor_limit)
    pairs = fac.as_list()
    text = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in pairs) or "1"
    return Output({"n": args.n, "factors": [list(x) for x in pairs]}, f"{args.n} = {text}",
                  [{"prime": p, "exponent": e} for p, e in pairs], ["prime", "exponent"])


def cmd_valuation(args, lim):
    nu = places.valuation(args.q, args.p)
    shown = "inf" if nu == places.POSITIVE_INFINITY else str(nu)
    row = {"q": str(args.q), "p": args.p, "valuation": shown}
    return Output(row, shown, [row], ["q", "p", "valuation"])


def cmd_absval(args, lim):
    v = places.Place.parse(args.place)
    a = places.absolute_value(args.q, v)
    row = {"q": str(args.q), "place": str(v), "abs": _q(args, a)}
    return Output(row, _q(args, a), [row], ["q", "place", "abs"])


def cmd_product_formula(args, lim):
    q = args.q
    factors = [(v, places.absolute_value(q, v)) for v in places.places_of(q)]
    product = places.product_formula_check(q)
    payload = {
        "q": str(q),
        "factors": [{"place": str(v), "abs": _q(args, a)} for v, a in factors],
        "product": _q(args, product),
    }
    rows = [{"place": str(v), "abs": _q(args, a)} for v, a in factors]
    status = EXIT_OK if product == 1 else EXIT_CONTRADICTION
    return Output(payload, _q(args, product), rows, ["place", "abs"], status)


def cmd_euclid_witness(args, lim):
    w = places.euclid_witness(args.primes)
    lines = [f"q = {_q(args, w.q)}"]
    lines += [f"|q|_{v} = {_q(args, a)}" for v, a in w.local_values]
    lines.append(f"product over listed places = {_q(args, w.partial_product)}")
    lines += [f"missing place {v}: |q|_{v} = {_q(args, a)}" for v, a in w.missing]
    lines.append(f"global product = {_q(args, w.global_product)}")
    rows = [{"place": str(v), "abs": _q(args, a), "listed": True} for v, a in w.local_values]
    rows += [{"place": str(v), "abs": _q(args, a), "listed": False} for v, a in w.missing]
    return Output(w, "\n".join(lines), rows, ["place", "abs", "listed"])


def cmd_approximate(args, lim):
    cert = places.weak_approximate(args.target, args.epsilon)
    lines = [f"q = {_q(args, cert.q)}"]
    rows = []
    for it in cert.items:
        lines.append(
            f"|q - {_q(args, it.target)}|_{it.place} = {_q(args, it.achieved)} "
            f"< {_q(args, it.epsilon)}"
        )
        rows.append({"place": str(it.place), "target": _q(args, it.target),
                     "epsilon": _q(args, it.epsilon), "achieved": _q(args, it.achieved),
                     "ok": it.ok})
    return Output(cert, "\n".join(lines), rows, ["place", "target", "epsilon", "achieved", "ok"])


def cmd_smooth(args, lim):
    s = smooth.smooth_members(args.r, args.N, args.strategy, limit=lim.dense_smooth_limit)
    ms = s.tolist()
    payload = {"r": args.r, "N": args.N, "count": len(ms), "members": ms}
    return Output(payload, f"count = {len(ms)}\n" + " ".join(map(str, ms)),
                  [{"n": n} for n in ms], ["n"])


def cmd_erdos_bound(args, lim):
    b = smooth.erdos_defect_bound(args.r, args.N, limit=lim.dense_smooth_limit)
    row = to_jsonable(b)
    text = f"defect = {b.defect}, bound = {b.bound}, holds = {str(b.holds).lower()}"
    return Output(b, text, [row], ["r", "N", "defect", "bound", "holds"],
                  EXIT_OK if b.holds else EXIT_CONTRADICTION)


def cmd_tail_sum(args, lim):
    t = smooth.tail_reciprocal_sum(args.r, args.B, exact_limit=lim.exact_reciprocal_limit)
    row = {"r": args.r, "B": args.B, "tail": _q(args, t)}
    return Output(row, _q(args, t), [row], ["r", "B", "tail"])


def cmd_minimal_r(args, lim):
    r = smooth.minimal_r_for_tail(args.B, args.theta, limit=lim.sieve_limit)
    row = {"B": args.B, "theta": str(args.theta), "r": r}
    return Output(row, str(r), [row], ["B", "theta", "r"])


def cmd_recip_sum(args, lim):
    if args.B <= lim.exact_reciprocal_limit:
        s = smooth.prime_reciprocal_partial_sum(args.B, exact_limit=lim.exact_reciprocal_limit)
        digits = args.decimal if args.decimal is not None else 6
        row = {"B": args.B, "sum": _q(args, s), "decimal": render_rational(s, digits)}
        den_digits = len(render_rational(s.denominator))
        exact = row["sum"] if den_digits <= 60 else f"<p/q with a {den_digits}-digit denominator>"
        return Output(row, f"{exact}\n~ {row['decimal']}", [row], ["B", "sum", "decimal"])
    digits = args.decimal if args.decimal is not None else 12
    lo, hi = smooth.prime_reciprocal_bounds(args.B, digits + 10, limit=lim.sieve_limit)
    row = {"B": args.B, "lower": render_rational(lo, digits, "floor"),
           "upper": render_rational(hi, digits, "ceil"), "decimal": render_rational(lo, digits)}
    text = f"{row['lower']} <= sum <= {row['upper']}"
    return Output(row, text, [row], ["B", "lower", "upper", "decimal"])


def cmd_density(args, lim):
    d = smooth.density_profile(args.r, args.checkpoints, limit=lim.dense_smooth_limit,
                               exact_limit=lim.exact_reciprocal_limit)
    rows = [{"N": row.N, "count": row.count, "ratio": _q(args, row.ratio),
             "lower_bound": _q(args, row.lower_bound)} for row in d.rows]
    lines = [f"{'N':>10} {'count':>10} {'ratio':>16}  lower_bound"]
    lines += [f"{r['N']:>10} {r['count']:>10} {r['ratio']:>16}  {r['lower_bound']}"
              for r in rows]
    status = EXIT_OK if all(row.bound_holds for row in d.rows) else EXIT_CONTRADICTION
    return Output(d, "\n".join(lines), rows, ["N", "count", "ratio", "lower_bound"], status)


def cmd_classify(args, lim):
    c = classes.exponent_class(args.n, args.r, args.m)
    R = classes.class_representative(c)
    row = {"n": args.n, "m": c.m, "v": list(c.v), "representative": R}
    return Output(row, f"v = {c.label()}  R = {R}",
                  [{**row, "v": " ".join(map(str, c.v))}], ["n", "m", "v", "representative"])


def cmd_partition(args, lim):
    p = classes.partition_classes(args.r, args.N, args.m, budget=lim.class_budget)
    lines = [f"{len(p)} non-empty classes of {p.total} members"]
    rows = []
    for cls, members in p.classes.items():
        preview = " ".join(map(str, members[:5])) + (" ..." if len(members) > 5 else "")
        lines.append(f"{cls.label():>16} {len(members):>8}  {preview}")
        rows.append({"v": " ".join(map(str, cls.v)), "count": len(members),
                     "representative": members[0]})
    if p.densest:
        lines.append(f"densest {p.densest[0].label()} with {p.densest[1]} members")
    return Output(p, "\n".join(lines), rows, ["v", "count", "representative"])


def cmd_decompose(args, lim):
    d = classes.decompose(args.n, args.m)
    row = to_jsonable(d)
    return Output(d, f"{d.n} = {d.R} * {d.t}^{d.m}", [row], ["n", "m", "R", "t"])


def cmd_find_ap(args, lim):
    if args.k == 3:
        w = ap.find_3ap(args.set, args.strategy, limit=lim.ap_set_limit)
    else:
        w = ap.find_kap(args.set, args.k, limit=lim.ap_set_limit)
    payload = {"found": w is not None, "witness": None if w is None else to_jsonable(w)}
    text = "none" if w is None else f"a = {w.a}, d = {w.d}: {' '.join(map(str, w.terms()))}"
    rows = [] if w is None else [to_jsonable(w)]
    return Output(payload, text, rows, ["a", "d", "k"])


def cmd_ap_free_max(args, lim):
    size, members = ap.ap_free_max(args.N, args.k, limit=lim.ap_free_limit)
    payload = {"N": args.N, "k": args.k, "size": size, "witness": members}
    return Output(payload, f"{size}: {' '.join(map(str, members))}",
                  [{"N": args.N, "k": args.k, "size": size,
                    "witness": " ".join(map(str, members))}], ["N", "k", "size", "witness"])


def cmd_class_scan(args, lim):
    found = ap.class_ap_scan(args.r, args.N, args.m, args.k, threads=args.threads,
                             budget=lim.class_budget)
    payload = [{"v": list(c.v), **to_jsonable(w)} for c, w in found]
    lines = [f"{c.label()}  a = {w.a}, d = {w.d}, k = {w.k}" for c, w in found] or ["none"]
    return Output(payload, "\n".join(lines), witness_rows(found), ["v", "a", "d", "k"])


def _verification_output(rep):
    lines = [
        f"statement: {rep.statement.value} (n = {rep.exponent})",
        f"root bound: {rep.bound}",
        f"triples checked: {rep.triples_checked}",
        f"counterexamples: {len(rep.counterexamples)}",
    ]
    lines += ["  " + " ".join(map(str, c)) for c in rep.counterexamples]
    row = {"statement": rep.statement.value, "exponent": rep.exponent, "bound": rep.bound,
           "triples_checked": rep.triples_checked, "counterexamples": len(rep.counterexamples)}
    return Output(rep, "\n".join(lines), [row], list(row),
                  EXIT_OK if rep.holds else EXIT_CONTRADICTION)


def cmd_verify_cubes(args, lim):
    return _verification_output(verifiers.verify_no_cube_ap(args.bound, threads=args.threads))


def cmd_verify_powers(args, lim):
    return _verification_output(
        verifiers.verify_no_power_ap(args.n, args.bound, threads=args.threads))


def cmd_verify_squares4(args, lim):
    return _verification_output(verifiers.verify_no_4_square_ap(args.bound, threads=args.threads))


def cmd_squares3(args, lim):
    ws = verifiers.square_3ap_search(args.bound)
    lines = [" ".join(map(str, w.terms())) for w in ws] or ["none"]
    return Output(ws, "\n".join(lines), [to_jsonable(w) for w in ws], ["a", "d", "k"])


def _pipeline_output(rep):
    lines = [
        f"route {rep.route.value} (m = {rep.m}, k = {rep.k}), r = {rep.r}, N = {rep.N}",
        f"smooth numbers: {rep.smooth_count}",
        f"classes: {rep.nonempty_classes} non-empty of {rep.possible_classes}",
    ]
    if rep.densest:
        lines.append(f"densest: {rep.densest[0].label()} with {rep.densest[1]} members")
    for cls, w, roots in rep.witnesses:
        qs = " ".join(f"{t}={root}^{rep.m}" for t, root in roots)
        lines.append(f"witness {cls.label()}: {' '.join(map(str, w.terms()))} -> {qs}")
    lines.append(f"verdict: {rep.verdict.value}")
    rows = [{"v": " ".join(map(str, c.v)), "a": w.a, "d": w.d, "k": w.k}
            for c, w, _ in rep.witnesses]
    return Output(rep, "\n".join(lines), rows, ["v", "a", "d", "k"])


def cmd_prove(args, lim):
    route = args.route
    return _pipeline_output(run_pipeline(route, args.r, args.N, threads=args.threads,
                                         budget=lim.class_budget))


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--decimal", type=int, metavar="DIGITS",
                        help="render rationals as decimals with this many digits")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--config", metavar="FILE", help="JSON file of limits / budgets")

    parser = _Parser(prog="primeplaces", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text, *arguments):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flags, kwargs in arguments:
            p.add_argument(*flags, **kwargs)
        p.set_defaults(func=func)
        return p

    def req(flag, kind=int, **kw):
        return (flag,), {"type": kind, "required": True, **kw}

    def opt(flag, default, kind=int, **kw):
        return (flag,), {"type": kind, "default": default, **kw}

    add("primes", cmd_primes, "primes up to a bound", req("--bound"))
    add("factor", cmd_factor, "prime factorization", req("--n"))
    add("valuation", cmd_valuation, "p-adic valuation of a rational",
        req("--q", _rational), req("--p"))
    add("absval", cmd_absval, "absolute value at a place (prime or inf)",
        req("--q", _rational), req("--place", str))
    add("product-formula", cmd_product_formula, "product of |q|_v over all places",
        req("--q", _rational))
    add("euclid-witness", cmd_euclid_witness, "rational exceeding 1 at listed places",
        opt("--primes", [], _int_list, help="comma-separated primes"))
    add("approximate", cmd_approximate, "weak approximation with certificate",
        (("--target",), {"type": _target, "action": "append", "required": True,
                         "help": "PLACE:VALUE, repeatable; PLACE is a prime or inf"}),
        req("--epsilon", _rational))
    add("smooth", cmd_smooth, "members of P_r up to N", req("--r"), req("--N"),
        opt("--strategy", "auto", str, choices=("auto", "sieve", "enumerate")))
    add("erdos-bound", cmd_erdos_bound, "defect of P_r against the large-prime sum",
        req("--r"), req("--N"))
    add("tail-sum", cmd_tail_sum, "sum of 1/p_j over j > r, p_j <= B", req("--r"), req("--B"))
    add("minimal-r", cmd_minimal_r, "smallest r whose reciprocal tail is <= theta",
        req("--B"), opt("--theta", arith.parse_rational("1/2"), _rational))
    add("recip-sum", cmd_recip_sum, "sum of 1/p over primes p <= B", req("--B"))
    add("density", cmd_density, "counts and ratios of P_r at checkpoints",
        req("--r"), req("--checkpoints", _int_list))
    add("classify", cmd_classify, "exponent class of n mod m", req("--n"), req("--r"), req("--m"))
    add("partition", cmd_partition, "exponent classes of P_r up to N",
        req("--r"), req("--N"), req("--m"))
    add("decompose", cmd_decompose, "n = R * t^m with R m-th-power-free",
        req("--n"), req("--m"))
    add("find-ap", cmd_find_ap, "smallest k-term progression in a set",
        req("--set", _int_list), opt("--k", 3),
        opt("--strategy", "pairs", str, choices=("pairs", "midpoint")))
    add("ap-free-max", cmd_ap_free_max, "largest progression-free subset of [1, N]",
        req("--N"), opt("--k", 3))
    add("class-scan", cmd_class_scan, "progressions inside each exponent class",
        req("--r"), req("--N"), req("--m"), opt("--k", 3))
    add("verify-cubes", cmd_verify_cubes, "no three cubes in progression", req("--bound"))
    add("verify-powers", cmd_verify_powers, "no three n-th powers in progression",
        req("--n"), req("--bound"))
    add("verify-squares4", cmd_verify_squares4, "no four squares in progression",
        req("--bound"))
    add("squares3", cmd_squares3, "all three-square progressions", req("--bound"))
    add("prove", cmd_prove, "run the class/progression pipeline",
        opt("--route", "cubes", str,
            choices=[r.value for r in Route]),
        req("--r"), req("--N"))
    return parser


def render(out: Output, fmt: str, digits) -> str:
    if fmt == "json":
        return json.dumps(to_jsonable(out.payload, digits), indent=2)
    if fmt == "csv":
        return to_csv(out.rows, out.columns).rstrip("\n")
    return out.table


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        limits = Limits.from_file(args.config) if args.config else Limits()
    except (OSError, ValueError) as exc:
        print(f"primeplaces: bad config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        out = args.func(args, limits)
    except ContradictionError as exc:
        if exc.report is not None:
            print(render(_pipeline_output(exc.report), args.format, args.decimal))
        print(f"primeplaces: CONTRADICTION: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except BoundExceededError as exc:
        print(f"primeplaces: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PrimePlacesError, ZeroDivisionError, ValueError) as exc:
        print(f"primeplaces: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(out, args.format, args.decimal))
    return out.status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
