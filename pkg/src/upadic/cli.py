"""Command-line interface.

Subcommands: u-matrix, ipoly, charpoly, newton, twist, verify.
Exit codes: 0 success, 1 claim failure, 2 usage error.
UPADIC_THREADS caps parallelism of independent verification suites.
"""

import argparse
import os
import sys

from .scalars import val_p, val_quad3, Val, QuadInt3
from . import modcurve, umatrix, charseries, weights
from .verify import SUITES, run_suites, suite_p3_parabola
from .serialize import (dump_json, dump_csv, matrix_json, bipoly_json,
                        charseries_json, polygon_json, val_str, int_str)

GENUS_ZERO_PRIMES = (2, 3, 5, 7, 13)


def _threads():
    try:
        return max(1, int(os.environ.get("UPADIC_THREADS", "1")))
    except ValueError:
        return 1


def _auto_qprec(p, size, override=None):
    qprec = p * size + size + 16
    if override:
        qprec = max(qprec, override)
    return qprec


def cmd_u_matrix(args):
    p, n = args.prime, args.size
    qprec = _auto_qprec(p, n, args.qprec)
    print("q-precision: policy %d (oracle builds derive the full-column "
          "precision internally)" % qprec, file=sys.stderr)
    if args.method in ("oracle", "both"):
        m = umatrix.build_matrix_oracle(p, n, qprec)
    else:
        m = umatrix.build_matrix_genfun(p, n)
    if args.method == "both":
        g = umatrix.build_matrix_genfun(p, n)
        if m.rows != g.rows:
            print("cross-method check failed", file=sys.stderr)
            return 1
    if args.scaled:
        if p != 3:
            print("--scaled is specific to p=3", file=sys.stderr)
            return 2
        m = umatrix.scaled_matrix_p3(m)
    if args.format == "csv":
        e = modcurve.e_exponent(p)
        rows = []
        for i in range(1, m.n + 1):
            for j in range(1, m.n + 1):
                x = m.entry(i, j)
                v = val_quad3(x) if isinstance(x, QuadInt3) else val_p(x, p)
                rows.append((i, j, val_str(v), val_str(Val(e * (p * i - j) - 1))))
        dump_csv(rows, ("i", "j", "valuation", "entry_bound"), args.out)
    else:
        dump_json(matrix_json(m), args.out)
    return 0


def cmd_ipoly(args):
    ip = modcurve.ip_poly(args.prime)
    doc = bipoly_json(ip)
    doc["prime"] = args.prime
    dump_json(doc, args.out)
    if args.pretty:
        print(ip.pretty())
    return 0


def cmd_charpoly(args):
    p = args.prime
    size = args.size or max(args.terms + 10, 2 * args.terms // 1)
    if args.weight and p != 3:
        print("weight twists are implemented for p=3", file=sys.stderr)
        return 2
    if args.weight:
        q = weights.uk_char_series(args.weight, size)
        recs = weights.certified_weight_records(args.weight, args.terms, size)
    else:
        q = charseries.cuspidal_char_series(p, size)
        recs = charseries.stable_valuations(p, args.terms, size)
    doc = charseries_json(q, recs)
    doc["coefficients"] = doc["coefficients"][:args.terms + 1]
    dump_json(doc, args.out)
    return 0


def cmd_newton(args):
    p = args.prime
    size = args.size or max(args.terms + 10, 20)
    if args.weight:
        recs = weights.certified_weight_records(args.weight, args.terms, size)
    else:
        recs = charseries.stable_valuations(p, args.terms, size)
    for r in recs:
        if not (r.certified or r.m == 0):
            print("warning: coefficient %d uncertified; plotted at its "
                  "proven lower bound" % r.m, file=sys.stderr)
    poly = charseries.polygon_from_records(recs)
    doc = polygon_json(poly)
    dump_json(doc, args.out)
    if args.csv:
        rows = []
        mis = charseries.equality_indices_upto(args.terms)
        for r in recs:
            par = charseries.parabola_floor(r.m) if p == 3 else ""
            sec = ""
            if p == 3:
                for i in range(len(mis) - 1):
                    if mis[i] <= r.m <= mis[i + 1]:
                        sec = val_str(Val(charseries.secant_line(i, r.m)))
                        break
            rows.append((r.m, val_str(r.v_obs), val_str(Val(par)) if par != "" else "",
                         sec, r.certified))
        dump_csv(rows, ("m", "valuation", "parabola", "secant", "certified"),
                 args.csv)
    return 0


def cmd_twist(args):
    t = weights.twist_matrix(args.weight, args.size)
    doc = {"weight": t.k, "size": t.size, "n_parameter": t.n_param,
           "subdiagonal_coefficients": [int_str(r) for r in t.rho],
           "scaled_valuations": [val_str(t.scaled_entry_valuation(m))
                                 for m in range(t.size + 1)]}
    dump_json(doc, args.out)
    return 0


def cmd_verify(args):
    if args.suite == "p3-parabola" and (args.terms or args.size):
        claims = suite_p3_parabola(terms=args.terms or 45, size=args.size or 60)
        ok = all(c["pass"] for c in claims)
        report = {"suites": [{"suite": "p3-parabola", "pass": ok,
                              "claims": claims}], "pass": ok}
        dump_json(report, args.out)
        if not ok:
            return 1
        return 0
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        print("unknown suite %r" % args.suite, file=sys.stderr)
        return 2
    report, ok = run_suites(names, parallel=_threads())
    dump_json(report, args.out)
    if not ok:
        for s in report["suites"]:
            for c in s["claims"]:
                if not c["pass"]:
                    print("FAIL %s: observed %s, expected %s"
                          % (c["id"], c["observed"], c["expected"]),
                          file=sys.stderr)
                    return 1
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="upadic",
        description="Exact computations for the U operator on overconvergent "
                    "p-adic modular forms at the genus-zero primes.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_prime(sp):
        sp.add_argument("--prime", type=int, required=True,
                        choices=GENUS_ZERO_PRIMES,
                        help="one of the genus-zero primes 2, 3, 5, 7, 13")

    sp = sub.add_parser("u-matrix", help="emit a truncation of the U matrix")
    add_prime(sp)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--method", choices=("oracle", "genfun", "both"),
                    default="oracle")
    sp.add_argument("--scaled", action="store_true",
                    help="p=3 scaled basis over Z[sqrt3]")
    sp.add_argument("--qprec", type=int)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_u_matrix)

    sp = sub.add_parser("ipoly", help="emit the bivariate polynomial I_p")
    add_prime(sp)
    sp.add_argument("--pretty", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_ipoly)

    sp = sub.add_parser("charpoly", help="exact characteristic-series coefficients")
    add_prime(sp)
    sp.add_argument("--terms", type=int, required=True)
    sp.add_argument("--size", type=int)
    sp.add_argument("--weight", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_charpoly)

    sp = sub.add_parser("newton", help="Newton polygon data")
    add_prime(sp)
    sp.add_argument("--terms", type=int, required=True)
    sp.add_argument("--size", type=int)
    sp.add_argument("--weight", type=int, default=0)
    sp.add_argument("--csv", help="companion CSV path")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_newton)

    sp = sub.add_parser("twist", help="weight-twist matrix data (p=3)")
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_twist)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", default="all",
                    choices=("all",) + tuple(SUITES))
    sp.add_argument("--terms", type=int)
    sp.add_argument("--size", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
