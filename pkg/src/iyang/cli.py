"""Command-line interface.

Subcommands: verify (relation suite), weights, orbits, compose, oracle,
apply, selftest.  Exit status is 0 on success, 1 when a mathematical check
fails, and 2 for bad input.  JSON reports are byte-stable: canonical key
order, no timing data (timings go to stderr under --verbose).
"""

import argparse
import json
import re
import sys
import time

from .errors import IyangError
from .flags import oracle_compose_set
from .operators import MUTATIONS, RepContext
from .orbits import (OrbitMatrix, compose_max, compose_set, enum_weights,
                     enum_xi, format_matrix, parse_matrix, parse_weight)
from .poly import format_poly, parse_poly
from .relations import (RELATION_IDS, check_bb_series, check_h_parity,
                        report_to_json, run_suite)
from .repspace import ModuleElem, PElem


def _canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _read_matrix(path):
    with open(path) as fh:
        return parse_matrix(fh.read())


def _print_matrices(mats, out):
    first = True
    for A in mats:
        if not first:
            out.write("\n")
        out.write(format_matrix(A))
        first = False


# -- verify -----------------------------------------------------------


def cmd_verify(args):
    relations = args.relation if args.relation else None
    t0 = time.time()
    report, results = run_suite(
        args.n, args.d, args.rmax, args.deg,
        serre_max=args.serre_max, mutation=args.mutation,
        relations=relations)
    elapsed = time.time() - t0
    per_relation = {}
    for r in results:
        agg = per_relation.setdefault(r.relation, [0, 0])
        agg[0 if r.status == "pass" else 1] += 1
    for rel in RELATION_IDS:
        if rel not in per_relation:
            continue
        ok, bad = per_relation[rel]
        line = "%-18s %4d pass" % (rel, ok)
        if bad:
            line += "  %d FAIL" % bad
        print(line)
    for r in results:
        if r.status == "fail":
            print("FAIL %s %s witness=%s" % (r.relation, r.params, r.witness))
    summary = report["summary"]
    print("total: %d pass, %d fail" % (summary["pass"], summary["fail"]))
    if args.verbose:
        print("elapsed: %.1fs" % elapsed, file=sys.stderr)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report_to_json(report))
    return 0 if summary["fail"] == 0 else 1


# -- combinatorics ----------------------------------------------------


def cmd_weights(args):
    for v in enum_weights(args.n, args.d):
        print(",".join(str(x) for x in v.entries))
    return 0


def cmd_orbits(args):
    ro = parse_weight(args.ro, args.n) if args.ro else None
    co = parse_weight(args.co, args.n) if args.co else None
    mats = enum_xi(args.n, args.d, ro=ro, co=co)
    _print_matrices(mats, sys.stdout)
    return 0


def cmd_compose(args):
    A = _read_matrix(args.a)
    B = _read_matrix(args.b)
    out = compose_set(A, B)
    _print_matrices(out, sys.stdout)
    top = compose_max(A, B)
    sys.stdout.write("max:\n")
    sys.stdout.write(format_matrix(top))
    return 0


def cmd_oracle(args):
    A = _read_matrix(args.a)
    B = _read_matrix(args.b)
    predicted = compose_set(A, B)
    t0 = time.time()
    observed = oracle_compose_set(A, B, args.q)
    if args.verbose:
        print("oracle elapsed: %.1fs" % (time.time() - t0), file=sys.stderr)
    _print_matrices(observed, sys.stdout)
    pred_keys = {m.entries for m in predicted}
    obs_keys = {m.entries for m in observed}
    subset = obs_keys <= pred_keys
    equal = obs_keys == pred_keys
    print("subset: %s" % ("yes" if subset else "no"))
    print("equal: %s" % ("yes" if equal else "no"))
    return 0 if subset else 1


# -- single operator application --------------------------------------

_OP_RE = re.compile(r"^\s*([HB])\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def cmd_apply(args):
    m = _OP_RE.match(args.op)
    if m is None:
        raise ValueError("cannot parse operator %r; expected H(i,r) or B(i,r)"
                         % args.op)
    kind, i, r = m.group(1), int(m.group(2)), int(m.group(3))
    entries = [int(x) for x in args.component.split(",")]
    if len(entries) % 2 == 0:
        raise ValueError("component must have an odd number of entries")
    n = (len(entries) - 1) // 2
    v = parse_weight(args.component, n)
    poly = parse_poly(args.poly, v.d)
    elem = PElem.from_component(v, ModuleElem(v, poly).poly, check=False)
    ctx = RepContext(n, v.d)
    if kind == "H":
        out = ctx.apply_H(i, r, elem)
    else:
        out = ctx.apply_B(i, r, elem)
    components = []
    for w, p in out.components():
        text = format_poly(p)
        print("%s: %s" % (",".join(str(x) for x in w.entries), text))
        components.append({"component": list(w.entries), "poly": text})
    if out.is_zero():
        print("0")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(_canonical_json({"components": components}))
    return 0


# -- selftest ---------------------------------------------------------


def cmd_selftest(args):
    from .operators import lemma26_constant, lemma53_det
    from .orbits import WeightVec
    from .flags import enum_flags
    from .poly import Poly
    from fractions import Fraction
    failures = 0

    def check(name, fn):
        nonlocal failures
        t0 = time.time()
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - report and count
            failures += 1
            print("FAIL %s: %s" % (name, exc))
        else:
            print("ok   %s" % name)
        if args.verbose:
            print("  %s: %.1fs" % (name, time.time() - t0), file=sys.stderr)

    def suite_small():
        report, _ = run_suite(1, 1, 2, 2)
        assert report["summary"]["fail"] == 0, report["summary"]

    def three_path():
        ctx = RepContext(1, 1)
        v = WeightVec(1, (1, 0, 1))
        e = PElem.from_component(v, Poly.var(1, 1))
        for i in (1, 2):
            for r in (0, 1):
                a = ctx.apply_B(i, r, e)
                b = ctx.apply_B_series(i, e, r + 1)[r]
                c = ctx.apply_B_pushforward(i, r, e)
                assert a == b == c, (i, r)

    def telescoping():
        for a in range(3):
            got = lemma26_constant(a, a + 1)
            assert got == Fraction((-1) ** a * (a + 1)), (a, got)

    def determinant():
        assert lemma53_det(1) == -3 and lemma53_det(2) == 5

    def lagrangians():
        v = WeightVec(1, (2, 0, 2))
        assert len(enum_flags(1, 2, 2, v)) == 15

    def series_checks():
        ctx = RepContext(1, 1)
        check_h_parity(ctx, 4)
        check_bb_series(ctx, 4, 2)

    check("relation suite (n=1, d=1)", suite_small)
    check("three-route B agreement", three_path)
    check("telescoping coset constant", telescoping)
    check("pairing determinant", determinant)
    check("lagrangian count over F_2", lagrangians)
    check("series identities", series_checks)
    print("selftest: %s" % ("ok" if failures == 0 else "%d failure(s)" % failures))
    return 0 if failures == 0 else 1


# -- parser -----------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="iyang",
        description="Exact checks for a polynomial realization of a twisted "
                    "Yangian: defining relations, orbit combinatorics, and "
                    "finite-field cross-validation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the relation suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rmax", type=int, default=3)
    p.add_argument("--deg", type=int, default=3)
    p.add_argument("--serre-max", type=int, default=2)
    p.add_argument("--relation", action="append", choices=RELATION_IDS,
                   help="restrict to one relation id (repeatable)")
    p.add_argument("--mutation", choices=MUTATIONS,
                   help="run with a deliberate defect, to confirm detection")
    p.add_argument("--json", metavar="PATH",
                   help="write the canonical JSON report here")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weights", help="list admissible weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("orbits", help="list orbit matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ro", help="filter by row-sum weight, e.g. 1,0,1")
    p.add_argument("--co", help="filter by column-sum weight")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("compose", help="predicted composition set of A then B")
    p.add_argument("--a", "--A", required=True, metavar="FILE")
    p.add_argument("--b", "--B", required=True, metavar="FILE")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("oracle", help="brute-force composition over F_q")
    p.add_argument("--a", "--A", required=True, metavar="FILE")
    p.add_argument("--b", "--B", required=True, metavar="FILE")
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("apply", help="apply one operator to one component")
    p.add_argument("--op", required=True, help='e.g. "B(1,0)" or "H(2,1)"')
    p.add_argument("--component", required=True, help="weight, e.g. 0,2,0")
    p.add_argument("--poly", required=True, help='polynomial text, e.g. "x1^2 - h"')
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("selftest", help="quick internal battery")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (IyangError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
