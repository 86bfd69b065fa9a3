"""Command line entry point: ``fqsim <command> [flags]``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable

from . import counting
from .census import default_budget, orbit_check, run_census
from .errors import FqSimError
from .field import make_field
from .invariants import InvariantFactors, map_from_json, report_json
from .qanalogs import (
    Partition,
    gamma_q,
    partitions_with_first_part,
    q_binomial,
    q_multinomial,
    verify_box_identity,
    verify_durfee_identity,
)


class InputError(Exception):
    def __init__(self, flag: str, msg: str):
        super().__init__(f"{flag}: {msg}")


def _parse(flag: str, fn: Callable, value):
    try:
        return fn(value)
    except (FqSimError, ValueError, KeyError, TypeError, OSError) as exc:
        raise InputError(flag, str(exc)) from exc


def _field(value):
    return make_field(int(value))


def _emit_csv(out, header, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)


def _emit_json(out, obj):
    out.write(json.dumps(obj) + "\n")


# -- commands ---------------------------------------------------------------------

def cmd_invariants(args, out) -> int:
    def load(path):
        with open(path, encoding="utf-8") as fh:
            return map_from_json(json.load(fh))

    T = _parse("--map", load, args.map)
    rep = report_json(T)
    if args.format == "json":
        _emit_json(out, rep)
    elif args.format == "csv":
        _emit_csv(out, ["lambda", "inv_factors", "ell", "dims"],
                  [[",".join(map(str, rep["lambda"])), ";".join(rep["invariant_factors"]),
                    rep["ell"], ",".join(map(str, rep["dims"]))]])
    else:
        out.write(f"lambda: {','.join(map(str, rep['lambda']))}\n")
        out.write(f"invariant_factors: {';'.join(rep['invariant_factors'])}\n")
        out.write(f"ell: {rep['ell']}\n")
        out.write(f"dims: {','.join(map(str, rep['dims']))}\n")
        out.write(f"max_invariant_subspace: {rep['max_invariant_subspace']}\n")
    return 0


def cmd_class_size(args, out) -> int:
    F = _parse("--q", _field, args.q)
    lam = _parse("--lambda", Partition.parse, args.lam)
    I = _parse("--inv-factors", lambda s: InvariantFactors.parse(s, F), args.inv_factors)
    try:
        if args.k is None:
            size = counting.count_class(lam, I, args.n, F.q)
            k = args.n - lam.part(1)
        else:
            size = counting.count_class_fixed_domain(lam, I, args.n, args.k, F.q)
            k = args.k
    except FqSimError as exc:
        raise InputError("--lambda/--inv-factors", str(exc)) from exc
    row = {"n": args.n, "q": F.q, "lambda": str(lam), "inv_factors": str(I), "k": k,
           "d": I.degree, "size": str(size)}
    if args.format == "json":
        _emit_json(out, row)
    elif args.format == "csv":
        _emit_csv(out, list(row), [list(row.values())])
    else:
        out.write(f"{size}\n")
    return 0


def cmd_labels(args, out) -> int:
    F = _parse("--q", _field, args.q)
    if args.n < 0:
        raise InputError("--n", "must be nonnegative")
    rows = [(str(lab.lam), str(lab.inv_factors), lab.k, lab.d, size)
            for lab, size in counting.labels_with_sizes(args.n, F.q)]
    header = ["lambda", "inv_factors", "k", "d", "predicted_size"]
    if args.format == "json":
        _emit_json(out, [dict(zip(header, (r[0], r[1], r[2], r[3], str(r[4])))) for r in rows])
    else:
        _emit_csv(out, header, rows)
    return 0


def cmd_census(args, out) -> int:
    F = _parse("--q", _field, args.q)
    if args.n < 0:
        raise InputError("--n", "must be nonnegative")
    try:
        rep = run_census(args.n, F.q, budget=args.budget, workers=args.workers)
    except FqSimError as exc:
        raise InputError("--budget", str(exc)) from exc
    header = ["lambda", "inv_factors", "k", "d", "predicted", "observed", "match"]
    rows = list(rep.rows())
    if args.format == "json":
        _emit_json(out, {
            "n": rep.n, "q": rep.q,
            "total_observed": str(rep.total_observed),
            "total_predicted": str(rep.total_predicted),
            "mismatches": len(rep.mismatches),
            "rows": [dict(zip(header, (a, b, c, d, str(e), str(f), g))) for a, b, c, d, e, f, g in rows],
        })
    else:
        _emit_csv(out, header, rows)
        sys.stderr.write(f"census n={rep.n} q={rep.q}: {rep.total_observed} maps, "
                         f"{len(rep.buckets)} classes, {len(rep.mismatches)} mismatches\n")
    return 0 if rep.ok else 1


def cmd_orbit_check(args, out) -> int:
    F = _parse("--q", _field, args.q)
    try:
        ok = orbit_check(args.n, F.q, budget=args.budget)
    except FqSimError as exc:
        raise InputError("--budget", str(exc)) from exc
    if args.format == "json":
        _emit_json(out, {"n": args.n, "q": F.q, "ok": ok})
    elif args.format == "csv":
        _emit_csv(out, ["n", "q", "ok"], [[args.n, F.q, ok]])
    else:
        out.write(f"orbit-check n={args.n} q={F.q}: {'OK' if ok else 'FAIL'}\n")
    return 0 if ok else 1


def _emit_poly(args, out, poly) -> int:
    value = None if args.at is None else poly(args.at)
    if args.format == "json":
        obj = {"coeffs": [str(c) for c in poly.coeffs], "poly": str(poly)}
        if value is not None:
            obj["value"] = str(value)
        _emit_json(out, obj)
    elif args.format == "csv":
        _emit_csv(out, ["poly", "value"], [[str(poly), "" if value is None else value]])
    else:
        out.write(f"{poly if value is None else value}\n")
    return 0


def cmd_qbinom(args, out) -> int:
    poly = _parse("--k", lambda k: q_binomial(args.n, k), args.k)
    return _emit_poly(args, out, poly)


def cmd_qmultinom(args, out) -> int:
    parts = _parse("--parts", lambda s: [int(t) for t in s.split(",") if t.strip()], args.parts)
    n = sum(parts) if args.n is None else args.n
    poly = _parse("--parts", lambda p: q_multinomial(n, p), parts)
    return _emit_poly(args, out, poly)


def cmd_gamma(args, out) -> int:
    poly = _parse("--k", gamma_q, args.k)
    return _emit_poly(args, out, poly)


def cmd_verify_identities(args, out) -> int:
    if args.max_n < 1:
        raise InputError("--max-n", "must be >= 1")
    if args.max_box < 0:
        raise InputError("--max-box", "must be >= 0")
    durfee = [(m, n) for n in range(1, args.max_n + 1) for m in range(1, n + 1)]
    box = [(r, s) for r in range(args.max_box + 1) for s in range(args.max_box + 1)]
    durfee_bad = [c for c in durfee if not verify_durfee_identity(*c)]
    box_bad = [c for c in box if not verify_box_identity(*c)]
    ok = not durfee_bad and not box_bad
    if args.format == "json":
        _emit_json(out, {"durfee": {"cases": len(durfee), "failures": durfee_bad},
                         "box": {"cases": len(box), "failures": box_bad}, "ok": ok})
    elif args.format == "csv":
        _emit_csv(out, ["identity", "cases", "failures"],
                  [["durfee", len(durfee), len(durfee_bad)], ["box", len(box), len(box_bad)]])
    else:
        d = "OK" if not durfee_bad else f"FAIL {durfee_bad}"
        b = "OK" if not box_bad else f"FAIL {box_bad}"
        out.write(f"durfee: {d} ({len(durfee)} cases), box: {b} ({len(box)} cases)\n")
    return 0 if ok else 1


def cmd_simple_count(args, out) -> int:
    F = _parse("--q", _field, args.q)
    try:
        total = counting.count_simple_fixed_domain(args.n, args.k, F.q)
    except FqSimError as exc:
        raise InputError("--k", str(exc)) from exc
    by_lambda = [(str(lam), counting.sigma(lam, args.n, F.q))
                 for lam in partitions_with_first_part(args.n, args.n - args.k)]
    if args.format == "json":
        _emit_json(out, {"n": args.n, "k": args.k, "q": F.q, "count": str(total),
                         "by_lambda": {lam: str(c) for lam, c in by_lambda}})
    elif args.format == "csv":
        _emit_csv(out, ["lambda", "sigma"], by_lambda)
    else:
        out.write(f"{total}\n")
    return 0


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = argparse.ArgumentParser(prog="fqsim", description="Similarity classes of linear maps on subspaces of GF(q)^n.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[fmt], help="similarity invariants of a map given as JSON")
    s.add_argument("--map", required=True)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("class-size", parents=[fmt], help="size of the class (lambda, I)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", required=True)
    s.add_argument("--lambda", dest="lam", default="")
    s.add_argument("--inv-factors", default="")
    s.add_argument("--k", type=int, default=None, help="count only maps on one fixed k-dim domain")
    s.set_defaults(func=cmd_class_size)

    s = sub.add_parser("labels", parents=[fmt], help="all labels with predicted sizes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", required=True)
    s.set_defaults(func=cmd_labels)

    s = sub.add_parser("census", parents=[fmt], help="brute-force census against the formulas")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", required=True)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("orbit-check", parents=[fmt], help="compare GL-orbits with label buckets")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", required=True)
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_orbit_check)

    s = sub.add_parser("qbinom", parents=[fmt], help="Gaussian binomial [n, k]_q")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--at", type=int, default=None)
    s.set_defaults(func=cmd_qbinom)

    s = sub.add_parser("qmultinom", parents=[fmt], help="q-multinomial [n; n_1, ..., n_r]_q")
    s.add_argument("--parts", required=True)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--at", type=int, default=None)
    s.set_defaults(func=cmd_qmultinom)

    s = sub.add_parser("gamma", parents=[fmt], help="|GL_k(F_q)| as a polynomial in q")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--at", type=int, default=None)
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("verify-identities", parents=[fmt], help="check the Durfee and box identities")
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--max-box", type=int, default=8)
    s.set_defaults(func=cmd_verify_identities)

    s = sub.add_parser("simple-count", parents=[fmt], help="simple maps on a fixed k-dim domain")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--q", required=True)
    s.set_defaults(func=cmd_simple_count)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"fqsim: error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
