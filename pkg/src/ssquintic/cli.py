"""Command-line front end: per-prime queries, range sweeps, oracle checks.

Subcommands:

  count   -- enumerate a one-parameter family (z10 or z8) over a prime
             or a prime range; csv/json/table output
  fixed   -- congruence verdicts for the fixed types 1..5
  verify  -- exhaustive criterion-vs-oracle comparison over all lambda
  oracle  -- direct coefficient-vanishing test for an arbitrary y^n = f(x)

Exit codes: 0 success, 2 usage error, 3 internal cross-check failure.
Sweeps are parallel over primes but emit rows in ascending prime order,
so output is byte-identical for any --jobs setting (apart from the
elapsed_ms column, which is wall-clock and excluded from comparisons).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import quintic
from .poly import Poly, gcd as poly_gcd, is_separable
from .primes import is_prime, primes_in_range
from .quintic import QuinticFamily, count_z8, count_z10, fixed_type_is_superspecial
from .superelliptic import (FamilyParams, SuperellipticCurve,
                            clambda_is_superspecial, family_curve,
                            oracle_is_superspecial, oracle_witnesses)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3

FAMILY_PARAMS = {"z10": (5, 2), "z8": (4, 2)}

FIXED_TYPE_MAP = {
    1: QuinticFamily.TYPE1_FERMAT,
    2: QuinticFamily.TYPE2_HURWITZ,
    3: QuinticFamily.TYPE3,
    4: QuinticFamily.TYPE4_Z20,
    5: QuinticFamily.TYPE5_Z16,
}

COUNT_HEADER = ("p", "residue", "deg_g", "count", "elapsed_ms")


class UsageError(Exception):
    pass


def _parse_range(args) -> list[int]:
    """Primes requested by --prime/--range, small ones skipped with a note."""
    if args.prime is not None:
        if not is_prime(args.prime):
            raise UsageError(f"{args.prime} is not prime")
        if args.prime <= 13:
            raise UsageError(f"p = {args.prime} <= 13 is out of scope")
        return [args.prime]
    try:
        lo_s, hi_s = args.range.split("..")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise UsageError(f"bad range {args.range!r}, expected A..B")
    primes = []
    for p in primes_in_range(lo, hi + 1):
        if p <= 13:
            print(f"note: skipping p = {p} <= 13", file=sys.stderr)
            continue
        primes.append(p)
    return primes


def _count_row(job: tuple[str, int, bool]) -> dict:
    family, p, verify = job
    start = time.perf_counter()
    if family == "z10":
        res = count_z10(p)
        residue = p % 20
    else:
        res = count_z8(p)
        residue = p % 16
    if verify:
        mism = _verify_mismatches(family, p)
        if mism:
            raise quintic.CrossCheckMismatch(
                f"p={p}: criterion/oracle mismatch at lambda {mism}")
    elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return {"p": p, "residue": residue, "deg_g": res.deg_g,
            "count": res.count, "elapsed_ms": elapsed_ms}


def _emit_rows(rows: list[dict], header: tuple[str, ...], fmt: str,
               out) -> None:
    if fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if row[k] is None else row[k]
                             for k in header])
    elif fmt == "json":
        json.dump([{k: row[k] for k in header} for row in rows], out,
                  indent=2)
        out.write("\n")
    else:
        widths = [max(len(str(h)),
                      max((len(str(r[h])) for r in rows), default=0))
                  for h in header]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths))
                  .rstrip() + "\n")
        for row in rows:
            cells = ["" if row[k] is None else str(row[k]) for k in header]
            out.write("  ".join(c.ljust(w) for c, w in zip(cells, widths))
                      .rstrip() + "\n")


def _map_jobs(fn, jobs_args, n_jobs: int):
    if n_jobs <= 1 or len(jobs_args) <= 1:
        return [fn(a) for a in jobs_args]
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        return list(pool.map(fn, jobs_args, chunksize=4))


def cmd_count(args, out) -> int:
    primes = _parse_range(args)
    jobs = [(args.family, p, args.verify) for p in primes]
    rows = _map_jobs(_count_row, jobs, args.jobs)
    _emit_rows(rows, COUNT_HEADER, args.format, out)
    return EXIT_OK


def _fixed_row(job: tuple[int, int]) -> dict:
    t, p = job
    return {"p": p, "type": t,
            "superspecial": fixed_type_is_superspecial(FIXED_TYPE_MAP[t], p)}


def cmd_fixed(args, out) -> int:
    primes = _parse_range(args)
    rows = _map_jobs(_fixed_row, [(args.type, p) for p in primes], args.jobs)
    if args.format == "csv":
        _emit_rows(rows, ("p", "type", "superspecial"), "csv", out)
    elif args.format == "json":
        _emit_rows(rows, ("p", "type", "superspecial"), "json", out)
    else:
        for row in rows:
            out.write(f"{row['p']}  type {row['type']}  "
                      f"{'superspecial' if row['superspecial'] else 'not superspecial'}\n")
    return EXIT_OK


def _verify_mismatches(family: str, p: int) -> list[int]:
    n, r = FAMILY_PARAMS[family]
    params = FamilyParams(n, r, p)
    bad = []
    for lam in range(2, p):
        crit = clambda_is_superspecial(params, lam)
        orac = oracle_is_superspecial(family_curve(params, lam))
        if crit != orac:
            bad.append(lam)
    return bad


def cmd_verify(args, out) -> int:
    primes = _parse_range(args)
    status = EXIT_OK
    for p in primes:
        n, r = FAMILY_PARAMS[args.family]
        params = FamilyParams(n, r, p)
        mismatches = _verify_mismatches(args.family, p)
        found = sum(clambda_is_superspecial(params, lam)
                    for lam in range(2, p))
        out.write(f"p={p} family={args.family}: {p - 2} lambda-values "
                  f"checked, {len(mismatches)} mismatches, "
                  f"{found} superspecial lambda\n")
        if mismatches:
            out.write(f"  mismatching lambda: {mismatches}\n")
            status = EXIT_INTERNAL
    return status


def cmd_oracle(args, out) -> int:
    p = args.p
    if not is_prime(p) or p <= 13:
        raise UsageError(f"p = {p} must be a prime > 13")
    if args.n % p == 0:
        raise UsageError(f"p = {p} divides n = {args.n}")
    try:
        coeffs = [int(c) for c in args.f.split(",")]
    except ValueError:
        raise UsageError(f"bad coefficient list {args.f!r}")
    f = Poly(coeffs, p)
    if f.degree < 3:
        raise UsageError(f"deg f = {f.degree} < 3")
    if not is_separable(f):
        d = poly_gcd(f, f.derivative())
        raise UsageError(f"f is not square-free mod {p}: gcd(f, f') = {d}")
    curve = SuperellipticCurve(args.n, f, p)
    witnesses = oracle_witnesses(curve)
    if witnesses:
        out.write("not superspecial\n")
        for w in witnesses:
            out.write(f"witness (i,j,h,k) = ({w.i},{w.j},{w.h},{w.k})\n")
    else:
        out.write("superspecial\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssquintic",
        description="Superspecial plane quintic curves over F_p")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_prime_args(sp):
        group = sp.add_mutually_exclusive_group(required=True)
        group.add_argument("--prime", type=int, help="single prime p > 13")
        group.add_argument("--range", help="prime range A..B (inclusive)")
        sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="parallel workers for sweeps")
        sp.add_argument("--format", choices=("csv", "json", "table"),
                        default="table")

    sp = sub.add_parser("count", help="enumerate a one-parameter family")
    sp.add_argument("--family", choices=("z10", "z8"), required=True)
    add_prime_args(sp)
    sp.add_argument("--verify", action="store_true",
                    help="run the brute-force oracle cross-check per prime "
                         "(small p only)")

    sp = sub.add_parser("fixed", help="fixed-type congruence verdicts")
    sp.add_argument("--type", type=int, choices=tuple(FIXED_TYPE_MAP),
                    required=True)
    add_prime_args(sp)

    sp = sub.add_parser("verify",
                        help="criterion vs oracle over all lambda")
    sp.add_argument("--family", choices=("z10", "z8"), required=True)
    add_prime_args(sp)

    sp = sub.add_parser("oracle",
                        help="coefficient-vanishing test for y^n = f(x)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--f", required=True,
                    help="comma-separated coefficients, constant term first")
    sp.add_argument("--p", type=int, required=True)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = {"count": cmd_count, "fixed": cmd_fixed,
               "verify": cmd_verify, "oracle": cmd_oracle}[args.command]
    try:
        return handler(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
