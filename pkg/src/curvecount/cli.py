"""Command-line front end: ``curvecount <command> ...``.

Exit codes: 0 success, 1 a check did not match, 2 bad usage, 3 a size limit was hit.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .fields import CapacityError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

# short notes printed by --explain, keyed by command
EXPLAIN = {
    "census": "isomorphism classes weighted by 1/#Aut; genus 2 uses orbit masses of binary sextics",
    "sigma": "weighted sum of irreducible characters over the curve census, trace of Frobenius per class",
    "trace": "Hecke trace = sign * (M_2 sum + A_1,1 diagonal) + correction built from genus-1 traces",
    "m1n": "direct: configurations of points on each elliptic curve; getzler: residue of a Laurent series",
    "mbar1n": "sum over stable graphs of open stratum counts",
    "fitpoly": "exact Lagrange interpolation, extra samples must lie on the polynomial",
    "strata": "p-rank and a-number from the Cartier matrix, compared with the Newton polygon",
    "mass": "closed-form masses compared with direct censuses where possible",
    "build-ss": "Artin-Schreier constructions, verified by point counts up to genus 4",
    "verify": "the acceptance suite",
}


def _frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- commands ------------------------------------------------------------------

def cmd_census(args) -> int:
    from .store import cache_dir, elliptic_records, genus2_records, write_records

    recs = elliptic_records(args.q) if args.genus == "g1" else genus2_records(args.q)
    out = Path(args.out) if args.out else None
    if args.cache:
        out = cache_dir() / f"{args.genus}_q{args.q}.jsonl"
    if out:
        write_records(out, recs)
        print(f"wrote {len(recs)} records to {out}")
    total = sum((r.weight for r in recs), Fraction(0))
    if args.genus == "g1":
        for r in recs:
            print(f"{r.model} N1={r.counts[0]} mass={_frac(r.weight)} j={r.invariants['j']}")
    elif not args.quiet:
        for r in recs:
            print(f"{r.model} counts={list(r.counts)} mass={_frac(r.weight)}")
    print(f"total mass {_frac(total)}")
    return EXIT_OK


def cmd_sigma(args) -> int:
    if args.genus == 1:
        from .census_g1 import sigma_k

        print(sigma_k(args.q, args.weight[0]))
    else:
        from .census_g2 import sigma_ab

        if len(args.weight) != 2:
            raise _Usage("genus 2 needs --weight a b")
        print(sigma_ab(args.q, *args.weight).value)
    return EXIT_OK


def cmd_trace(args) -> int:
    if args.degree == "g1":
        from .modforms import hecke_trace

        print(hecke_trace(args.weight[0], args.prime))
    elif args.degree == "g2":
        from .census_g2 import trace_degree2

        if len(args.weight) != 2:
            raise _Usage("degree 2 needs --weight j k")
        print(trace_degree2(args.prime, *args.weight))
    else:
        from .census_g2 import trace_degree3
        from .store import bundled_sigma_abc, cache_dir, load_sigma_abc

        if len(args.weight) != 3:
            raise _Usage("degree 3 needs --weight i j k")
        cached = cache_dir() / "sigma_abc.txt"
        if args.sigma_file:
            table = load_sigma_abc(args.sigma_file)
        elif cached.exists():
            table = load_sigma_abc(cached)
        else:
            table = bundled_sigma_abc()
        try:
            print(trace_degree3(args.prime, *args.weight, table))
        except KeyError as exc:
            print(f"missing sigma_(a,b,c) entry {exc}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_m1n(args) -> int:
    from .moduli import m1n_direct, m1n_getzler

    vals = {}
    if args.route in ("direct", "both"):
        vals["direct"] = m1n_direct(args.q, args.n)
    if args.route in ("getzler", "both"):
        vals["getzler"] = m1n_getzler(args.q, args.n)
    for k, v in vals.items():
        print(f"{k}: {v}")
    if len(set(vals.values())) > 1:
        print("routes disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_mbar1n(args) -> int:
    from .moduli import mbar1n

    print(mbar1n(args.q, args.n))
    return EXIT_OK


def cmd_fitpoly(args) -> int:
    from .moduli import PolynomialFitError, poly_fit_and_check

    samples = []
    for line in Path(args.input).read_text().splitlines():
        line = line.split("#")[0].strip()
        if line:
            q, v = line.replace(",", " ").split()
            samples.append((int(q), int(v)))
    try:
        poly = poly_fit_and_check(samples, args.degree, complete=args.complete)
    except PolynomialFitError as exc:
        print(f"no fit: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"{poly} symmetric={'yes' if poly.is_palindromic() else 'no'}")
    return EXIT_OK


def cmd_strata(args) -> int:
    from .strata import scan_odd_genus2, strata_census_g2_char2

    if args.genus != 2:
        raise _Usage("only genus 2 censuses are available")
    if args.char == 2:
        c = strata_census_g2_char2(args.q)
        for k, v in c.closed.items():
            print(f"{k}: {_frac(v)}")
        return EXIT_MISMATCH if c.failures else EXIT_OK
    s = scan_odd_genus2(args.q)
    print(f"curves: {s.curves}")
    print(f"agreement failures: {len(s.agreement_failures)}")
    print(f"twist failures: {len(s.twist_failures)}")
    print(f"bound violations: {len(s.bound_violations)}")
    return EXIT_OK if s.ok else EXIT_MISMATCH


def cmd_mass(args) -> int:
    from . import mass

    if args.what == "deuring":
        rows = mass.deuring_report(args.p)
        for r in rows:
            print(f"{r.label}: formula {_frac(r.formula)} census {_frac(r.census)}")
        return EXIT_OK if all(r.match for r in rows) else EXIT_MISMATCH
    if args.what == "ekedahl":
        print(_frac(mass.ekedahl_ss_mass(args.g, args.p)))
        return EXIT_OK
    mb = mass.moret_bailly(args.p, args.n)
    print(f"lines: {_frac(mb.lines)}")
    print(f"superspecial: {_frac(mb.superspecial)}")
    print(f"superspecial in M_2: {_frac(mb.in_m2)}")
    return EXIT_OK if mb.incidence_holds() else EXIT_MISMATCH


def cmd_build_ss(args) -> int:
    from .strata import build_ss_char2, build_ss_oddp, large_genus_examples, quotient_curve

    if args.large:
        cands = large_genus_examples()
    elif args.d is not None:
        cands = [quotient_curve(args.p, args.m, args.d, args.h)]
    elif args.p == 2:
        cands = [build_ss_char2(args.h)]
    else:
        cands = [build_ss_oddp(args.p, args.h)]
    for c in cands:
        slopes = " ".join(_frac(s) for s in c.slopes) or "-"
        print(f"{c.model}  genus={c.genus}  {c.status}  slopes={slopes}")
    return EXIT_OK


def cmd_ingest(args) -> int:
    import shutil

    from .store import cache_dir, load_sigma_abc

    table = load_sigma_abc(args.file)
    dest = cache_dir() / "sigma_abc.txt"
    shutil.copyfile(args.file, dest)
    print(f"ingested {len(table)} entries into {dest}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .acceptance import CRITERIA, run

    ids = [c[0] for c in CRITERIA] if args.which == "all" else [int(args.which)]
    for i in ids:
        r = run(i)
        print(r.line(), flush=True)
        if not r.ok:
            print(f"first mismatch: criterion {r.cid}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="curvecount", description="Point counts of curves and moduli over finite fields.")
    ap.add_argument("--explain", action="store_true", help="print a one-line method note before running")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="curve census over F_q")
    p.add_argument("genus", choices=("g1", "g2"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out", help="write JSON-lines records here")
    p.add_argument("--cache", action="store_true", help="write into the cache directory")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("sigma", help="census-weighted character sums")
    p.add_argument("--genus", type=int, choices=(1, 2), required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--weight", type=int, nargs="+", required=True)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("trace", help="Hecke traces on level-1 cusp forms")
    p.add_argument("degree", choices=("g1", "g2", "g3"))
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--weight", type=int, nargs="+", required=True)
    p.add_argument("--sigma-file", help="sigma_(a,b,c) table, lines 'p a b c value'")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("m1n", help="#M_1,n(F_q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=("direct", "getzler", "both"), default="both")
    p.set_defaults(func=cmd_m1n)

    p = sub.add_parser("mbar1n", help="#Mbar_1,n(F_q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_mbar1n)

    p = sub.add_parser("fitpoly", help="fit a polynomial in q to sample counts")
    p.add_argument("--in", dest="input", required=True, help="file of 'q count' lines")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--complete", action="store_true", help="require a palindromic polynomial")
    p.set_defaults(func=cmd_fitpoly)

    p = sub.add_parser("strata", help="p-rank / a-number strata")
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("mass", help="mass formulas")
    p.add_argument("--what", choices=("deuring", "ekedahl", "moret-bailly"), required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--g", type=int, default=2)
    p.set_defaults(func=cmd_mass)

    p = sub.add_parser("build-ss", help="construct supersingular curves")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--d", type=int, help="build y^(p^m) - y = x^d instead")
    p.add_argument("--large", action="store_true", help="the two large-genus examples")
    p.set_defaults(func=cmd_build_ss)

    p = sub.add_parser("ingest", help="import external data")
    p.add_argument("what", choices=("sigma-abc",))
    p.add_argument("file")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("verify", help="run acceptance checks")
    p.add_argument("which", nargs="?", default="all", help="'all' or a criterion number")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.explain:
        print(f"# {EXPLAIN[args.command]}")
    try:
        return args.func(args)
    except _Usage as exc:
        ap.error(str(exc))
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
