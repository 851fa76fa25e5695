"""Command-line surface: verify, chars, sieve, primesearch, search."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from sedf import sieve as sieve_mod
from sedf.familyfile import FamilyParseError, load_family, serialize_family
from sedf.groups import make_group
from sedf.prime_search import candidate_primes, p3_pipeline, pell_brute, pell_chain
from sedf.search import SearchSpec, exhaustive_search, search_all
from sedf.verifier import FamilyError, char_profile, verify_sedf

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BAD_INPUT = 2


def builtin_fixture_paths() -> dict[str, Path]:
    from importlib.resources import files

    base = files("sedf") / "tables"
    return {f"table{i}": Path(str(base / f"table{i}.csv")) for i in (1, 2, 3)}


def _fixture_paths(directory: str) -> dict[str, Path]:
    if directory == "builtin":
        return builtin_fixture_paths()
    base = Path(directory)
    return {f"table{i}": base / f"table{i}.csv" for i in (1, 2, 3)}


def _print_profile(profile, csv_mode: bool) -> None:
    if csv_mode:
        print("chi,order,class,norm_d,a_chi,ell_chi,norms,identity_ok")
        for e in profile.entries:
            chi = ";".join(str(c) for c in e.chi)
            norms = ";".join("-" if x is None else str(x) for x in e.norms)
            nd = "-" if e.norm_d is None else str(e.norm_d)
            a = "-" if e.a_chi is None else str(e.a_chi)
            ell = "-" if e.ell_chi is None else str(e.ell_chi)
            print(f"({chi}),{e.order},{e.cls},{nd},{a},{ell},{norms},{e.eq_identity_ok}")
        return
    print(
        f"profile: lambda={profile.lam} |G0*|={profile.n_zero} "
        f"|GN*|={profile.n_nonzero} a={profile.a}"
    )
    for e in profile.entries:
        norms = ",".join("~" if x is None else str(x) for x in e.norms)
        print(
            f"  chi={e.chi} order={e.order} class={e.cls} |chi(D)|^2={e.norm_d} "
            f"norms=[{norms}] a_chi={e.a_chi} ell_chi={e.ell_chi} identity_ok={e.eq_identity_ok}"
        )
    if profile.violations:
        for vio in profile.violations:
            print(f"  violation: {vio}")
    else:
        print("  violations: none")


def cmd_verify(args) -> int:
    try:
        fam, warnings = load_family(args.path)
    except FileNotFoundError:
        print(f"error: cannot read {args.path}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (FamilyParseError, FamilyError) as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    for w in warnings:
        print(f"warning: {args.path}: {w}", file=sys.stderr)
    report = verify_sedf(fam)
    if args.profile or args.csv:
        _print_profile(char_profile(fam), args.csv)
    if report.is_sedf:
        print(f"SEDF({report.v},{report.m},{report.k},{report.lam})")
        return EXIT_OK
    if report.witness is not None:
        j, g, count = report.witness
        expect = "non-integral" if report.lam is None else str(_expected_lambda(fam))
        print(f"not an SEDF: witness j={j} g={g} count={count} (expected lambda={expect})")
    else:
        print("not an SEDF: derived lambda is not a positive integer")
    return EXIT_NEGATIVE


def _expected_lambda(fam) -> int:
    v, m, k = fam.params()
    return (m - 1) * k * k // (v - 1)


def cmd_sieve(args) -> int:
    if args.vmax > args.cap:
        print(f"error: --vmax {args.vmax} exceeds cap {args.cap}", file=sys.stderr)
        return EXIT_BAD_INPUT
    report = sieve_mod.sieve_report(args.vmax, v_cap=args.cap)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                sieve_mod.write_csv(report, fh)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
    else:
        sieve_mod.write_csv(report, sys.stdout)
    if args.fixtures:
        problems = sieve_mod.diff_against_fixtures(report, _fixture_paths(args.fixtures))
        if problems:
            for p in problems:
                print(f"fixture mismatch: {p}", file=sys.stderr)
            return EXIT_NEGATIVE
        print("fixtures: all rows match", file=sys.stderr)
    return EXIT_OK


def cmd_primesearch(args) -> int:
    if args.bound >= 1 << 63:
        print("error: bound must fit in a signed 64-bit word", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.brute:
        brute = pell_brute(args.brute)
        chain = [sol for sol in pell_chain(2 * args.brute + 2) if sol.s <= args.brute]
        ok = brute == chain
        print(f"brute scan s <= {args.brute}: {len(brute)} solutions, "
              f"chain agreement: {'ok' if ok else 'MISMATCH'}")
        if not ok:
            return EXIT_NEGATIVE
    for sol in pell_chain(args.bound):
        p = sol.p
        from sedf.arith import is_prime

        if p >= 2 and is_prime(p):
            cand = p3_pipeline(p, sol.s)
            print(
                f"x={sol.x} s={sol.s} p={p} prime verdict={cand.verdict} "
                f"m_theorem_stage={list(cand.surviving_m)} m_open={list(cand.open_m)}"
            )
        else:
            print(f"x={sol.x} s={sol.s} p={p} composite")
    primes = candidate_primes(args.bound)
    print(f"candidate primes <= {args.bound}: {[p for p, _ in primes]}")
    return EXIT_OK


def _parse_group_flag(text: str):
    try:
        return make_group([int(t) for t in text.split(",")])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def cmd_search(args) -> int:
    group = args.group
    outdir = Path(args.out) if args.out else None
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)
    written = 0

    def report_one(spec: SearchSpec, result) -> None:
        nonlocal written
        print(
            f"group={','.join(map(str, group.factors))} m={spec.m} k={spec.k} "
            f"lambda={spec.lam} status={result.status} "
            f"found={len(result.families)} nodes={result.nodes}"
        )
        for fam in result.families:
            text = serialize_family(fam)
            if outdir is not None:
                path = outdir / f"family{written:03d}.txt"
                path.write_text(text, encoding="utf-8")
                print(f"wrote {path}")
            else:
                sys.stdout.write(text)
            written += 1

    if args.all:
        for spec, result in search_all(
            group, node_budget=args.node_budget, time_budget=args.time_budget
        ):
            report_one(spec, result)
        return EXIT_OK
    if args.m is None or args.k is None:
        print("error: provide --m and --k, or --all", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        spec = SearchSpec(
            group, args.m, args.k, node_budget=args.node_budget, time_budget=args.time_budget
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    report_one(spec, exhaustive_search(spec))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sedf",
        description="Verify, sieve, and search strong external difference families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check a family file against the definition")
    p_verify.add_argument("path")
    p_verify.add_argument("--profile", action="store_true", help="print the character profile")
    p_verify.add_argument("--csv", action="store_true", help="print the profile as CSV")
    p_verify.set_defaults(func=cmd_verify)

    p_chars = sub.add_parser("chars", help="verify with the character profile (alias)")
    p_chars.add_argument("path")
    p_chars.add_argument("--csv", action="store_true")
    p_chars.set_defaults(func=cmd_verify, profile=True)

    p_sieve = sub.add_parser("sieve", help="run the parameter sieve")
    p_sieve.add_argument("--vmax", type=int, default=sieve_mod.DEFAULT_V_MAX)
    p_sieve.add_argument("--cap", type=int, default=sieve_mod.HARD_V_CAP)
    p_sieve.add_argument("--out", help="write the CSV report here instead of stdout")
    p_sieve.add_argument(
        "--fixtures",
        nargs="?",
        const="builtin",
        help="diff against fixture CSVs in DIR (default: bundled tables)",
    )
    p_sieve.set_defaults(func=cmd_sieve)

    p_prime = sub.add_parser("primesearch", help="scan primes for the cube-order case")
    p_prime.add_argument("--bound", type=int, default=3_000_000_000_000)
    p_prime.add_argument("--brute", type=int, default=0, help="also cross-check s <= BRUTE")
    p_prime.set_defaults(func=cmd_primesearch)

    p_search = sub.add_parser("search", help="exhaustive search in a small group")
    p_search.add_argument("--group", type=_parse_group_flag, required=True,
                          help="comma-separated cyclic factor orders, e.g. 3,3")
    p_search.add_argument("--m", type=int)
    p_search.add_argument("--k", type=int)
    p_search.add_argument("--all", action="store_true", help="run every feasible (m, k)")
    p_search.add_argument("--out", help="write FOUND families to this directory")
    p_search.add_argument("--node-budget", type=int, default=10_000_000)
    p_search.add_argument("--time-budget", type=float, default=600.0)
    p_search.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
