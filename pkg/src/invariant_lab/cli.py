"""Command line interface: ``invariant-lab <command> ...``.

Exit codes: 0 success (or composite certified), 1 negative finding
(prime or prime power), 2 usage error, 3 resource bound exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from .arithmetic import NaturalRangeError, OracleBoundError
from .carmichael import CSV_HEADER, hypothesis_check, iter_carmichael, omega_report
from .euler import (
    euler_classification,
    euler_phi,
    generalized_euler_residue,
    support_of,
    subgroup_table,
)
from .invariants import invariants_from_factorization, paper_view, primality_by_invariants

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


class UsageError(Exception):
    pass


def _join(values) -> str:
    return ", ".join(str(v) for v in values)


def _pairs(pairs) -> str:
    return ", ".join(f"({a}, {b})" for a, b in pairs)


def _emit_json(out, command: str, payload: dict, **where) -> None:
    envelope = {"command": command, **where, "style": "json", "payload": payload}
    out.write(json.dumps(envelope, sort_keys=True) + "\n")


def cmd_invariants(args, out) -> int:
    report = invariants_from_factorization(args.m)
    if args.json:
        payload = report.as_dict()
        if args.paper_style:
            payload["paper"] = paper_view(report)
        _emit_json(out, "invariants", payload, modulus=args.m)
        return EXIT_OK
    print(f"m = {args.m}", file=out)
    if args.paper_style:
        view = paper_view(report)
        print(f"invariants: {_join(view['invariants'])}", file=out)
        print(f"anti-invariants: {_join(view['anti_invariants'])}", file=out)
        print(f"tuples: {_pairs(view['tuples'])}", file=out)
    else:
        print(f"invariants: {_join(report.invariants)}", file=out)
        print(f"anti-invariants: {_join(report.anti_invariants)}", file=out)
        print(f"tuples: {_pairs(report.tuples)}", file=out)
    print(f"nontrivial: {_join(report.nontrivial) or '-'}", file=out)
    return EXIT_OK


def cmd_euler(args, out) -> int:
    m = args.m
    if m < 2:
        raise UsageError("euler requires m >= 2")
    if args.a is not None:
        if not 0 <= args.a < m:
            raise UsageError(f"--a must lie in [0, {m})")
        phi = euler_phi(m)
        value = generalized_euler_residue(args.a, m)
        if args.json:
            payload = {"a": args.a, "phi": phi, "support": support_of(args.a, m), "invariant": value}
            _emit_json(out, "euler", payload, modulus=m)
        else:
            print(f"{args.a}^{phi} mod {m} = {value}", file=out)
        return EXIT_OK
    cls = euler_classification(m)
    if args.json:
        _emit_json(out, "euler", cls.as_dict(), modulus=m)
        return EXIT_OK
    print(f"m = {m}  phi = {cls.phi}", file=out)
    print(f"{'support':>10} {'invariant':>10} {'residues':>10}", file=out)
    for c in cls.classes:
        print(f"{c.support:>10} {c.idempotent:>10} {c.size:>10}", file=out)
    return EXIT_OK


def cmd_primality(args, out) -> int:
    if args.m < 2:
        raise UsageError("primality requires m >= 2")
    cert = primality_by_invariants(args.m)
    if args.json:
        payload = {"verdict": "composite" if cert else "prime-or-prime-power",
                   "certificate": cert.as_dict() if cert else None}
        _emit_json(out, "primality", payload, modulus=args.m)
    elif cert:
        print(f"composite: witness {cert.witness}, factors {cert.factor_a} x {cert.factor_b}", file=out)
    else:
        print("prime-or-prime-power", file=out)
    return EXIT_OK if cert else EXIT_NEGATIVE


def cmd_table(args, out) -> int:
    try:
        tab = subgroup_table(args.m, args.a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        _emit_json(out, "table", tab.as_dict(), modulus=args.m)
        return EXIT_OK
    width = len(str(args.m))
    head = " ".join(f"{x:>{width}}" for x in tab.elements)
    print(f"{'':>{width}} | {head}", file=out)
    print("-" * (width + 1) + "+" + "-" * (len(head) + 1), file=out)
    for x, row in zip(tab.elements, tab.table):
        print(f"{x:>{width}} | " + " ".join(f"{v:>{width}}" for v in row), file=out)
    print(f"I={tab.identity} A={tab.anti_identity}", file=out)
    print("inverses: " + ", ".join(f"{x}->{y}" for x, y in tab.inverses), file=out)
    return EXIT_OK


def _print_record(rec, out) -> None:
    print(f"m = {rec.m}", file=out)
    print(f"factorization: {rec.factorization.render()}", file=out)
    print(f"omega: {rec.omega}", file=out)
    if rec.ratio is None:
        print(f"ratio: non-integral ({rec.m - 1}/{rec.omega})", file=out)
    else:
        print(f"ratio: {rec.ratio}", file=out)
    print(f"korselt: {str(rec.korselt).lower()}", file=out)
    print(f"fermat_verified: {str(rec.fermat_verified).lower()}", file=out)
    print(f"carmichael: {'yes' if rec.korselt else 'no'}", file=out)


def cmd_carmichael(args, out) -> int:
    if args.action == "check":
        rec = hypothesis_check(args.m)
        if args.json:
            _emit_json(out, "carmichael check", rec.as_dict(), modulus=args.m)
        elif args.csv:
            w = csv.writer(out, lineterminator="\n")
            w.writerow(CSV_HEADER)
            w.writerow(rec.csv_row())
        else:
            _print_record(rec, out)
        return EXIT_OK

    def progress(m: int) -> None:
        print(f"scanning {m}...", file=sys.stderr)

    records = iter_carmichael(args.lo, args.hi, progress=progress if args.progress else None)
    if args.json:
        payload = {"records": [r.as_dict() for r in records]}
        _emit_json(out, "carmichael scan", payload, range=[args.lo, args.hi])
    elif args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for rec in records:
            w.writerow(rec.csv_row())
            out.flush()
    else:
        for rec in records:
            print(f"{rec.m} = {rec.factorization.render()}  omega={rec.omega} "
                  f"ratio={rec.ratio} fermat_verified={str(rec.fermat_verified).lower()}", file=out)
            out.flush()
    return EXIT_OK


def cmd_omega(args, out) -> int:
    rep = omega_report(args.m)
    if args.json:
        _emit_json(out, "omega", rep.as_dict(), modulus=args.m)
        return EXIT_OK
    print(f"m = {rep.m}", file=out)
    print(f"omega: {rep.omega_paper}", file=out)
    print(f"lambda: {rep.lambda_standard}", file=out)
    print(f"phi: {rep.phi}", file=out)
    print(f"omega divides phi: {str(rep.divides_phi).lower()}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON envelope")

    parser = argparse.ArgumentParser(
        prog="invariant-lab",
        description="Idempotents modulo m, the generalized Euler theorem and Carmichael numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="list invariants, anti-invariants and tuples")
    p.add_argument("m", type=int)
    p.add_argument("--paper-style", action="store_true", help="render the invariant 0 as m")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("euler", parents=[common], help="where a**phi(m) lands")
    p.add_argument("m", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="one row per unitary divisor (default)")
    mode.add_argument("--a", type=int, help="a single residue")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("primality", parents=[common], help="certify compositeness by a non-trivial invariant")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_primality)

    p = sub.add_parser("table", parents=[common], help="multiplication table of the multiples of a unitary divisor")
    p.add_argument("m", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("carmichael", help="Omega ratio test and Carmichael scans")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("check", parents=[common])
    c.add_argument("m", type=int)
    c.add_argument("--csv", action="store_true")
    c.set_defaults(func=cmd_carmichael)
    c = csub.add_parser("scan", parents=[common])
    c.add_argument("lo", type=int)
    c.add_argument("hi", type=int)
    c.add_argument("--csv", action="store_true")
    c.add_argument("--progress", action="store_true", help="report progress on stderr")
    c.set_defaults(func=cmd_carmichael)

    p = sub.add_parser("omega", parents=[common], help="Omega exponent next to phi and lambda")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_omega)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except OracleBoundError as exc:
        print(f"invariant-lab: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, ValueError, NaturalRangeError) as exc:
        print(f"invariant-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
