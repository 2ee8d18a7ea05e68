"""Command-line interface.

Subcommands:
  count   subgroup count of one type, numeric or symbolic
  f2      factorization count by a chosen route (theorem3 | mobius | oracle)
  verify  cross-check every route and structural invariant on one instance
  table   grid of counts over types and primes, with internal consistency check

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
3 oracle cap exceeded.  The oracle cap defaults to 4096 elements and can be
overridden by --max-order or the PGF_MAX_ORDER environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .formulas import (
    METHOD_CLOSED_FORM,
    factorization_count,
    subgroup_count,
)
from .grouptype import GroupType, parse_type
from .mobius import (
    factorization_count_mobius,
    quotient_type,
    quotient_type_census,
    reference_census,
    enumerate_subspaces,
)
from .oracle import (
    DEFAULT_MAX_ORDER,
    GroupTooLarge,
    VerificationReport,
    all_subgroups,
    build_group,
    count_factorizations,
    verify_hall,
    verify_inversion_forms,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3

ALL_CHECKS = ("count", "f2", "hall", "eq2", "census")


class UsageError(Exception):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_common(args) -> GroupType:
    try:
        return parse_type(args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require_prime(p: int) -> int:
    if not _is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")
    return p


def _resolve_cap(args) -> int:
    if getattr(args, "max_order", None) is not None:
        return args.max_order
    env = os.environ.get("PGF_MAX_ORDER")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"PGF_MAX_ORDER must be an integer, got {env!r}") from None
    return DEFAULT_MAX_ORDER


def _mode(args) -> "int | None":
    """Return the prime for numeric mode, None for symbolic."""
    if args.symbolic and args.p is not None:
        raise UsageError("--p and --symbolic are mutually exclusive")
    if not args.symbolic and args.p is None:
        raise UsageError("one of --p or --symbolic is required")
    if args.p is not None:
        return _require_prime(args.p)
    return None


def _emit_scalar(args, gtype: GroupType, quantity: str, method: str, value) -> None:
    text = str(value)
    if args.format == "text":
        print(text)
    elif args.format == "json":
        print(
            _canonical_json(
                {
                    "type": list(gtype.exponents),
                    "p": args.p,
                    "quantity": quantity,
                    "method": method,
                    "value": text,
                }
            )
        )
    else:  # csv
        print("lambda1,lambda2,lambda3,p,quantity,method,value")
        p_cell = "" if args.p is None else str(args.p)
        print(f"{gtype[0]},{gtype[1]},{gtype[2]},{p_cell},{quantity},{method},{text}")


def cmd_count(args) -> int:
    gtype = _parse_common(args)
    result = subgroup_count(gtype, _mode(args))
    _emit_scalar(args, gtype, "f", result.method, result.value)
    return EXIT_OK


def cmd_f2(args) -> int:
    gtype = _parse_common(args)
    p = _mode(args)
    if args.method == "theorem3":
        value = factorization_count(gtype, p).value
    elif args.method == "mobius":
        if p is None:
            raise UsageError("--method mobius requires --p")
        value = factorization_count_mobius(gtype, p)
    else:  # oracle
        if p is None:
            raise UsageError("--method oracle requires --p")
        g = build_group(gtype, p, _resolve_cap(args))
        value = count_factorizations(g, all_subgroups(g))
    _emit_scalar(args, gtype, "f2", args.method, value)
    return EXIT_OK


def _census_checks(report: VerificationReport, gtype: GroupType, p: int) -> None:
    for k in (1, 2):
        actual = quotient_type_census(gtype, k, p)
        expected = reference_census(gtype, k, p)
        report.add(f"census_k{k}", expected.entries, actual.entries)
    full = enumerate_subspaces(3, 3, p)[0]
    shrunk = GroupType(tuple(e - 1 for e in gtype.exponents))
    report.add("census_full_socle", shrunk, quotient_type(gtype, full, p))


def cmd_verify(args) -> int:
    gtype = _parse_common(args)
    if args.p is None:
        raise UsageError("verify requires --p")
    p = _require_prime(args.p)
    if args.checks is None:
        checks = [c for c in ALL_CHECKS if c != "census" or gtype.rank == 3]
    else:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in ALL_CHECKS]
        if unknown:
            raise UsageError(f"unknown checks: {','.join(unknown)}")
        if not checks:
            raise UsageError("empty check list")
        if "census" in checks and gtype.rank != 3:
            raise UsageError("census check requires a rank-3 type")

    report = VerificationReport(gtype, p)
    need_lattice = any(c in checks for c in ("count", "f2", "hall", "eq2"))
    if need_lattice:
        g = build_group(gtype, p, _resolve_cap(args))
        lattice = all_subgroups(g)
    if "count" in checks:
        report.add("count", len(lattice), subgroup_count(gtype, p).value)
    if "f2" in checks:
        direct = count_factorizations(g, lattice)
        report.add("f2_theorem3", direct, factorization_count(gtype, p).value)
        report.add("f2_mobius", direct, factorization_count_mobius(gtype, p))
    if "hall" in checks:
        report.checks.extend(verify_hall(g, lattice).checks)
    if "eq2" in checks:
        report.checks.extend(verify_inversion_forms(g, lattice).checks)
    if "census" in checks:
        _census_checks(report, gtype, p)

    print(
        _canonical_json(
            {
                "instance": {"type": list(gtype.exponents), "p": p},
                "checks": [
                    {
                        "name": c.name,
                        "status": c.status,
                        "expected": c.expected,
                        "actual": c.actual,
                    }
                    for c in report.checks
                ],
                "overall": report.overall,
            }
        )
    )
    return EXIT_OK if report.overall else EXIT_MISMATCH


def _grid_types(max_lambda: int) -> list[GroupType]:
    out = []
    for e1 in range(1, max_lambda + 1):
        for e2 in range(e1 + 1):
            for e3 in range(e2 + 1):
                out.append(GroupType((e1, e2, e3)))
    out.sort(key=lambda t: t.exponents)
    return out


def cmd_table(args) -> int:
    try:
        primes = [int(x) for x in args.primes.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse --primes {args.primes!r}") from None
    if not primes:
        raise UsageError("--primes must list at least one prime")
    for p in primes:
        _require_prime(p)
    if args.max_lambda < 1:
        raise UsageError("--max-lambda must be at least 1")
    cap = _resolve_cap(args)

    rows = []
    consistent = True
    for gtype in _grid_types(args.max_lambda):
        for p in primes:
            f_val = subgroup_count(gtype, p).value
            f2_closed = factorization_count(gtype, p).value
            f2_mob = factorization_count_mobius(gtype, p)
            if gtype.order(p) <= cap:
                g = build_group(gtype, p, cap)
                f2_orc = count_factorizations(g, all_subgroups(g))
            else:
                f2_orc = None
            seen = {f2_closed, f2_mob} | ({f2_orc} if f2_orc is not None else set())
            if len(seen) != 1:
                consistent = False
            rows.append(
                {
                    "lambda1": gtype[0],
                    "lambda2": gtype[1],
                    "lambda3": gtype[2],
                    "p": p,
                    "f": str(f_val),
                    "f2_theorem3": str(f2_closed),
                    "f2_mobius": str(f2_mob),
                    "f2_oracle": None if f2_orc is None else str(f2_orc),
                }
            )

    columns = ("lambda1", "lambda2", "lambda3", "p", "f", "f2_theorem3", "f2_mobius", "f2_oracle")
    if args.format == "json":
        print(_canonical_json(rows))
    elif args.format == "csv":
        print(",".join(columns))
        for row in rows:
            print(",".join("" if row[c] is None else str(row[c]) for c in columns))
    else:
        widths = {c: max(len(c), *(len(str(r[c] if r[c] is not None else "")) for r in rows)) for c in columns}
        print("  ".join(c.ljust(widths[c]) for c in columns))
        for row in rows:
            print(
                "  ".join(
                    str(row[c] if row[c] is not None else "").ljust(widths[c])
                    for c in columns
                )
            )
    if not consistent:
        print("error: methods disagree on at least one row", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgfactor",
        description="Exact subgroup and factorization counts for abelian p-groups of rank <= 3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_type_mode(sp, oracle_cap=False):
        sp.add_argument("--type", required=True, help="group type as 'e1,e2,e3', descending")
        sp.add_argument("--p", type=int, help="prime to evaluate at")
        sp.add_argument("--symbolic", action="store_true", help="leave p symbolic")
        sp.add_argument("--format", choices=("json", "csv", "text"), default="text")
        if oracle_cap:
            sp.add_argument("--max-order", type=int, help="oracle element cap (default 4096)")

    sp = sub.add_parser("count", help="total number of subgroups")
    add_type_mode(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("f2", help="factorization count")
    add_type_mode(sp, oracle_cap=True)
    sp.add_argument(
        "--method",
        choices=("theorem3", "mobius", "oracle"),
        default=METHOD_CLOSED_FORM,
        help="computation route",
    )
    sp.set_defaults(func=cmd_f2)

    sp = sub.add_parser("verify", help="cross-check all routes on one instance")
    sp.add_argument("--type", required=True, help="group type as 'e1,e2,e3', descending")
    sp.add_argument("--p", type=int, required=True, help="prime to evaluate at")
    sp.add_argument("--checks", help=f"comma list out of {','.join(ALL_CHECKS)} (default: all applicable)")
    sp.add_argument("--max-order", type=int, help="oracle element cap (default 4096)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="grid of counts over types and primes")
    sp.add_argument("--max-lambda", type=int, required=True, help="largest exponent in the grid")
    sp.add_argument("--primes", required=True, help="comma-separated primes")
    sp.add_argument("--format", choices=("json", "csv", "text"), default="text")
    sp.add_argument("--max-order", type=int, help="oracle element cap (default 4096)")
    sp.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
