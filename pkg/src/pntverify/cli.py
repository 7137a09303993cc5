"""Command-line front end: tables, verification suites, constant estimates,
and the PNT ratio demonstration, all emitted as CSV.

Exit codes: 0 all checks passed, 1 at least one failing check row,
2 usage or configuration error. Output is deterministic for identical
arguments (including --seed); floats print with 12 significant digits,
comma delimiter, LF line endings.
"""

from __future__ import annotations

import argparse
import csv
import sys
from contextlib import ExitStack

from . import asymptotics, selberg, suites, tables


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def _decade_points(max_n: int) -> list[int]:
    xs = []
    d = 100
    while d <= max_n:
        xs.append(d)
        d *= 10
    if not xs or xs[-1] != max_n:
        xs.append(max_n)
    return xs


def _write_rows(out_path, header, rows) -> None:
    with ExitStack() as stack:
        if out_path:
            fh = stack.enter_context(open(out_path, "w", newline=""))
        else:
            fh = sys.stdout
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


def _cmd_tables(args) -> int:
    t = tables.build_tables(args.max)
    rows = [
        (x, tables.pi(x, t), tables.theta(x, t), tables.psi(x, t), tables.r_error(x, t))
        for x in _decade_points(args.max)
    ]
    _write_rows(args.out, ["x", "pi", "theta", "psi", "r_error"], rows)
    return 0


def _cmd_verify(args) -> int:
    results = suites.run_suite(args.suite, max_n=args.max, seed=args.seed)
    rows = [(r.suite, r.check, r.status, r.witness_x, r.value) for r in results]
    _write_rows(args.out, ["suite", "check", "status", "witness_x", "value"], rows)
    return 0 if all(r.passed for r in results) else 1


def _cmd_estimate(args) -> int:
    catalog = {c.name: c for c in asymptotics.identity_catalog(args.max)}
    claim = catalog[args.identity]
    grid = asymptotics.SampleGrid(
        int(claim.threshold), args.max, include_midpoints=claim.domain == "reals"
    )
    c, witness = asymptotics.estimate_constant(
        lambda x: claim.lhs(x) - claim.rhs_main(x), claim.rhs_bound, grid
    )
    _write_rows(args.out, ["identity", "C", "witness_x"], [(args.identity, c, witness)])
    return 0


def _cmd_pnt(args) -> int:
    t = tables.build_tables(args.max)
    rows = [
        (r.x, r.pi, r.theta, r.psi, r.pi_ratio, r.theta_ratio, r.psi_ratio, r.r_error)
        for r in selberg.pnt_ratio_table(t, _decade_points(args.max))
    ]
    header = ["x", "pi", "theta", "psi", "pi_ratio", "theta_ratio", "psi_ratio", "r_error"]
    _write_rows(args.out, header, rows)
    return 0


def _positive_int(minimum):
    def parse(s: str) -> int:
        v = int(s)
        if v < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {v}")
        return v

    return parse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pntverify",
        description="Numerical verification of the elementary prime number theorem toolkit.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, max_min=10):
        sp.add_argument("--max", type=_positive_int(max_min), default=10**6,
                        help="table / scan limit N (default 1000000)")
        sp.add_argument("--out", default=None, help="CSV output path (default stdout)")

    sp = sub.add_parser("tables", help="build tables, emit decade checkpoints")
    common(sp, max_min=1)
    sp.set_defaults(func=_cmd_tables)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("--suite", required=True, choices=suites.SUITE_NAMES + ("all",))
    sp.add_argument("--seed", type=int, default=0,
                    help="seed for randomized checks (Mersenne Twister; default 0)")
    common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("estimate", help="estimate the constant of a catalog identity")
    sp.add_argument("--identity", required=True, choices=asymptotics.CATALOG_NAMES)
    common(sp)
    sp.set_defaults(func=_cmd_estimate)

    sp = sub.add_parser("pnt", help="emit the PNT ratio table at decade points")
    common(sp)
    sp.set_defaults(func=_cmd_pnt)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, tables.MemoryBudgetError) as exc:
        print(f"pntverify: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
