"""Command-line interface: ``glcohom {compositions,parabolic-info,cohomology,webb}``.

Exit statuses: 0 success / certified, 2 inconclusive parity, 3 missing
dimensions, 4 cap or memory ceiling exceeded, 5 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import cohom, webb
from .grpcore import DEFAULT_CAP, CapExceeded, order_factorization
from .parabolic import Composition, compositions, parabolic_generators, parabolic_label, symmetric_compositions
from .specs import GroupSpec, GroupSpecError, parse_group_spec

EXIT_OK = 0
EXIT_INCONCLUSIVE = 2
EXIT_MISSING = 3
EXIT_CAP = 4
EXIT_USAGE = 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt_order(n: int) -> str:
    two, odd = order_factorization(n)
    k = two.bit_length() - 1
    split = f"2^{k}" + (f"*{odd}" if odd > 1 else "")
    return f"{n:,} = {split}"


def cmd_compositions(args, out) -> int:
    if args.r < 1:
        raise UsageError("r must be at least 1")
    comps = symmetric_compositions(args.r, args.proper) if args.symmetric else compositions(args.r)
    if args.proper and not args.symmetric:
        comps = [c for c in comps if c.proper]
    for c in comps:
        out.write(("\t".join(map(str, c.parts)) if args.tsv else str(c)) + "\n")
    out.write(f"# {len(comps)} composition(s)\n")
    return EXIT_OK


def cmd_parabolic_info(args, out) -> int:
    spec = parse_group_spec(args.spec)
    if spec.family != "parabolic":
        raise UsageError("parabolic-info expects a parabolic:<q>:<r>:<parts> spec")
    q, lam = spec.params
    order = spec.order()
    rows = [
        ("group", spec.label),
        ("composition", str(lam)),
        ("order", _fmt_order(order)),
    ]
    if q == 2:
        rows.append(("generators", str(len(parabolic_generators(lam).generators))))
    else:
        rows.append(("generators", "n/a (explicit generators only for q=2)"))
    feasible = q == 2 and order <= args.cap
    rows.append(("enumerable", f"{'yes' if feasible else 'no'} (cap {args.cap:,})"))
    _write_rows(rows, out, args.tsv)
    return EXIT_OK


def _write_rows(rows, out, tsv: bool) -> None:
    w = max(len(k) for k, _ in rows)
    for k, v in rows:
        out.write(f"{k}\t{v}\n" if tsv else f"{k.ljust(w)}  {v}\n")


def _too_big(spec: GroupSpec, cap: int, max_bits: int) -> str | None:
    order = spec.order()
    if order > cap:
        return f"order {order:,} exceeds the enumeration cap {cap:,}"
    if order * order > max_bits:
        return f"order {order:,} exceeds the matrix ceiling of {max_bits:,} bits"
    return None


def _compute(spec: GroupSpec, degree: int, args) -> cohom.CohomologyResult:
    """Live computation; raises CapExceeded/ResourceExceeded when over budget."""
    if args.oracle:
        t = spec.table(cap=args.cap)
        dims = cohom.bar_oracle(t, degree)
        return cohom.CohomologyResult(spec.label, degree, dims[degree], "bar-oracle")
    reason = _too_big(spec, args.cap, args.max_bits)
    if reason:
        raise CapExceeded(reason)
    t = spec.table(cap=args.cap)
    return cohom.compute_cohomology(t, degree, max_bits=args.max_bits)


def cmd_cohomology(args, out) -> int:
    spec = parse_group_spec(args.spec)
    if args.degree < 0:
        raise UsageError("degree must be nonnegative")
    if spec.family == "parabolic" and spec.params[0] != 2:
        raise UsageError("cohomology is only computed for q = 2")
    try:
        res = _compute(spec, args.degree, args)
    except (CapExceeded, cohom.ResourceExceeded) as exc:
        sys.stderr.write(f"{spec.label}: {exc}; too large to compute here, "
                         f"look the dimension up in a ledger (webb --ledger PATH)\n")
        return EXIT_CAP
    except cohom.TooLargeForOracle as exc:
        raise UsageError(str(exc)) from exc
    rows = [("group", res.group_label), ("order", _fmt_order(spec.order())), ("degree", str(res.degree)),
            ("dim", str(res.dim)), ("method", res.method)]
    if res.resolution_ranks:
        rows.append(("ranks", " ".join(map(str, res.resolution_ranks))))
    _write_rows(rows, out, args.tsv)
    if args.ledger:
        entry = webb.LedgerEntry(res.group_label, res.degree, res.dim, "computed", res.method)
        webb.ledger_append(args.ledger, entry)
    return EXIT_OK


def cmd_webb(args, out) -> int:
    if args.r < 2:
        raise UsageError("r must be at least 2")
    if args.degree < 1:
        raise UsageError("degree must be at least 1")
    ledger = webb.Ledger()
    paths = ([webb.paper_ledger_path()] if args.paper_ledger else []) + ([args.ledger] if args.ledger else [])
    for path in paths:
        for entry in webb.ledger_load(path):
            ledger.add(entry)
    resolvers = [webb.ledger_resolver(ledger, args.degree)]
    if args.compute_missing:
        def live(lam: Composition):
            spec = GroupSpec("parabolic", (2, lam))
            try:
                res = _compute(spec, args.degree, args)
            except (CapExceeded, cohom.ResourceExceeded) as exc:
                sys.stderr.write(f"{parabolic_label(lam)}: not computed ({exc})\n")
                return None
            return res.dim, "computed"
        resolvers.append(live)
    try:
        report = webb.parity_sum(args.r, args.degree, webb.chain_resolvers(*resolvers))
    except webb.MissingDimension as exc:
        sys.stderr.write(f"missing data: {exc}\n")
        for lam in exc.missing:
            sys.stderr.write(f"  {parabolic_label(lam)},{args.degree}\n")
        return EXIT_MISSING
    out.write(webb.report_render(report, tsv=args.tsv))
    return EXIT_OK if report.certified else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="glcohom", description="Mod-2 cohomology of parabolics and parity certificates for GL_r(F_2).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, compute=False):
        sp.add_argument("--tsv", action="store_true", help="tab-separated output")
        if compute:
            sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order to enumerate")
            sp.add_argument("--max-bits", type=int, default=cohom.DEFAULT_MAX_BITS,
                            help="ceiling on expanded-matrix size in bits")
            sp.add_argument("--oracle", action="store_true", help="use the bar-complex oracle (|G| <= 16)")

    sp = sub.add_parser("compositions", help="list compositions of r")
    sp.add_argument("r", type=int)
    sp.add_argument("--symmetric", action="store_true")
    sp.add_argument("--proper", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_compositions)

    sp = sub.add_parser("parabolic-info", help="order and generator data of a parabolic")
    sp.add_argument("spec")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common(sp)
    sp.set_defaults(func=cmd_parabolic_info)

    sp = sub.add_parser("cohomology", help="compute dim H^d(G; F_2)")
    sp.add_argument("spec")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--ledger", help="append the result to this ledger file")
    common(sp, compute=True)
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("webb", help="parity certificate for H^d(GL_r(F_2))")
    sp.add_argument("r", type=int)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--ledger", help="ledger file to read dimensions from")
    sp.add_argument("--paper-ledger", action="store_true", help="also read the shipped published-values ledger")
    sp.add_argument("--compute-missing", action="store_true", help="compute dimensions absent from the ledger")
    common(sp, compute=True)
    sp.set_defaults(func=cmd_webb)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, GroupSpecError, ValueError) as exc:
        sys.stderr.write(f"glcohom: error: {exc}\n")
        return EXIT_USAGE
    except webb.LedgerError as exc:
        sys.stderr.write(f"glcohom: ledger error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
