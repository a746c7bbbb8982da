"""Command line interface.

Subcommands: classify (one degree), table (classification table up to a
bound), golden-check (recompute the published table and diff), scan
(range summary), veronese (dimension chases).  Formats: text (with a
version banner), json, csv.  Identical invocations print byte-identical
output; nothing here is randomized or timestamped.

Exit codes: 0 success (classify: representable), 2 classify found no
embedding, 1 anomaly or mismatch, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from . import __version__
from .golden import golden_check
from .lattice import Vec
from .polarizations import (
    IndexAnomaly,
    ModelVerdict,
    PolarizationReport,
    classify,
    classify_range,
    model_verdict,
)
from .representability import is_prime, two_squares
from .veronese import doubled_model_dims, quadrics_on_veronese2, scaled_quartic_dims

CSV_HEADER = "n,l2,q,a,b,c,lambda,mu,delta,index"


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 64."""

    def error(self, message: str):  # noqa: D102
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


def _banner() -> str:
    return f"k3m20 {__version__}"


# ---------------------------------------------------------------------------
# renderers


def report_to_dict(report: PolarizationReport) -> dict:
    return {
        "n": report.n,
        "l_squared": report.l_squared,
        "representable": report.representable,
        "orbits": [
            {
                "canonical": list(o.canonical),
                "orbit_size": o.orbit_size,
                "divisibility": o.divisibility,
                "tx": {"a": o.tx.a, "b": o.tx.b, "c": o.tx.c},
                "discriminant": o.discriminant,
                "index": o.index,
            }
            for o in report.orbits
        ],
        "quadric_count": report.quadric_count,
        "ambient_dim": report.ambient_dim,
        "feasibility": {
            "div1": any(f.div1_solvable for f in report.feasibility),
            "div2": any(f.div2_solvable for f in report.feasibility),
            "eq90": any(f.quadrics_eq_solvable for f in report.feasibility),
        },
    }


def _class_rows(report: PolarizationReport) -> list[tuple[int, ...]]:
    """One table row per transcendental class: the class data plus the
    lexicographically smallest orbit representative carrying it."""
    rows = []
    for f in report.tx_classes:
        members = [o for o in report.orbits if o.tx == f]
        vec = min(o.canonical for o in members)
        rows.append(
            (
                report.n,
                report.l_squared,
                report.quadric_count,
                f.a,
                f.b,
                f.c,
                vec[0],
                vec[1],
                vec[2],
                members[0].index,
            )
        )
    return rows


def emit_table_csv(rows: list[tuple[int, ...]]) -> str:
    out = [CSV_HEADER]
    out.extend(",".join(str(x) for x in row) for row in rows)
    return "\n".join(out) + "\n"


def parse_table_csv(text: str) -> list[tuple[int, ...]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != CSV_HEADER.split(","):
        raise ValueError("bad csv header")
    return [tuple(int(x) for x in row) for row in reader if row]


def report_text(report: PolarizationReport, verdict: ModelVerdict | None) -> str:
    lines = [_banner()]
    lines.append(f"n = {report.n}  (L^2 = {report.l_squared})")
    if not report.representable:
        lines.append("no embedding (n = 4^i (16j + 6) family)")
        return "\n".join(lines) + "\n"
    lines.append(f"orbits: {len(report.orbits)}")
    for o in report.orbits:
        lines.append(
            f"  canonical {o.canonical}  size {o.orbit_size}  div {o.divisibility}"
            f"  tx (a,b,c) = {o.tx.triple()}  d = {o.discriminant}  I = {o.index}"
        )
    classes = ", ".join(str(f.triple()) for f in report.tx_classes)
    lines.append(f"transcendental classes: {classes}")
    lines.append(f"quadrics: {report.quadric_count}" + ("  (degree-4 model: none)" if report.n == 1 else ""))
    lines.append(f"ambient: P^{report.ambient_dim}")
    if verdict is not None:
        for c in verdict.classes:
            lines.append(
                f"  class {c.tx.triple()}: base-point {c.base_point_status};"
                f" hyperelliptic {c.hyperelliptic_status}; quadrics {c.quadrics_status}"
            )
        lines.append(f"verdict: {verdict.label}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(args) -> int:
    try:
        report = classify(args.n)
        verdict = model_verdict(report) if report.representable else None
    except IndexAnomaly as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2))
    elif args.format == "csv":
        print(emit_table_csv(_class_rows(report)), end="")
    else:
        print(report_text(report, verdict), end="")
    if not report.representable:
        return 2
    if verdict is not None and not verdict.consistent:
        return 1
    return 0


def _cmd_table(args) -> int:
    try:
        reports = classify_range(args.max_n, workers=args.parallel)
    except IndexAnomaly as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rows = [row for rep in reports if rep.representable for row in _class_rows(rep)]
    if args.format == "json":
        keys = CSV_HEADER.split(",")
        print(json.dumps([dict(zip(keys, row)) for row in rows], indent=2))
    elif args.format == "csv":
        print(emit_table_csv(rows), end="")
    else:
        print(_banner())
        print(CSV_HEADER.replace(",", "\t"))
        for row in rows:
            print("\t".join(str(x) for x in row))
    return 0


def _cmd_golden_check(args) -> int:
    result = golden_check()
    for line in result.lines:
        print(line)
    if result.ok:
        print(f"golden check: OK ({len(result.lines)} rows)")
        return 0
    for diff in result.diffs:
        print(f"MISMATCH {diff}", file=sys.stderr)
    print(f"golden check: {len(result.diffs)} mismatch(es)")
    return 1


def _prime_witnesses(max_n: int) -> list[tuple[int, Vec]]:
    out = []
    for p in range(5, max_n + 1, 4):
        if is_prime(p):
            lam, mu = two_squares(p)
            out.append((p, (lam, mu, 0)))
    return out


def _cmd_scan(args) -> int:
    try:
        reports = classify_range(args.max_n, workers=args.parallel)
    except IndexAnomaly as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    non_rep = [r.n for r in reports if not r.representable]
    classes = sorted({f.triple() for r in reports for f in r.tx_classes})
    witnesses = _prime_witnesses(args.max_n)
    inconsistent = [
        r.n for r in reports if r.representable and not model_verdict(r).consistent
    ]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "max_n": args.max_n,
                    "representable_count": len(reports) - len(non_rep),
                    "non_representable": non_rep,
                    "tx_class_count": len(classes),
                    "tx_classes": [list(c) for c in classes],
                    "anomalies": len(inconsistent),
                    "prime_witnesses": [[p, list(v)] for p, v in witnesses],
                },
                indent=2,
            )
        )
    else:
        print(_banner())
        print(f"scan 1..{args.max_n}")
        print(f"representable: {len(reports) - len(non_rep)}/{args.max_n}")
        print(f"no embedding: {', '.join(str(n) for n in non_rep) or '-'}")
        print(f"distinct transcendental classes: {len(classes)}")
        print(f"anomalies: {len(inconsistent)}")
        first = f" (first: {witnesses[0][0]} -> {witnesses[0][1]})" if witnesses else ""
        print(f"prime witnesses (p = 1 mod 4): {len(witnesses)}{first}")
    return 1 if inconsistent else 0


def _cmd_veronese(args) -> int:
    if (args.n is None) == (args.r is None):
        print("error: need exactly one of --n / --r", file=sys.stderr)
        return 64
    if args.n is not None:
        before, target, cut, after = doubled_model_dims(args.n)
        payload = {
            "n": args.n,
            "ambient_dim": before,
            "veronese_dim": target,
            "quadrics_cut": cut,
            "doubled_ambient_dim": after,
            "quadrics_on_veronese2": quadrics_on_veronese2(before),
        }
        if args.format == "json":
            print(json.dumps(payload, indent=2))
        else:
            print(_banner())
            print(
                f"P^{before} -(v2)-> P^{target}, cut {cut} quadrics"
                f" -> doubled model in P^{after}"
            )
            print(f"quadrics through v2(P^{before}): {payload['quadrics_on_veronese2']}")
    else:
        target, cut, after = scaled_quartic_dims(args.r)
        payload = {
            "r": args.r,
            "veronese_dim": target,
            "quartics_cut": cut,
            "scaled_ambient_dim": after,
        }
        if args.format == "json":
            print(json.dumps(payload, indent=2))
        else:
            print(_banner())
            print(
                f"P^3 -(v{args.r})-> P^{target}, cut {cut} quartics"
                f" -> scaled model in P^{after}"
            )
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="k3m20", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=_banner())
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify one degree L^2 = 4n")
    p_classify.add_argument("--n", type=int, required=True)
    p_classify.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p_table = sub.add_parser("table", help="classification table for n = 1..max-n")
    p_table.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_table.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_table.add_argument("--parallel", type=int, default=1, metavar="K")

    sub.add_parser("golden-check", help="recompute the published table and diff")

    p_scan = sub.add_parser("scan", help="summary statistics for n = 1..max-n")
    p_scan.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_scan.add_argument("--format", choices=("text", "json"), default="text")
    p_scan.add_argument("--parallel", type=int, default=1, metavar="K")

    p_ver = sub.add_parser("veronese", help="dimension chases for re-embeddings")
    p_ver.add_argument("--n", type=int)
    p_ver.add_argument("--r", type=int)
    p_ver.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classify":
            if args.n < 1:
                parser.error("--n must be a positive integer")
            return _cmd_classify(args)
        if args.command == "table":
            if args.max_n < 1:
                parser.error("--max-n must be a positive integer")
            if args.parallel < 1:
                parser.error("--parallel must be a positive integer")
            return _cmd_table(args)
        if args.command == "golden-check":
            return _cmd_golden_check(args)
        if args.command == "scan":
            if args.max_n < 1:
                parser.error("--max-n must be a positive integer")
            if args.parallel < 1:
                parser.error("--parallel must be a positive integer")
            return _cmd_scan(args)
        if args.command == "veronese":
            if args.n is not None and args.n < 1:
                parser.error("--n must be a positive integer")
            if args.r is not None and args.r < 3:
                parser.error("--r must be at least 3")
            return _cmd_veronese(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")  # pragma: no cover


def entry() -> None:  # console script
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
