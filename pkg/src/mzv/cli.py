"""Command-line front end.

Subcommands::

    table           rank table of the seven relation families per weight
    rank            rank of one family (or union) at one weight
    member          span membership of an element in a family
    verify-theorem  truncated-series identity check, part i or ii
    conjecture      membership sweep of the (m, n) class sums
    numeric         floating evaluation / kernel residual of an element

Exit status: 0 when everything asked for verified, 1 when any claim was
falsified (or, under --strict, any cell was skipped over budget), 2 on
usage errors.  Elements accept a word ("xxyy"), a composition
("(2,1,2)"), "(1-tau)(WORD)" or "partial(N)(WORD)".  MZV_THREADS sets
the default worker count for the table command.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .numeric import residual_with_bound
from .operators import duality, partial
from .poly import Poly
from .relations import FamilySpec
from .verify import (ROW_LABELS, VerdictReport, build_table, conjecture_scan,
                     family_matrix, verify_theorem_i, verify_theorem_ii)
from .words import parse_word


class UsageError(Exception):
    pass


def parse_element(text: str) -> Poly:
    """Parse the element micro-syntax into a polynomial."""
    text = text.strip()
    m = re.fullmatch(r"\(1\s*-\s*tau\)\s*\((.+)\)", text)
    if m:
        return duality(Poly.from_word(parse_word(m.group(1))))
    m = re.fullmatch(r"partial\s*\(\s*(\d+)\s*\)\s*\((.+)\)", text)
    if m:
        return partial(int(m.group(1)), Poly.from_word(parse_word(m.group(2))))
    try:
        return Poly.from_word(parse_word(text))
    except ValueError as exc:
        raise UsageError(f"cannot parse element {text!r}: {exc}") from exc


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _matrix_for(family: str, weight: int):
    spec = FamilySpec.parse(family)
    if len(spec.kinds) == 1:
        return family_matrix(spec.kinds[0], weight)
    from .linalg import RelationMatrix
    return RelationMatrix.from_polys(weight, spec.generate(weight))


def cmd_table(args) -> int:
    report = build_table(args.max_weight, args.cell_budget, args.threads)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.out)
    elif args.format == "csv":
        _emit(report.to_csv(), args.out)
    else:
        _emit(report.to_markdown(), args.out)
    skipped = report.skipped_cells()
    if skipped:
        for row, wt in skipped:
            print(f"skipped: row {row} ({ROW_LABELS[row]}) at weight {wt}",
                  file=sys.stderr)
        if args.strict:
            return 1
    return 0


def cmd_rank(args) -> int:
    mat = _matrix_for(args.family, args.weight)
    print(mat.rank())
    return 0


def cmd_member(args) -> int:
    elem = parse_element(args.element)
    if not elem.is_zero() and not elem.is_homogeneous(args.weight):
        raise UsageError(
            f"element is not homogeneous of weight {args.weight}")
    mat = _matrix_for(args.family, args.weight)
    verdict = elem.is_zero() or mat.in_span(elem)
    report = VerdictReport("membership",
                           {"weight": args.weight}, None, verdict,
                           None if verdict else elem)
    if args.format == "json":
        payload = report.to_json()
        payload["params"]["family"] = args.family
        payload["params"]["element"] = args.element
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit("true" if verdict else "false", args.out)
    return 0 if verdict else 1


def cmd_verify_theorem(args) -> int:
    if args.part == "i":
        report = verify_theorem_i(args.param, args.cutoff)
    else:
        report = verify_theorem_ii(args.param, args.cutoff)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.out)
    else:
        status = "verified" if report.verdict else "FALSIFIED"
        lines = [f"theorem ({args.part}) param={args.param} "
                 f"cutoff={args.cutoff}: {status} "
                 f"[{report.elapsed_ms:.0f} ms]"]
        if not report.verdict:
            lines.append(f"residual: {report.residual}")
        _emit("\n".join(lines), args.out)
    return 0 if report.verdict else 1


def cmd_conjecture(args) -> int:
    reports, skipped = conjecture_scan(args.max_weight, args.cell_budget)
    ok = all(r.verdict for r in reports)
    if args.format == "json":
        payload = {
            "max_weight": args.max_weight,
            "cases": [r.to_json() for r in reports],
            "skipped_weights": skipped,
            "all_verified": ok,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"m={r.params['m']} n={r.params['n']} "
                 f"weight={r.params['weight']}: "
                 f"{'in span' if r.verdict else 'NOT IN SPAN'}"
                 for r in reports]
        lines.append(f"{len(reports)} cases, "
                     f"{'all verified' if ok else 'FALSIFIED'}"
                     + (f", skipped weights {skipped}" if skipped else ""))
        _emit("\n".join(lines), args.out)
    for wt in skipped:
        print(f"skipped: weight {wt} over budget", file=sys.stderr)
    if not ok:
        return 1
    if skipped and args.strict:
        return 1
    return 0


def cmd_numeric(args) -> int:
    elem = parse_element(args.element)
    value, bound = residual_with_bound(elem, args.terms)
    single = len(elem.terms) == 1 and set(elem.terms.values()) == {1}
    payload = {
        "element": args.element,
        "terms_used": args.terms,
        "value": value,
        "tail_bound": bound,
    }
    verdict = True
    if not single:
        # a relation: the value must be numerically indistinguishable from 0
        verdict = abs(value) <= bound
        payload["claim"] = "kernel-residual"
        payload["verdict"] = verdict
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit(f"value={value!r} terms={args.terms} tail_bound={bound:.3e}"
              + ("" if single else f" kernel={'yes' if verdict else 'NO'}"),
              args.out)
    return 0 if verdict else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzv",
        description="Exact relation engine for multiple zeta values.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="md"):
        p.add_argument("--format", choices=("json", "csv", "md"),
                       default=fmt_default)
        p.add_argument("--out", metavar="PATH",
                       help="write the report to a file instead of stdout")

    p = sub.add_parser("table", help="rank table of relation families")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--cell-budget", type=float, default=60.0,
                   metavar="SECONDS",
                   help="per-cell time budget (0 disables, default 60)")
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("MZV_THREADS", "1")))
    p.add_argument("--strict", action="store_true",
                   help="exit nonzero if any cell was skipped")
    common(p)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("rank", help="rank of one family at one weight")
    p.add_argument("--family", required=True,
                   help="duality | derivation | duality-ht | duality-k1 "
                        "| union:KIND,KIND")
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(fn=cmd_rank)

    p = sub.add_parser("member", help="span membership of an element")
    p.add_argument("--element", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--weight", type=int, required=True)
    common(p, fmt_default="md")
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("verify-theorem", help="truncated identity check")
    p.add_argument("--part", choices=("i", "ii"), required=True)
    p.add_argument("--param", type=int, required=True,
                   help="m for part i, n for part ii")
    p.add_argument("--cutoff", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_verify_theorem)

    p = sub.add_parser("conjecture", help="class-sum membership sweep")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--cell-budget", type=float, default=60.0,
                   metavar="SECONDS")
    p.add_argument("--strict", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_conjecture)

    p = sub.add_parser("numeric", help="floating evaluation of an element")
    p.add_argument("--element", required=True)
    p.add_argument("--terms", type=int, default=10**6,
                   help="leading-index truncation of the nested sum")
    common(p)
    p.set_defaults(fn=cmd_numeric)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cell_budget", None) == 0:
        args.cell_budget = None
    try:
        return args.fn(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
