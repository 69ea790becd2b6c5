"""Command-line driver: traces, character tables, verification suite.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
input error.  Reports are deterministic for a fixed seed; pass --no-timing
to zero the elapsed_ms fields and get byte-identical reruns.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .report import all_passed, render_report
from .snchars import SN_TABLE_LIMIT, character_table_sn, mn_trace_sn
from .so5 import OrthogonalGeometry
from .symbols import BiSymbol, SignedCycleType
from .verifications import (
    LEMMA_M_LIMIT,
    PROP_BC_M_LIMIT,
    PROP_D_M_LIMIT,
    check_lemma26,
    check_lemma27,
    check_lemma29,
    check_lemma210,
    check_lemma217,
    check_prop211,
    check_prop212,
)
from .wnchars import WN_TABLE_LIMIT, character_table_wn, mn_trace_wn

USAGE_ERROR = 2
CHECK_FAILED = 1


def parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from exc


def serialize_class(cls: SignedCycleType) -> str:
    return "pos:%s;neg:%s" % (
        ".".join(str(k) for k in cls.pos),
        ".".join(str(k) for k in cls.neg),
    )


def serialize_symbol(sym) -> str:
    if isinstance(sym, BiSymbol):
        return "%s;%s" % (
            ",".join(str(x) for x in sym.top),
            ",".join(str(x) for x in sym.bottom),
        )
    return ",".join(str(x) for x in sym)


def serialize_sn_class(cls) -> str:
    return ".".join(str(k) for k in cls)


def _cmd_trace(args) -> int:
    if args.group == "sn":
        value = mn_trace_sn(parse_int_list(args.beta), parse_int_list(args.cycles))
    else:
        sym = BiSymbol(parse_int_list(args.top), parse_int_list(args.bottom))
        cls = SignedCycleType(parse_int_list(args.pos), parse_int_list(args.neg))
        value = mn_trace_wn(sym, cls)
    print(value)
    return 0


def _render_table_text(table) -> str:
    if table.group.startswith("S"):
        col_names = [serialize_sn_class(c) for c in table.col_labels]
    else:
        col_names = [serialize_class(c) for c in table.col_labels]
    row_names = [serialize_symbol(r) for r in table.row_labels]
    width = max(
        [len(n) for n in col_names + row_names]
        + [len(str(v)) for row in table.entries for v in row]
        + [len(str(z)) for z in table.centralizers]
    )
    out = [f"character table {table.group}"]
    head = " " * (width + 2) + "  ".join(n.rjust(width) for n in col_names)
    out.append(head)
    out.append(
        "centralizer".ljust(width + 2)
        + "  ".join(str(z).rjust(width) for z in table.centralizers)
    )
    for name, row in zip(row_names, table.entries):
        out.append(
            name.ljust(width + 2) + "  ".join(str(v).rjust(width) for v in row)
        )
    return "\n".join(out) + "\n"


def _render_table_csv(table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if table.group.startswith("S"):
        col_names = [serialize_sn_class(c) for c in table.col_labels]
    else:
        col_names = [serialize_class(c) for c in table.col_labels]
    writer.writerow(["symbol"] + col_names)
    writer.writerow(["centralizer"] + [str(z) for z in table.centralizers])
    for label, row in zip(table.row_labels, table.entries):
        writer.writerow([serialize_symbol(label)] + [str(v) for v in row])
    orthogonal = "pass" if table.is_orthogonal() else "FAIL"
    buf.write(f"# weighted row orthogonality: {orthogonal}\n")
    return buf.getvalue()


def _cmd_table(args) -> int:
    if args.group == "sn":
        if args.n > SN_TABLE_LIMIT:
            raise ValueError(f"n={args.n} exceeds the S_n table bound {SN_TABLE_LIMIT}")
        table = character_table_sn(args.n)
    else:
        if args.n > WN_TABLE_LIMIT:
            raise ValueError(f"n={args.n} exceeds the W_n table bound {WN_TABLE_LIMIT}")
        table = character_table_wn(args.n)
    text = _render_table_csv(table) if args.format == "csv" else _render_table_text(table)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _verify_jobs(args):
    """(claim, callable) pairs selected by the verify arguments."""
    seed = args.seed
    jobs = []

    def lemma26_jobs(ms):
        return [("lemma26", lambda m=m: check_lemma26(m, seed)) for m in ms]

    def lemma27_jobs(ms):
        return [("lemma27", lambda m=m: check_lemma27(m, seed)) for m in ms]

    def lemma29_jobs(ms):
        return [("lemma29", lambda m=m: check_lemma29(m, seed)) for m in ms]

    def lemma210_jobs(ms):
        return [("lemma210", lambda m=m: check_lemma210(m, seed)) for m in ms]

    def prop211_jobs(ms):
        return [("prop211", lambda m=m: check_prop211(m, seed)) for m in ms]

    def prop212_jobs(ms):
        return [("prop212", lambda m=m: check_prop212(m, seed)) for m in ms]

    def so5_job():
        def run():
            geometry = OrthogonalGeometry(q=args.q)
            if args.q == 3:
                return geometry.verify(seed)
            return geometry.verify_sampled(args.samples, seed)

        return [("so5", run)]

    claim = args.claim
    m_given = args.m is not None
    if claim in ("lemma26", "all"):
        jobs += lemma26_jobs([args.m] if m_given and claim != "all" else range(6))
    if claim in ("lemma27", "all"):
        jobs += lemma27_jobs([args.m] if m_given and claim != "all" else range(6))
    if claim in ("lemma29", "all"):
        jobs += lemma29_jobs([args.m] if m_given and claim != "all" else range(1, 6))
    if claim in ("lemma210", "all"):
        jobs += lemma210_jobs([args.m] if m_given and claim != "all" else (1, 2))
    if claim in ("prop211", "all"):
        jobs += prop211_jobs([args.m] if m_given and claim != "all" else range(1, 6))
    if claim in ("prop212", "all"):
        jobs += prop212_jobs([args.m] if m_given and claim != "all" else (2, 4))
    if claim in ("lemma217", "all"):
        jobs += [("lemma217", lambda: check_lemma217(seed))]
    if claim in ("so5", "all"):
        jobs += so5_job()
    return jobs


def _cmd_verify(args) -> int:
    jobs = _verify_jobs(args)
    max_jobs = int(os.environ.get("WEYLCHARS_MAX_JOBS", "8"))
    workers = max(1, min(args.jobs, max_jobs))
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda job: job[1](), jobs))
    else:
        records = [fn() for _, fn in jobs]
    text = render_report(records, include_timing=not args.no_timing)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all_passed(records) else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylchars",
        description="exact traces, character tables and verification checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    trace = sub.add_parser("trace", help="evaluate one trace")
    trace_sub = trace.add_subparsers(dest="group", required=True)
    trace_sn = trace_sub.add_parser("sn", help="symmetric group")
    trace_sn.add_argument("--beta", required=True, help="symbol entries, e.g. 1,3")
    trace_sn.add_argument("--cycles", required=True, help="cycle type, e.g. 1,1,1")
    trace_wn = trace_sub.add_parser("wn", help="signed permutation group")
    trace_wn.add_argument("--top", required=True, help="top row, e.g. 0,1")
    trace_wn.add_argument("--bottom", required=True, help="bottom row, e.g. 2")
    trace_wn.add_argument("--pos", default="", help="positive cycle lengths")
    trace_wn.add_argument("--neg", default="", help="negative cycle lengths")

    verify = sub.add_parser("verify", help="run verification checks")
    verify.add_argument(
        "claim",
        choices=[
            "lemma26",
            "lemma27",
            "lemma29",
            "lemma210",
            "prop211",
            "prop212",
            "lemma217",
            "so5",
            "all",
        ],
    )
    verify.add_argument("--m", type=int, default=None, help="single parameter value")
    verify.add_argument("--q", type=int, default=3, help="field size for so5")
    verify.add_argument("--samples", type=int, default=200, help="sample count, q > 3")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1, help="parallel checks")
    verify.add_argument("--no-timing", action="store_true", help="zero elapsed_ms")
    verify.add_argument("--output", default=None, help="write the report to a file")

    table = sub.add_parser("table", help="print a character table")
    table_sub = table.add_subparsers(dest="group", required=True)
    for name, bound in (("sn", SN_TABLE_LIMIT), ("wn", WN_TABLE_LIMIT)):
        p = table_sub.add_parser(name)
        p.add_argument("--n", type=int, required=True, help=f"rank, at most {bound}")
        p.add_argument("--format", choices=["text", "csv"], default="text")
        p.add_argument("--output", default=None)
    return parser


def _validate_verify(args) -> None:
    if args.m is not None:
        if args.claim == "prop211" and not 1 <= args.m <= PROP_BC_M_LIMIT:
            raise ValueError(f"prop211 needs 1 <= m <= {PROP_BC_M_LIMIT}")
        if args.claim == "prop212" and (
            args.m % 2 or not 2 <= args.m <= PROP_D_M_LIMIT
        ):
            raise ValueError(f"prop212 needs even m within 2..{PROP_D_M_LIMIT}")
        if args.claim.startswith("lemma2") and args.claim != "lemma217":
            limit = LEMMA_M_LIMIT // 2 if args.claim == "lemma210" else LEMMA_M_LIMIT
            low = 0 if args.claim in ("lemma26", "lemma27") else 1
            if not low <= args.m <= limit:
                raise ValueError(f"{args.claim} needs {low} <= m <= {limit}")
    if args.claim == "so5" and args.q not in (3, 5):
        raise ValueError("so5 verification supports q=3 (full) or q=5 (sampled)")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "trace":
            return _cmd_trace(args)
        if args.command == "table":
            return _cmd_table(args)
        _validate_verify(args)
        return _cmd_verify(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
