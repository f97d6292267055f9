"""Command-line entry point.

Exit codes: 0 every claim verified, 1 a claim was violated, 2 usage or bad
input, 3 file I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .cockade import CockadeSpec, CockadeSpecError, build_cockade
from .coloring import chromatic_number
from .graph import CapacityError
from .graph6 import Graph6Error, from_graph6, to_graph6
from .minors import hadwiger_number, has_kt_minor, has_kt_plus_k1_minor
from .verify import (
    CounterexampleFound,
    LongRunRequired,
    PropertyPreconditionError,
    SuiteReport,
    check_pair_augmentation,
    check_set_augmentation,
    suite_double_critical_search,
    suite_extremal_sweep,
    suite_k6_free_deletions,
    suite_kt_plus_k1,
    suite_petersen_complement,
)

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

SUITES = ("petersen-complement", "k6-free-deletions", "kt-plus-k1", "extremal", "double-critical")


@dataclass(frozen=True)
class RunOptions:
    t: int | None = None  # None: t = 1..4 (and 5 when long)
    n_max: int = 8
    long: bool = False
    threshold_offset: int = 0


class UsageError(ValueError):
    pass


def _suite_reports(name: str, opts: RunOptions) -> list[SuiteReport]:
    if name == "petersen-complement":
        return [suite_petersen_complement()]
    if name == "k6-free-deletions":
        return [suite_k6_free_deletions()]
    if name == "kt-plus-k1":
        ts = [opts.t] if opts.t is not None else list(range(1, 6 if opts.long else 5))
        return [suite_kt_plus_k1(t, long=opts.long) for t in ts]
    if name == "extremal":
        return [suite_extremal_sweep(opts.n_max, threshold_offset=opts.threshold_offset, long=opts.long)]
    if name == "double-critical":
        return [suite_double_critical_search(opts.n_max, long=opts.long)]
    raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")


def _emit(path: str | None, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if path is None:
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


def _print_report(rep: SuiteReport, out) -> None:
    for it in rep.items:
        print(f"[{it.verdict}] {rep.suite} {it.id}: {it.claim}", file=out)
        if it.verdict != "verified":
            cx = it.witness.get("counterexample")
            if cx:
                print(f"    counterexample graph6: {cx}", file=out)
    tot = rep.totals()
    print(f"{rep.suite}: {tot['verified']}/{tot['items']} verified in {rep.elapsed_ms} ms", file=out)


def run(report_path: str | None, selectors: Sequence[str], opts: RunOptions = RunOptions(), out=None) -> int:
    """Run the selected suites, write the JSON report and return the exit code."""
    out = out or sys.stdout
    names: list[str] = []
    for sel in selectors:
        if sel == "all":
            names.extend(SUITES)
        elif sel in SUITES:
            names.append(sel)
        else:
            print(f"unknown suite {sel!r}; choose from {', '.join(SUITES)} or all", file=sys.stderr)
            return EXIT_USAGE
    if report_path is not None:
        try:
            open(report_path, "a", encoding="utf-8").close()
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
    reports: list[SuiteReport] = []
    code = EXIT_OK
    for name in names:
        try:
            batch = _suite_reports(name, opts)
        except CounterexampleFound as exc:
            print(f"ABORT: {exc}", file=out)
            batch = [exc.report]
        except (LongRunRequired, ValueError) as exc:
            print(f"{name}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        for rep in batch:
            _print_report(rep, out)
            if not rep.ok:
                code = EXIT_VIOLATED
        reports.extend(batch)
    payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
    try:
        _emit(report_path, payload)
    except OSError as exc:
        print(f"cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dcminor", description="Clique minors, colourings and separators of small graphs.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--report", metavar="PATH", help="write the JSON result here")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", metavar="PATH", default=argparse.SUPPRESS, help="write the JSON result here")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=SUITES[:-1] + ("all",))
    v.add_argument("--t", type=int, help="clique order for kt-plus-k1 (default 1..4)")
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--long", action="store_true", help="unlock t = 5 and larger enumerations")
    v.add_argument("--self-test", action="store_true", help="lower the edge threshold by one; violations expected")

    s = sub.add_parser("search", parents=[common], help="exhaustive searches")
    s.add_argument("target", choices=("double-critical",))
    s.add_argument("--n-max", type=int, default=8)
    s.add_argument("--long", action="store_true")

    c = sub.add_parser("check", help="augmentation predicates on one graph")
    csub = c.add_subparsers(dest="predicate", required=True)
    pa = csub.add_parser("pair-augmentation", parents=[common])
    pa.add_argument("graph6")
    sa = csub.add_parser("set-augmentation", parents=[common])
    sa.add_argument("graph6")
    sa.add_argument("--A", dest="a", type=_vertex_list, required=True)
    sa.add_argument("--B", dest="b", type=_vertex_list, required=True)

    k = sub.add_parser("cockade", help="cockade tools")
    ksub = k.add_subparsers(dest="action", required=True)
    kb = ksub.add_parser("build", parents=[common])
    kb.add_argument("spec")

    m = sub.add_parser("minor", parents=[common], help="clique minor search")
    m.add_argument("graph6")
    group = m.add_mutually_exclusive_group(required=True)
    group.add_argument("--kt", type=int)
    group.add_argument("--hadwiger", action="store_true")
    m.add_argument("--plus-k1", action="store_true", help="ask for K_t plus an isolated vertex")

    ch = sub.add_parser("chromatic", parents=[common], help="chromatic number with a witness colouring")
    ch.add_argument("graph6")
    return ap


def _query(args, payload: dict) -> int:
    print(json.dumps(payload, indent=2))
    _emit(args.report, payload)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "verify":
            opts = RunOptions(t=args.t, n_max=args.n_max, long=args.long,
                              threshold_offset=-1 if args.self_test else 0)
            return run(args.report, [args.suite], opts)
        if args.command == "search":
            return run(args.report, [args.target], RunOptions(n_max=args.n_max, long=args.long))
        if args.command == "check":
            g = from_graph6(args.graph6)
            if args.predicate == "pair-augmentation":
                res = check_pair_augmentation(g)
                payload = res.to_json()
                print(json.dumps(payload, indent=2))
                _emit(args.report, payload)
                return EXIT_OK if res.holds or res.moot else EXIT_VIOLATED
            res = check_set_augmentation(g, args.a, args.b)
            payload = res.to_json()
            print(json.dumps(payload, indent=2))
            _emit(args.report, payload)
            return EXIT_OK if res.tag else EXIT_VIOLATED
        if args.command == "cockade":
            g = build_cockade(CockadeSpec.load(args.spec))
            return _query(args, {"graph6": to_graph6(g), "n": g.n, "edges": g.edge_count})
        if args.command == "minor":
            g = from_graph6(args.graph6)
            if args.hadwiger:
                return _query(args, {"graph6": args.graph6, "hadwiger_number": hadwiger_number(g)})
            if args.plus_k1:
                found = has_kt_plus_k1_minor(g, args.kt)
                body = None if found is None else {"isolated_vertex": found.vertex,
                                                   "certificate": found.certificate.to_json()}
                return _query(args, {"graph6": args.graph6, "t": args.kt, "plus_k1": True, "minor": body})
            cert = has_kt_minor(g, args.kt)
            return _query(args, {"graph6": args.graph6, "t": args.kt,
                                 "minor": None if cert is None else cert.to_json()})
        if args.command == "chromatic":
            g = from_graph6(args.graph6)
            res = chromatic_number(g)
            return _query(args, {"graph6": args.graph6, "chromatic_number": res.value,
                                 "coloring": res.coloring.as_list(g.n)})
    except (Graph6Error, CapacityError, PropertyPreconditionError, CockadeSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_USAGE  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
