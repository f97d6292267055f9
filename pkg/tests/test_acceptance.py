"""Acceptance run: one test and one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from itertools import combinations
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from dcminor.canon import is_isomorphic  # noqa: E402
from dcminor.cockade import build_cockade, cockade_family, is_cockade  # noqa: E402
from dcminor.coloring import Coloring, chromatic_number, is_proper  # noqa: E402
from dcminor.enumerate import enumerate_graphs  # noqa: E402
from dcminor.graph import Graph, complete, complete_multipartite, cycle  # noqa: E402
from dcminor.graph6 import from_graph6  # noqa: E402
from dcminor.merge import merge_colorings_across_separator  # noqa: E402
from dcminor.minors import MinorCertificate, has_kt_minor, verify_certificate  # noqa: E402
from dcminor.structure import indep_clique_partition, minimal_separators, shape6_witness  # noqa: E402
from dcminor.verify import (  # noqa: E402
    CounterexampleFound, suite_double_critical_search, suite_extremal_sweep, suite_k6_free_deletions,
    suite_kt_plus_k1, suite_petersen_complement,
)

import oracles  # noqa: E402

RESULTS: dict[int, str] = {}


def _record(number: int, title: str, ok: bool, detail: str, started: float) -> None:
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail}; {time.perf_counter() - started:.1f} s)"
    RESULTS[number] = line
    print(line)
    assert ok, line


def test_criterion_1_petersen_complement():
    t0 = time.perf_counter()
    rep = suite_petersen_complement()
    plus_edge = rep.items[:15]
    found = [it for it in plus_edge if it.verdict == "verified"
             and verify_certificate(from_graph6(it.witness["graph6"]),
                                    MinorCertificate.from_json(it.witness["certificate"]))]
    missing = [it.witness["counterexample"] for it in plus_edge if it.verdict != "verified"]
    base_ok = all(it.verdict == "verified" for it in rep.items[15:])
    ok = len(found) == 15 and base_ok and time.perf_counter() - t0 < 30
    detail = f"K7 certificates for {len(found)}/15 augmented graphs; no K7 and no K6+K1 in the base: {base_ok}"
    if missing:
        detail += f"; first graph without K7: {missing[0]}"
    _record(1, "complement of Petersen plus any Petersen edge has a K7 minor", ok, detail, t0)


def test_criterion_2_k6_free_deletions():
    t0 = time.perf_counter()
    rep = suite_k6_free_deletions()
    checks = sum(it.witness["deletions_checked"] for it in rep.items)
    ok = rep.ok and len(rep.items) == 3 and checks == 8 + 9 + 10
    _record(2, "K2222, K333, complement of Petersen: min degree 6, no K6 in any G - x", ok,
            f"{checks} vertex deletions checked, {len(rep.violations)} violations", t0)


def test_criterion_3_kt_plus_k1():
    t0 = time.perf_counter()
    reports = [suite_kt_plus_k1(t) for t in (1, 2, 3, 4)] + [suite_kt_plus_k1(5, long=True)]
    graphs = sum(it.witness["graphs"] for r in reports for it in r.items)
    bad = sum(len(r.violations) for r in reports)
    _record(3, "n <= 2t-1 and min degree >= t force a Kt + K1 minor, t = 1..5", bad == 0,
            f"{graphs} graphs, {bad} violations", t0)


def test_criterion_4_extremal_sweep():
    t0 = time.perf_counter()
    n8 = sum(1 for _ in enumerate_graphs(8))
    dedupe = []
    for n in range(6):
        pairs = list(combinations(range(n), 2))
        reps: list[Graph] = []
        for bits in range(1 << len(pairs)):
            g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
            if not any(oracles.isomorphic_by_permutation(g, r) for r in reps):
                reps.append(g)
        dedupe.append(len(reps))
    counted = [sum(1 for _ in enumerate_graphs(n)) for n in range(6)]
    rep = suite_extremal_sweep(8)
    ok = rep.ok and n8 == 12346 and counted == dedupe
    _record(4, "edge threshold (p-2)n - C(p-1,2) + 1 forces K_p, p <= 7, n <= 8", ok,
            f"{n8} classes on 8 vertices, n <= 5 counts {counted} vs dedupe {dedupe}, "
            f"{len(rep.violations)} violations", t0)


def test_criterion_5_cockades():
    t0 = time.perf_counter()
    problems = []
    checked = 0
    for base, k, t, slope, offset in ((complete_multipartite([2] * 5), 5, 8, 6, 20),
                                      (complete_multipartite([1, 2, 2, 2, 2, 2]), 6, 9, 7, 27)):
        for spec in cockade_family(base, k, 2):
            g = build_cockade(spec)
            checked += 1
            if g.edge_count != slope * g.n - offset:
                problems.append(f"edges {g.edge_count} on {g.n} vertices")
            if has_kt_minor(g, t) is not None:
                problems.append(f"K{t} minor in a cockade on {g.n} vertices")
            if not is_cockade(g, base, k):
                problems.append("cockade not recognised")
    k22233 = complete_multipartite([2, 2, 2, 3, 3])
    if k22233.edge_count != 57:
        problems.append(f"K22233 has {k22233.edge_count} edges")
    if has_kt_minor(k22233, 9) is not None:
        problems.append("K22233 has a K9 minor")
    _record(5, "cockades with <= 2 glue steps and K22233: exact edge counts, no K8/K9 minor", not problems,
            f"{checked} cockade classes; " + ("; ".join(problems) if problems else "all exact"), t0)


def test_criterion_6_double_critical():
    t0 = time.perf_counter()
    try:
        rep = suite_double_critical_search(8)
    except CounterexampleFound as exc:
        _record(6, "connected double-critical graphs on <= 8 vertices are K1..K8", False,
                f"non-complete survivor {exc.graph6}", t0)
        return
    survivors = [from_graph6(s["graph6"]) for it in rep.items for s in it.witness["survivors"]]
    ok = survivors == [complete(n) for n in range(1, 9)]
    _record(6, "connected double-critical graphs on <= 8 vertices are K1..K8", ok,
            f"{len(survivors)} survivors", t0)


def test_criterion_7_oracle_equivalence():
    t0 = time.perf_counter()
    mismatches = []
    classes = {n: list(enumerate_graphs(n)) for n in range(8)}
    for n, gs in classes.items():
        for g in gs:
            if chromatic_number(g).value != oracles.chromatic_by_partitions(g):
                mismatches.append(("chromatic", g))
            order = oracles.max_clique_minor_order(g, cap=6)
            for t in range(1, 6):
                if (has_kt_minor(g, t) is not None) != (order >= t):
                    mismatches.append(("minor", g, t))
            if set(minimal_separators(g)) != oracles.separating_subsets(g):
                mismatches.append(("separators", g))
    for g in classes[6]:
        verts = list(range(6))
        split = any(g.is_independent(a) and g.is_clique([v for v in verts if v not in a])
                    for r in range(7) for a in combinations(verts, r))
        if (indep_clique_partition(g, verts) is not None) != split:
            mismatches.append(("split", g))
        k33 = any(g.is_independent(t) and g.is_independent([v for v in verts if v not in t])
                  for t in combinations(verts, 3))
        k222 = any(g.is_independent(p) and g.is_independent(q) and g.is_independent([v for v in verts if v not in p + q])
                   for p in combinations(verts, 2) for q in combinations([v for v in verts if v not in p], 2))
        want = {(True, True): "both", (True, False): "fits-K33", (False, True): "fits-K222",
                (False, False): "neither"}[(k33, k222)]
        if shape6_witness(g, verts)[0] != want:
            mismatches.append(("shape", g))
    _record(7, "chromatic, K_t minor, separators, split and shape tests agree with brute force",
            not mismatches, f"{sum(map(len, classes.values()))} classes, {len(mismatches)} mismatches", t0)


def test_criterion_8_merge():
    t0 = time.perf_counter()
    k4 = list(combinations(range(4), 2))
    g = Graph.from_edges(8, k4 + [(6, 0), (6, 4), (6, 5), (7, 4), (7, 1)])
    c1 = Coloring({0: 0, 1: 1, 2: 2, 3: 3, 4: 1, 5: 2, 6: 3})
    c2 = Coloring({0: 0, 1: 1, 2: 2, 3: 3, 4: 0, 5: 0, 7: 2})
    out = merge_colorings_across_separator(g, range(6), [6], [7], c1, c2)
    merged_ok = (out.success and is_proper(g, out.coloring)
                 and out.coloring.colors_used <= max(c1.colors_used, c2.colors_used) + 1)
    h = Graph.from_edges(8, list(cycle(6).edges()) + [(6, 0), (6, 3), (7, 1), (7, 4)])
    c = Coloring({v: v % 2 for v in range(6)} | {6: 2, 7: 2})
    shape = merge_colorings_across_separator(h, range(6), [6], [7], c, c)
    shape_ok = (shape.shape == "fits-K33" and shape.shape_witness is not None
                and all(h.is_independent(p) and len(p) == 3 for p in shape.shape_witness))
    _record(8, "merge across a K4 + 2K1 separator; C6 separator gives the K33 split", merged_ok and shape_ok,
            f"merge case {out.case}, {out.coloring.colors_used if out.coloring else '-'} colours; "
            f"C6 shape {shape.shape}", t0)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
