"""Hadwiger numbers of the complement of Petersen after adding Petersen edges.

Prints, for each single added edge, the Hadwiger number from the contraction
search and from the connected-set oracle, then counts the pairs of added
edges that reach K_7.
"""

import argparse
import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from dcminor.graph import add_edge, add_edges, complement, petersen  # noqa: E402
from dcminor.graph6 import to_graph6  # noqa: E402
from dcminor.minors import hadwiger_number, has_kt_minor  # noqa: E402
from oracles import max_clique_minor_order  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", action="store_true", help="also try every pair of added edges")
    args = ap.parse_args()
    p = petersen()
    pbar = complement(p)
    edges = list(p.edges())
    for y, z in edges:
        h = add_edge(pbar, y, z)
        print(f"{y}-{z}  {to_graph6(h)}  search={hadwiger_number(h)}  oracle={max_clique_minor_order(h, cap=7)}")
    if args.pairs:
        hits = sum(has_kt_minor(add_edges(pbar, [e, f]), 7) is not None for e, f in combinations(edges, 2))
        print(f"pairs of added edges with a K7 minor: {hits} of {len(edges) * (len(edges) - 1) // 2}")


if __name__ == "__main__":
    main()
