"""Tally which repair case the separator merge uses on random instances."""

import argparse
import random
from collections import Counter
from itertools import combinations

from dcminor.coloring import Coloring, is_proper, max_clique
from dcminor.graph import Graph, complement
from dcminor.merge import MergePreconditionError, merge_colorings_across_separator
from dcminor.structure import shape6_witness


def random_instance(rng: random.Random, k: int):
    while True:
        s_edges = [e for e in combinations(range(6), 2) if rng.random() < 0.55]
        gs = Graph.from_edges(6, s_edges)
        if max_clique(complement(gs)).bit_count() <= 4 and shape6_witness(gs, range(6))[0] == "neither":
            break
    n1, n2 = rng.randint(1, 4), rng.randint(1, 4)
    side1, side2 = list(range(6, 6 + n1)), list(range(6 + n1, 6 + n1 + n2))
    edges = list(s_edges)
    for block in (side1, side2):
        for v in block:
            edges += [(u, v) for u in list(range(6)) + block if u < v and rng.random() < 0.5]
    g = Graph.from_edges(6 + n1 + n2, edges)
    cols = []
    for block in (side1, side2):
        order = list(range(6)) + block
        rng.shuffle(order)
        assign: dict[int, int] = {}
        for v in order:
            free = [c for c in range(k) if all(assign.get(u) != c for u in g.neighbors(v))]
            if not free:
                return None
            assign[v] = rng.choice(free)
        cols.append(Coloring(assign))
    return g, side1, side2, cols[0], cols[1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--colours", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    tally: Counter = Counter()
    for _ in range(args.trials):
        inst = random_instance(rng, args.colours)
        if inst is None:
            tally["no colouring drawn"] += 1
            continue
        g, s1, s2, c1, c2 = inst
        try:
            out = merge_colorings_across_separator(g, range(6), s1, s2, c1, c2)
        except MergePreconditionError:
            tally["precondition"] += 1
            continue
        if out.success:
            assert is_proper(g, out.coloring)
        tally[out.case] += 1
    for case, count in tally.most_common():
        print(f"{count:6d}  {case}")


if __name__ == "__main__":
    main()
