"""Brute-force reference implementations, independent of the package search code."""

from __future__ import annotations

from itertools import combinations, permutations, product

import networkx as nx


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def connected_subsets(g):
    """Every non-empty vertex subset inducing a connected subgraph, as frozensets."""
    G = to_nx(g)
    out = []
    for r in range(1, g.n + 1):
        for s in combinations(range(g.n), r):
            if nx.is_connected(G.subgraph(s)):
                out.append(frozenset(s))
    return out


def max_clique_minor_order(g, cap=None):
    """Largest t such that t pairwise disjoint, pairwise touching connected sets exist."""
    G = to_nx(g)
    sets = connected_subsets(g)
    nbr = [set().union(*(set(G[v]) for v in s)) for s in sets]
    compatible = {
        (i, j)
        for i, j in combinations(range(len(sets)), 2)
        if not sets[i] & sets[j] and nbr[i] & sets[j]
    }
    H = nx.Graph()
    H.add_nodes_from(range(len(sets)))
    H.add_edges_from(compatible)
    best = 0
    for clique in nx.find_cliques(H):
        best = max(best, len(clique))
        if cap is not None and best >= cap:
            return best
    return best


def chromatic_by_partitions(g):
    """Fewest blocks over all set partitions of V into independent sets."""
    n = g.n
    if n == 0:
        return 0
    best = n

    def rec(v, blocks):
        nonlocal best
        if len(blocks) >= best:
            return
        if v == n:
            best = len(blocks)
            return
        for b in blocks:
            if not any(g.has_edge(v, u) for u in b):
                b.append(v)
                rec(v + 1, blocks)
                b.pop()
        blocks.append([v])
        rec(v + 1, blocks)
        blocks.pop()

    rec(0, [])
    return best


def separating_subsets(g):
    """Inclusion-minimal separating sets by testing every subset."""
    G = to_nx(g)
    n = g.n

    def separates(s):
        rest = [v for v in range(n) if v not in s]
        return len(rest) >= 2 and not nx.is_connected(G.subgraph(rest))

    seps = [frozenset(s) for r in range(n + 1) for s in combinations(range(n), r) if separates(s)]
    sepset = set(seps)
    return {s for s in seps if not any(t < s for t in sepset)}


def isomorphic_by_permutation(g, h):
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    target = set(h.edges())
    for p in permutations(range(g.n)):
        if all(tuple(sorted((p[u], p[v]))) in target for u, v in g.edges()):
            return True
    return False


def has_minor_by_assignment(g, h):
    """Try every map V(G) -> {deleted} + V(H) and check the branch-set conditions."""
    G = to_nx(g)
    for labels in product(range(-1, h.n), repeat=g.n):
        sets = [[v for v in range(g.n) if labels[v] == i] for i in range(h.n)]
        if any(not s for s in sets):
            continue
        if not all(nx.is_connected(G.subgraph(s)) for s in sets):
            continue
        if all(any(G.has_edge(x, y) for x in sets[a] for y in sets[b]) for a, b in h.edges()):
            return True
    return False
