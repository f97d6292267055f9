from itertools import combinations

import networkx as nx
import pytest

from dcminor.graph import CapacityError, Graph, complete, complete_multipartite, cycle, empty, path, petersen
from dcminor.structure import (
    clique_minus_one, dense_minor_hypotheses, edge_triangle_count, extremal_threshold, indep_clique_partition,
    min_edge_triangles, minimal_separators, non_dominating_neighbors, separates, separator_report, shape6,
    shape6_witness, vertex_connectivity,
)
from oracles import separating_subsets, to_nx


def test_separators_match_subset_oracle(classes):
    for n in range(8):
        for g in classes[n]:
            assert set(minimal_separators(g)) == separating_subsets(g), g


def test_separator_size_filter_and_cap():
    seps = minimal_separators(cycle(6), max_size=2)
    assert all(len(s) == 2 for s in seps) and len(seps) == 9
    with pytest.raises(CapacityError):
        minimal_separators(empty(17))


def test_connectivity_matches_networkx(classes):
    for n in range(2, 8):
        for g in classes[n]:
            assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))
    assert vertex_connectivity(petersen()) == 3


def _split_oracle(g, verts):
    for r in range(len(verts) + 1):
        for a in combinations(verts, r):
            b = [v for v in verts if v not in a]
            if g.is_independent(a) and g.is_clique(b):
                return True
    return False


def _shape_oracle(g, verts):
    k33 = any(g.is_independent(t) and g.is_independent([v for v in verts if v not in t])
              for t in combinations(verts, 3))
    k222 = False
    for p1 in combinations(verts, 2):
        rest = [v for v in verts if v not in p1]
        for p2 in combinations(rest, 2):
            p3 = [v for v in rest if v not in p2]
            if all(g.is_independent(p) for p in (p1, p2, p3)):
                k222 = True
    return {(True, True): "both", (True, False): "fits-K33", (False, True): "fits-K222",
            (False, False): "neither"}[(k33, k222)]


def test_split_and_shape_on_all_six_vertex_classes(classes):
    assert len(classes[6]) == 156
    for g in classes[6]:
        verts = list(range(6))
        part = indep_clique_partition(g, verts)
        assert (part is not None) == _split_oracle(g, verts)
        if part is not None:
            a, b = part
            assert a | b == set(verts) and not a & b
            assert g.is_independent(a) and g.is_clique(b)
        tag, witness = shape6_witness(g, verts)
        assert tag == _shape_oracle(g, verts)
        if witness is not None:
            assert all(g.is_independent(p) for p in witness)


def test_split_on_subsets_of_larger_graphs():
    p = petersen()
    for s in combinations(range(10), 5):
        part = indep_clique_partition(p, s)
        assert (part is not None) == _split_oracle(p, list(s))


def test_shape_examples():
    assert shape6(cycle(6), range(6)) == "both"
    assert shape6_witness(cycle(6), range(6))[1] == (frozenset({0, 2, 4}), frozenset({1, 3, 5}))
    assert shape6(complete_multipartite([2, 2, 2]), range(6)) == "fits-K222"
    assert shape6(complete_multipartite([3, 3]), range(6)) == "fits-K33"
    assert shape6(complete(6), range(6)) == "neither"
    with pytest.raises(ValueError):
        shape6(cycle(6), range(5))


def test_clique_minus_one():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert clique_minus_one(g, [0, 1, 2, 3]) == 3
    assert clique_minus_one(cycle(5), range(5)) is None
    with pytest.raises(ValueError):
        clique_minus_one(g, [])


def test_edge_triangles_on_k333():
    g = complete_multipartite([3, 3, 3])
    for u, v in g.edges():
        direct = sum(1 for w in range(9) if g.has_edge(u, w) and g.has_edge(v, w))
        assert edge_triangle_count(g, u, v) == direct == 3
    assert min_edge_triangles(g) == 3
    assert min_edge_triangles(empty(3)) is None
    with pytest.raises(ValueError):
        edge_triangle_count(g, 0, 1)


def test_non_dominating_neighbors():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert non_dominating_neighbors(g, 0) == frozenset({1, 2, 3})
    assert non_dominating_neighbors(complete(4), 0) == frozenset()


def test_separator_report():
    rep = separator_report(path(3), [1])
    assert rep.is_minimal and rep.clique_minus_one_witness == 1
    data = rep.to_json()
    assert data["separator"] == [1] and data["shape6"] is None
    assert not separates(complete(4), [0])


def test_dense_minor_hypotheses_fields():
    g = complete_multipartite([2] * 6)
    rep = dense_minor_hypotheses(g, 7)
    assert rep.details["kappa"] == 10 and rep.details["min_degree"] == 10
    assert rep.connectivity and rep.edge_triangles and rep.separators
    assert not rep.degree_window and not rep.all_hold
    with pytest.raises(ValueError):
        dense_minor_hypotheses(g, 5)


def test_dense_minor_hypotheses_flags_clique_minus_one_separator():
    # two K4s glued on the edge 2-3: S = {2, 3} is a clique, so S - x is complete
    edges = [(u, v) for u, v in combinations(range(4), 2)] + [(u, v) for u, v in combinations(range(2, 6), 2)]
    rep = dense_minor_hypotheses(Graph.from_edges(6, set(edges)), 6)
    assert not rep.separators and rep.details["bad_separator"] == [2, 3]


@pytest.mark.parametrize("family, n, p, want", [
    ("mader", 10, 7, 36), ("mader", 5, 3, 5), ("jorgensen", 10, None, 40), ("song-thomas", 10, None, 43),
])
def test_thresholds(family, n, p, want):
    assert extremal_threshold(family, n, p) == want


def test_threshold_errors():
    with pytest.raises(ValueError):
        extremal_threshold("nope", 5, 3)
    with pytest.raises(ValueError):
        extremal_threshold("mader", 5, 8)
    with pytest.raises(ValueError):
        extremal_threshold("jorgensen", 10, 7)
    with pytest.raises(ValueError):
        extremal_threshold("mader", 3, 5)
