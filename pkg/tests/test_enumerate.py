import pytest

from dcminor.canon import canonical_form, canonical_key
from dcminor.enumerate import (
    EnumFilter, EnumerationCapError, enumerate_graphs, graphs_from_file, partition_work,
)
from dcminor.graph import complete, cycle, permute
from dcminor.graph6 import write_graph6_file

ALL = [1, 1, 2, 4, 11, 34, 156, 1044]
CONNECTED = [1, 1, 1, 2, 6, 21, 112, 853]


def test_class_counts(classes):
    assert [len(classes[n]) for n in range(8)] == ALL


def test_representatives_are_canonical_and_distinct(classes):
    for n in range(8):
        keys = [canonical_key(g) for g in classes[n]]
        assert len(set(keys)) == len(keys)
        assert all(canonical_form(g) == g for g in classes[n])


def test_output_order_is_sorted(classes):
    for n in range(8):
        rows = [g.rows for g in classes[n]]
        assert rows == sorted(rows)


def test_connected_counts():
    assert [sum(1 for _ in enumerate_graphs(n, EnumFilter(connected_only=True))) for n in range(8)] == CONNECTED


@pytest.mark.parametrize("flt", [
    EnumFilter(min_degree=2),
    EnumFilter(min_degree=3, connected_only=True),
    EnumFilter(min_edges=8, max_edges=12),
    EnumFilter(connected_only=True, max_edges=7),
])
def test_filters_match_post_filtering(classes, flt):
    for n in range(8):
        pruned = list(enumerate_graphs(n, flt))
        assert pruned == [g for g in classes[n] if flt.accepts(g)]


def test_shards_partition_the_output(classes):
    tasks = partition_work(7, shards=4)
    got = [g for t in tasks for g in t.run()]
    assert sorted(g.rows for g in got) == sorted(g.rows for g in classes[7])
    assert len(got) == len(classes[7])


def test_caps():
    with pytest.raises(EnumerationCapError):
        next(enumerate_graphs(10))
    with pytest.raises(EnumerationCapError):
        next(enumerate_graphs(11, long=True))
    with pytest.raises(ValueError):
        EnumFilter(min_edges=5, max_edges=2)


def test_corpus_dedupe(tmp_path):
    path = tmp_path / "in.g6"
    write_graph6_file(path, [cycle(5), permute(cycle(5), [1, 3, 0, 2, 4]), complete(4)])
    got = list(graphs_from_file(path))
    assert len(got) == 2
    assert list(graphs_from_file(path, EnumFilter(min_degree=3))) == [canonical_form(complete(4))]
