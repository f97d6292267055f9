"""Isomorph-free generation of small graphs by vertex augmentation.

Every class on ``m + 1`` vertices is produced from exactly one parent class
on ``m`` vertices: a child is kept only if deleting its canonically chosen
vertex gives back (a graph isomorphic to) the parent it was grown from.
Duplicates can then only arise between siblings, which are deduplicated
locally.  That makes the work splittable by parent without any global set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .canon import _certificate, canonical_form, canonical_labeling
from .graph import Graph, members, relabel_subset
from .graph6 import read_graph6_file

EXHAUSTIVE_CAP = 9
LONG_RUN_CAP = 10


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class EnumFilter:
    min_degree: int | None = None
    connected_only: bool = False
    min_edges: int | None = None
    max_edges: int | None = None

    def __post_init__(self) -> None:
        if self.min_edges is not None and self.max_edges is not None and self.min_edges > self.max_edges:
            raise ValueError("min_edges exceeds max_edges")
        if self.min_degree is not None and self.min_degree < 0:
            raise ValueError("min_degree must be non-negative")

    def accepts(self, g: Graph) -> bool:
        if self.min_degree is not None and g.n and min(g.degrees()) < self.min_degree:
            return False
        if self.connected_only and not g.is_connected():
            return False
        e = g.edge_count
        if self.min_edges is not None and e < self.min_edges:
            return False
        if self.max_edges is not None and e > self.max_edges:
            return False
        return True


NO_FILTER = EnumFilter()


def _check_cap(n: int, long: bool) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = LONG_RUN_CAP if long else EXHAUSTIVE_CAP
    if n > cap:
        hint = "" if long else f" (n = {LONG_RUN_CAP} needs long=True)"
        raise EnumerationCapError(f"exhaustive enumeration is capped at n = {cap}{hint}")


def _cut_vertices(g: Graph) -> int:
    cut = 0
    for v in range(g.n):
        rest = g.vertex_mask & ~(1 << v)
        if rest and not g.is_connected(rest):
            cut |= 1 << v
    return cut


def _level_min_degree(flt: EnumFilter, level: int, n: int) -> int:
    # deleting a vertex lowers every other degree by at most one
    if flt.min_degree is None:
        return 0
    return max(0, flt.min_degree - (n - level))


def _deletion_vertex(child: Graph, lab: list[int], connected: bool) -> int:
    eligible = child.vertex_mask
    if connected:
        eligible &= ~_cut_vertices(child)
    pos = {v: i for i, v in enumerate(lab)}
    return max(members(eligible), key=lambda v: (child.degree(v), pos[v]))


def _children(parent: Graph, flt: EnumFilter, n: int) -> list[Graph]:
    """Canonical children of a canonical ``parent``, sorted by adjacency rows."""
    m = parent.n
    need = _level_min_degree(flt, m + 1, n)
    required = 0
    for v in range(m):
        if parent.degree(v) < need:
            required |= 1 << v
    free = members(((1 << m) - 1) & ~required)
    connected = flt.connected_only
    seen: dict[tuple[int, ...], Graph] = {}
    for bits in range(1 << len(free)):
        nbrs = required
        for i, v in enumerate(free):
            if bits >> i & 1:
                nbrs |= 1 << v
        if nbrs.bit_count() < need:
            continue
        if connected and m and not nbrs:
            continue
        rows = [r | (nbrs >> v & 1) << m for v, r in enumerate(parent.rows)]
        rows.append(nbrs)
        child = Graph._trusted(m + 1, rows)
        if connected:
            cut = _cut_vertices(child)
            if cut >> m & 1:
                continue
            top = max(child.degree(v) for v in members(child.vertex_mask & ~cut))
        else:
            top = max(child.degrees())
        if child.degree(m) != top:
            continue
        lab = canonical_labeling(child)
        cert = _certificate(child.rows, lab)
        if cert in seen:
            continue
        w = _deletion_vertex(child, lab, connected)
        if w != m:
            rest = [v for v in range(m + 1) if v != w]
            if canonical_form(relabel_subset(child, rest)).rows != parent.rows:
                continue
        seen[cert] = Graph._trusted(m + 1, cert)
    return [seen[k] for k in sorted(seen)]


def _level(graphs: Iterable[Graph], flt: EnumFilter, n: int) -> list[Graph]:
    out = []
    for p in graphs:
        out.extend(_children(p, flt, n))
    out.sort(key=lambda g: g.rows)
    return out


@lru_cache(maxsize=64)
def _parents(n: int, flt: EnumFilter) -> tuple[Graph, ...]:
    """All canonical classes on ``n - 1`` vertices that can grow into accepted graphs."""
    level = [Graph._trusted(0, ())]
    for m in range(n - 1):
        level = _level(level, flt, n)
    return tuple(level)


def enumerate_graphs(n: int, flt: EnumFilter = NO_FILTER, *, long: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices passing ``flt``.

    Output is sorted by the canonical adjacency rows.
    """
    _check_cap(n, long)
    if n == 0:
        g = Graph._trusted(0, ())
        if flt.accepts(g):
            yield g
        return
    yield from (g for g in _level(_parents(n, flt), flt, n) if flt.accepts(g))


@dataclass(frozen=True)
class EnumTask:
    """One shard of an enumeration: the children of a fixed slice of parents."""

    n: int
    flt: EnumFilter
    parents: tuple[Graph, ...]
    index: int
    shards: int

    def __iter__(self) -> Iterator[Graph]:
        if self.n == 0:
            if self.index == 0:
                yield from enumerate_graphs(0, self.flt)
            return
        for g in _level(self.parents, self.flt, self.n):
            if self.flt.accepts(g):
                yield g

    def run(self) -> list[Graph]:
        return list(self)


def partition_work(n: int, flt: EnumFilter = NO_FILTER, shards: int = 1, *, long: bool = False) -> list[EnumTask]:
    """Split ``enumerate_graphs(n, flt)`` into ``shards`` disjoint, independent tasks."""
    if shards < 1:
        raise ValueError("shards must be at least 1")
    _check_cap(n, long)
    parents = _parents(n, flt) if n else ()
    return [EnumTask(n, flt, tuple(parents[i::shards]), i, shards) for i in range(shards)]


def graphs_from_file(path: str | Path, flt: EnumFilter = NO_FILTER) -> Iterator[Graph]:
    """Canonical, deduplicated graphs from an external graph6 corpus, in file order."""
    seen = set()
    for g in read_graph6_file(path):
        c = canonical_form(g)
        if c.rows in seen or not flt.accepts(c):
            continue
        seen.add(c.rows)
        yield c
