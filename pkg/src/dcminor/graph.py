"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
intersections and subset tests are single integer operations.  Vertex sets
are exposed as ``frozenset[int]``; the ``*_mask`` helpers convert between
the two representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Raised when a graph or search would exceed a documented size cap."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, slots=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the bitmask of neighbours of ``v``.  Instances are
    hashable and compare equal only as labelled graphs.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"row {v} has a loop or out-of-range neighbour")
            for u in members(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        # Skips validation; callers guarantee symmetry and an empty diagonal.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        rows = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __len__(self) -> int:
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(members(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            for v in members(row >> (u + 1) << (u + 1)):
                yield u, v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.rows[u] >> v & 1:
                    yield u, v

    def is_clique(self, vertices: Iterable[int] | int) -> bool:
        m = vertices if isinstance(vertices, int) else mask_of(vertices)
        for v in members(m):
            if (m & ~self.rows[v]) != 1 << v:
                return False
        return True

    def is_independent(self, vertices: Iterable[int] | int) -> bool:
        m = vertices if isinstance(vertices, int) else mask_of(vertices)
        return all(not self.rows[v] & m for v in members(m))

    def component_masks(self, within: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``within``."""
        left = self.vertex_mask if within is None else within
        comps = []
        while left:
            comp = self.reach(left & -left, left)
            comps.append(comp)
            left &= ~comp
        return comps

    def reach(self, start: int, within: int) -> int:
        """All vertices of ``within`` reachable from the mask ``start``."""
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= self.rows[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def is_connected(self, within: int | None = None) -> bool:
        m = self.vertex_mask if within is None else within
        if m == 0:
            return True
        return self.reach(m & -m, m) == m

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for a graph on {n} vertices")


# -- constructors ------------------------------------------------------------


def empty(n: int) -> Graph:
    return Graph.from_edges(n, ())


def complete(t: int) -> Graph:
    if t < 0:
        raise ValueError("t must be non-negative")
    if t > MAX_VERTICES:
        raise CapacityError(f"K_{t} exceeds the {MAX_VERTICES}-vertex cap")
    full = (1 << t) - 1
    return Graph._trusted(t, [full & ~(1 << v) for v in range(t)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; part ``i`` occupies a contiguous index block."""
    if any(p < 1 for p in parts):
        raise ValueError("every part needs at least one vertex")
    n = sum(parts)
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    full = (1 << n) - 1
    rows = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows.extend([full & ~block] * p)
        start += p
    return Graph._trusted(n, rows)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def wheel(rim: int) -> Graph:
    """Hub 0 joined to a cycle on vertices ``1..rim``."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)


def petersen() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph._trusted(g.n + h.n, list(g.rows) + [r << shift for r in h.rows])


# -- local operations --------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """``G + uv``; returns ``g`` itself when ``u == v`` or ``uv`` is already an edge."""
    _check_vertex(g.n, u)
    _check_vertex(g.n, v)
    if u == v or g.has_edge(u, v):
        return g
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(g.n, rows)


def add_edges(g: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    for u, v in pairs:
        g = add_edge(g, u, v)
    return g


def _as_mask(g: Graph, s: Iterable[int] | int) -> int:
    m = s if isinstance(s, int) else mask_of(s)
    if m & ~g.vertex_mask or m < 0:
        raise IndexError(f"vertex set {members(m)} not within a graph on {g.n} vertices")
    return m


def induced(g: Graph, s: Iterable[int] | int) -> Graph:
    """``G[S]`` relabelled so that position ``i`` is the ``i``-th smallest vertex of ``s``."""
    order = members(_as_mask(g, s))
    return relabel_subset(g, order)


def relabel_subset(g: Graph, order: Sequence[int]) -> Graph:
    """Subgraph induced by ``order`` with ``order[i]`` becoming vertex ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in members(g.rows[v]):
            i = pos.get(u)
            if i is not None:
                row |= 1 << i
        rows.append(row)
    return Graph._trusted(len(order), rows)


def delete(g: Graph, s: Iterable[int] | int) -> Graph:
    """``G - S``; surviving vertices keep their relative order."""
    return induced(g, g.vertex_mask & ~_as_mask(g, s))


def neighborhood(g: Graph, x: int) -> frozenset[int]:
    _check_vertex(g.n, x)
    return g.neighbors(x)


def closed_neighborhood(g: Graph, x: int) -> frozenset[int]:
    return neighborhood(g, x) | {x}


def degree(g: Graph, x: int) -> int:
    _check_vertex(g.n, x)
    return g.degree(x)


def min_degree(g: Graph) -> int:
    """Minimum degree; 0 for the null graph."""
    return min(g.degrees(), default=0)


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel so that vertex ``v`` becomes ``perm[v]``."""
    rows = [0] * g.n
    for v, row in enumerate(g.rows):
        rows[perm[v]] = mask_of(perm[u] for u in members(row))
    return Graph._trusted(g.n, rows)
