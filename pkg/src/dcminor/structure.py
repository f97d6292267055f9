"""Connectivity, separators and local structure predicates.

"Minimal separating set" here always means inclusion-minimal: ``G - S`` is
disconnected and no proper subset of ``S`` disconnects ``G``.  Such sets
are exactly the vertex sets whose removal leaves at least two components,
every one of which sees all of ``S``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .graph import CapacityError, Graph, mask_of, members

SEPARATOR_CAP = 16


def _mask(g: Graph, s: Iterable[int] | int) -> int:
    m = s if isinstance(s, int) else mask_of(s)
    if m & ~g.vertex_mask:
        raise IndexError("vertex set outside the graph")
    return m


# -- connectivity ------------------------------------------------------------


def _local_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent), capped at ``limit``."""
    # split each vertex v into v_in = 2v, v_out = 2v + 1 with unit capacity
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            adj[a].append(b)
            adj[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in members(g.rows[v]):
            arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in adj[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); ``n - 1`` for complete graphs, 0 for disconnected graphs."""
    n = g.n
    if n <= 1:
        return 0
    if all(r.bit_count() == n - 1 for r in g.rows):
        return n - 1
    if not g.is_connected():
        return 0
    best = n - 1
    for s, t in g.non_edges():
        best = min(best, _local_connectivity(g, s, t, best))
    return best


# -- minimal separators ------------------------------------------------------


def _full_components(g: Graph, sep: int) -> list[int]:
    return [c for c in g.component_masks(g.vertex_mask & ~sep) if _boundary(g, c) == sep]


def _boundary(g: Graph, comp: int) -> int:
    nb = 0
    for v in members(comp):
        nb |= g.rows[v]
    return nb & ~comp


def _close_separators(g: Graph, closed: int) -> Iterator[int]:
    for comp in g.component_masks(g.vertex_mask & ~closed):
        sep = _boundary(g, comp)
        if sep:
            yield sep


def minimal_separator_masks(g: Graph) -> list[int]:
    """All minimal (a, b)-separators, i.e. sets with two or more full components.

    Generated by closing the "neighbourhoods of components" family under
    ``S -> N(C)`` for components ``C`` of ``G - (S ∪ N(x))``, ``x ∈ S``.
    """
    found: set[int] = set()
    queue: list[int] = []
    for v in range(g.n):
        for sep in _close_separators(g, g.rows[v] | 1 << v):
            if sep not in found:
                found.add(sep)
                queue.append(sep)
    while queue:
        sep = queue.pop()
        for x in members(sep):
            for new in _close_separators(g, sep | g.rows[x]):
                if new not in found:
                    found.add(new)
                    queue.append(new)
    return sorted(found, key=lambda m: (m.bit_count(), members(m)))


def inclusion_minimal_separator_masks(g: Graph) -> list[int]:
    if g.n >= 2 and not g.is_connected():
        return [0]
    return [s for s in minimal_separator_masks(g) if len(_full_components(g, s)) == len(g.component_masks(g.vertex_mask & ~s))]


def minimal_separators(g: Graph, max_size: int | None = None) -> list[frozenset[int]]:
    """Inclusion-minimal separating sets of size at most ``max_size``, smallest first."""
    if g.n > SEPARATOR_CAP:
        raise CapacityError(f"separator enumeration is capped at {SEPARATOR_CAP} vertices")
    out = []
    for s in inclusion_minimal_separator_masks(g):
        if max_size is None or s.bit_count() <= max_size:
            out.append(frozenset(members(s)))
    return out


def separates(g: Graph, s: Iterable[int] | int) -> bool:
    rest = g.vertex_mask & ~_mask(g, s)
    return len(g.component_masks(rest)) >= 2


# -- separator shape predicates ----------------------------------------------


def indep_clique_partition(g: Graph, s: Iterable[int]) -> tuple[frozenset[int], frozenset[int]] | None:
    """Split ``S`` into an independent part ``A`` and a clique ``B``, if possible.

    Uses the degree-sequence characterisation of split graphs on ``G[S]``:
    with degrees sorted decreasingly and ``m`` the largest index with
    ``d_m >= m - 1``, ``G[S]`` is split iff the top ``m`` degrees sum to
    ``m(m-1)`` plus the remaining degrees.  Either part may be empty; an
    edgeless ``S`` is returned as ``(S, {})``.
    """
    verts = sorted(set(s))
    smask = _mask(g, verts)
    if not verts:
        return frozenset(), frozenset()
    deg = {v: (g.rows[v] & smask).bit_count() for v in verts}
    if not any(deg.values()):
        return frozenset(verts), frozenset()
    order = sorted(verts, key=lambda v: (-deg[v], v))
    d = [deg[v] for v in order]
    m = max(i for i in range(1, len(d) + 1) if d[i - 1] >= i - 1)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    b = frozenset(order[:m])
    a = frozenset(order[m:])
    return a, b


def clique_minus_one(g: Graph, s: Iterable[int]) -> int | None:
    """Smallest ``x`` in ``S`` with ``G[S - x]`` complete, or None."""
    verts = sorted(set(s))
    if not verts:
        raise ValueError("S must be non-empty")
    smask = _mask(g, verts)
    for x in verts:
        if g.is_clique(smask & ~(1 << x)):
            return x
    return None


SHAPES = ("fits-K33", "fits-K222", "both", "neither")


def shape6_witness(g: Graph, s: Iterable[int]) -> tuple[str, tuple[frozenset[int], ...] | None]:
    """Classify ``G[S]`` for ``|S| = 6`` by the complete multipartite patterns it fits.

    Fitting K_{3,3} means S splits into two independent triples; fitting
    K_{2,2,2} means three independent pairs.  The witness partition is the
    K_{3,3} one when available.
    """
    verts = sorted(set(s))
    if len(verts) != 6:
        raise ValueError(f"shape test needs exactly 6 vertices, got {len(verts)}")
    _mask(g, verts)
    k33 = None
    first, others = verts[0], verts[1:]
    for pair in combinations(others, 2):
        t1 = (first,) + pair
        t2 = tuple(v for v in verts if v not in t1)
        if g.is_independent(mask_of(t1)) and g.is_independent(mask_of(t2)):
            k33 = (frozenset(t1), frozenset(t2))
            break
    k222 = None
    for matching in _perfect_matchings(verts):
        if all(not g.has_edge(a, b) for a, b in matching):
            k222 = tuple(frozenset(p) for p in matching)
            break
    if k33 and k222:
        return "both", k33
    if k33:
        return "fits-K33", k33
    if k222:
        return "fits-K222", k222
    return "neither", None


def _perfect_matchings(verts: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not verts:
        yield []
        return
    a, rest = verts[0], verts[1:]
    for i, b in enumerate(rest):
        for m in _perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(a, b)] + m


def shape6(g: Graph, s: Iterable[int]) -> str:
    return shape6_witness(g, s)[0]


# -- local counts ------------------------------------------------------------


def edge_triangle_count(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        raise ValueError(f"{u}{v} is not an edge")
    return (g.rows[u] & g.rows[v]).bit_count()


def min_edge_triangles(g: Graph) -> int | None:
    """Fewest triangles through any edge; None for edgeless graphs."""
    return min((edge_triangle_count(g, u, v) for u, v in g.edges()), default=None)


def non_dominating_neighbors(g: Graph, x: int) -> frozenset[int]:
    """Neighbours of ``x`` that miss at least one other neighbour of ``x``."""
    nx = g.rows[x]
    return frozenset(y for y in members(nx) if nx & ~g.rows[y] & ~(1 << y))


@dataclass(frozen=True)
class SeparatorReport:
    separator: frozenset[int]
    is_minimal: bool
    clique_minus_one_witness: int | None
    indep_clique_partition: tuple[frozenset[int], frozenset[int]] | None
    shape6: str | None = None

    def to_json(self) -> dict:
        part = self.indep_clique_partition
        return {
            "separator": sorted(self.separator),
            "is_minimal": self.is_minimal,
            "clique_minus_one_witness": self.clique_minus_one_witness,
            "indep_clique_partition": None if part is None else [sorted(part[0]), sorted(part[1])],
            "shape6": self.shape6,
        }


def separator_report(g: Graph, s: Iterable[int]) -> SeparatorReport:
    verts = frozenset(s)
    smask = _mask(g, verts)
    minimal = smask in set(inclusion_minimal_separator_masks(g)) if separates(g, smask) else False
    return SeparatorReport(
        separator=verts,
        is_minimal=minimal,
        clique_minus_one_witness=clique_minus_one(g, verts) if verts else None,
        indep_clique_partition=indep_clique_partition(g, verts),
        shape6=shape6(g, verts) if len(verts) == 6 else None,
    )


@dataclass(frozen=True)
class DenseMinorHypotheses:
    """The four conditions on ``G`` and ``k`` checked by :func:`dense_minor_hypotheses`."""

    k: int
    connectivity: bool
    degree_window: bool
    edge_triangles: bool
    separators: bool
    details: dict = field(default_factory=dict, compare=False)

    @property
    def all_hold(self) -> bool:
        return self.connectivity and self.degree_window and self.edge_triangles and self.separators


def dense_minor_hypotheses(g: Graph, k: int) -> DenseMinorHypotheses:
    """Check, for ``6 <= k <= 9``: (i) kappa >= k - 3, (ii) k + 1 <= delta <= 2k - 5,
    (iii) every edge in >= k - 2 triangles, (iv) no minimal separator ``S`` has
    an ``x`` with ``G[S - x]`` complete.
    """
    if not 6 <= k <= 9:
        raise ValueError("k must lie in 6..9")
    kappa = vertex_connectivity(g)
    delta = min(g.degrees(), default=0)
    tri = min_edge_triangles(g)
    bad = None
    for s in inclusion_minimal_separator_masks(g):
        if s and clique_minus_one(g, members(s)) is not None:
            bad = members(s)
            break
    return DenseMinorHypotheses(
        k=k,
        connectivity=kappa >= k - 3,
        degree_window=k + 1 <= delta <= 2 * k - 5,
        edge_triangles=tri is None or tri >= k - 2,
        separators=bad is None,
        details={"kappa": kappa, "min_degree": delta, "min_edge_triangles": tri, "bad_separator": bad},
    )


# -- extremal thresholds -----------------------------------------------------

FAMILIES = {"mader": None, "jorgensen": 8, "song-thomas": 9}


def extremal_threshold(family: str, n: int, p: int | None = None) -> int:
    """Edge count ``(p-2)n - C(p-1, 2) + 1`` forcing a K_p minor.

    ``family`` is ``"mader"`` (give ``p`` in 1..7), ``"jorgensen"`` (p = 8,
    i.e. ``6n - 20``) or ``"song-thomas"`` (p = 9, i.e. ``7n - 27``).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    fixed = FAMILIES[family]
    if fixed is None:
        if p is None or not 1 <= p <= 7:
            raise ValueError("the mader family needs p in 1..7")
    else:
        if p not in (None, fixed):
            raise ValueError(f"family {family!r} is defined for p = {fixed} only")
        p = fixed
    if n < p:
        raise ValueError(f"threshold needs n >= p (n={n}, p={p})")
    return (p - 2) * n - (p - 1) * (p - 2) // 2 + 1
