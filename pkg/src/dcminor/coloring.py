"""Exact vertex colouring: chromatic number, double-criticality, equivalence.

Colourability is decided by DSATUR-ordered backtracking on bitmasks.  The
chromatic number starts from the clique number and stops below the greedy
DSATUR bound.  Witness colourings are the lexicographically least optimal
assignment in vertex order, so results do not depend on search order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .graph import Graph, mask_of, members


@dataclass(frozen=True)
class Coloring:
    """A vertex -> colour map.  Colours are arbitrary hashable labels, usually ints."""

    assignment: Mapping[int, int] = field(default_factory=dict)

    @classmethod
    def from_sequence(cls, colors: Sequence[int]) -> "Coloring":
        return cls(dict(enumerate(colors)))

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def classes(self) -> list[frozenset[int]]:
        """Colour classes ordered by their smallest vertex."""
        groups: dict[int, set[int]] = {}
        for v, c in self.assignment.items():
            groups.setdefault(c, set()).add(v)
        return sorted((frozenset(s) for s in groups.values()), key=min)

    def as_list(self, n: int) -> list[int]:
        return [self.assignment[v] for v in range(n)]


def is_proper(g: Graph, c: Coloring, within: Iterable[int] | None = None) -> bool:
    """True if ``c`` colours every vertex of ``within`` (default all) with no monochromatic edge."""
    verts = range(g.n) if within is None else sorted(within)
    vmask = mask_of(verts)
    for v in verts:
        if v not in c.assignment:
            return False
        for u in members(g.rows[v] & vmask):
            if u > v and c.assignment[u] == c.assignment[v]:
                return False
    return True


# -- cliques -----------------------------------------------------------------


def max_clique(g: Graph, within: int | None = None) -> int:
    """Bitmask of a maximum clique inside ``within``."""
    rows = g.rows
    best = 0

    def grow(current: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if current.bit_count() > best.bit_count():
                best = current
            return
        while cand:
            if current.bit_count() + cand.bit_count() <= best.bit_count():
                return
            low = cand & -cand
            v = low.bit_length() - 1
            grow(current | low, cand & rows[v])
            cand ^= low

    grow(0, g.vertex_mask if within is None else within)
    return best


def clique_number(g: Graph) -> int:
    return max_clique(g).bit_count()


# -- colourability -----------------------------------------------------------


def _extend(rows: Sequence[int], uncolored: int, k: int, classes: list[int], used: int) -> bool:
    """Try to colour ``uncolored`` given colour-class masks; mutates ``classes`` on success."""
    if not uncolored:
        return True
    best_v, best_key = -1, None
    for v in members(uncolored):
        r = rows[v]
        sat = 0
        for c in range(used):
            if classes[c] & r:
                sat += 1
        if sat >= k:
            return False
        key = (sat, (r & uncolored).bit_count(), -v)
        if best_key is None or key > best_key:
            best_v, best_key = v, key
    v = best_v
    bit = 1 << v
    r = rows[v]
    rest = uncolored & ~bit
    for c in range(min(used + 1, k)):
        if classes[c] & r:
            continue
        classes[c] |= bit
        if _extend(rows, rest, k, classes, max(used, c + 1)):
            return True
        classes[c] &= ~bit
    return False


def k_colorable(g: Graph, k: int, within: int | None = None) -> list[int] | None:
    """Colour-class masks of some proper ``k``-colouring of ``G[within]``, or None."""
    mask = g.vertex_mask if within is None else within
    if k < 0:
        return None
    if not mask:
        return []
    if k == 0:
        return None
    classes = [0] * k
    if _extend(g.rows, mask, k, classes, 0):
        return [c for c in classes if c]
    return None


def _greedy_dsatur(g: Graph, mask: int) -> int:
    classes: list[int] = []
    left = mask
    while left:
        best_v, best_key = -1, None
        for v in members(left):
            r = g.rows[v]
            sat = sum(1 for c in classes if c & r)
            key = (sat, (r & left).bit_count(), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        r = g.rows[best_v]
        for i, c in enumerate(classes):
            if not c & r:
                classes[i] |= 1 << best_v
                break
        else:
            classes.append(1 << best_v)
        left &= ~(1 << best_v)
    return len(classes)


def chromatic_value(g: Graph, within: int | None = None) -> int:
    """Chromatic number of ``G[within]`` without building a witness."""
    mask = g.vertex_mask if within is None else within
    if not mask:
        return 0
    lower = max_clique(g, mask).bit_count()
    upper = _greedy_dsatur(g, mask)
    for k in range(lower, upper):
        if k_colorable(g, k, mask) is not None:
            return k
    return upper


def _lex_least(g: Graph, k: int) -> list[int]:
    rows = g.rows
    colors = [-1] * g.n
    classes = [0] * k
    used = 0
    for v in range(g.n):
        bit = 1 << v
        rest = g.vertex_mask >> (v + 1) << (v + 1)
        for c in range(min(used + 1, k)):
            if classes[c] & rows[v]:
                continue
            trial = list(classes)
            trial[c] |= bit
            if _extend(rows, rest, k, trial, max(used, c + 1)):
                classes[c] |= bit
                colors[v] = c
                used = max(used, c + 1)
                break
        else:  # pragma: no cover - k is always feasible here
            raise AssertionError("lost feasibility while building a witness")
    return colors


class ChromaticResult(NamedTuple):
    value: int
    coloring: Coloring


def chromatic_number(g: Graph) -> ChromaticResult:
    """chi(G) and the lexicographically least optimal colouring (colours 0..chi-1)."""
    chi = chromatic_value(g)
    return ChromaticResult(chi, Coloring.from_sequence(_lex_least(g, chi)))


# -- double-criticality ------------------------------------------------------


class DoubleCriticalVerdict(NamedTuple):
    value: bool
    chromatic: int
    failing_edge: tuple[int, int] | None = None
    disconnected: bool = False

    def __bool__(self) -> bool:
        return self.value


def is_double_critical(g: Graph) -> DoubleCriticalVerdict:
    """Connected, and deleting the ends of any edge lowers chi by exactly two.

    Since chi(G - {u, v}) >= chi(G) - 2 always holds, each edge only needs a
    (chi - 2)-colourability test.  A single vertex counts as double-critical;
    the null graph does not (it is not connected in the usual sense).
    """
    if g.n == 0:
        return DoubleCriticalVerdict(False, 0, None, True)
    chi = chromatic_value(g)
    if not g.is_connected():
        return DoubleCriticalVerdict(False, chi, None, True)
    full = g.vertex_mask
    for u, v in g.edges():
        if k_colorable(g, chi - 2, full & ~(1 << u) & ~(1 << v)) is None:
            return DoubleCriticalVerdict(False, chi, (u, v))
    return DoubleCriticalVerdict(True, chi)


# -- equivalence -------------------------------------------------------------


def _partition(c: Coloring, domain: Iterable[int]) -> set[frozenset[int]]:
    groups: dict[int, set[int]] = {}
    for v in domain:
        groups.setdefault(c.assignment[v], set()).add(v)
    return {frozenset(s) for s in groups.values()}


def colorings_equivalent(c1: Coloring, c2: Coloring) -> bool:
    """Same vertex domain and the same partition into colour classes."""
    if c1.domain != c2.domain:
        raise ValueError("colourings are defined on different vertex sets")
    return _partition(c1, c1.domain) == _partition(c2, c2.domain)


def equivalent_on_set(g: Graph, c1: Coloring, c2: Coloring, a: Iterable[int]) -> bool:
    a = frozenset(a)
    if any(not 0 <= v < g.n for v in a):
        raise IndexError("vertex set outside the graph")
    if not a <= c1.domain or not a <= c2.domain:
        raise ValueError("both colourings must be defined on every vertex of the set")
    return _partition(c1, a) == _partition(c2, a)
