"""Exact minor containment with branch-set certificates.

The search works on quotient graphs: every current vertex stands for a
connected set of host vertices (its branch set), represented by the
smallest host vertex in it.  At each node it picks an unfrozen vertex
``v`` of minimum degree and branches on

* contracting ``v`` into an unfrozen neighbour, or
* freezing ``v``: it will end up as a singleton branch set or unused.

That is exhaustive, because in any model the branch set of ``v`` is either
``{v}``, unused, or contains a neighbour of ``v``.  Failed states are
memoised on their branch-set partition.  For clique targets several
reductions are applied first (low-degree and simplicial vertices) and large
hosts are split along clique separators, which never changes the answer
for a complete target.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .graph import Graph, complete, delete, induced, mask_of, members
from .graph6 import to_graph6
from .structure import minimal_separator_masks

GENERAL_TARGET_CAP = 10


class MinorCapError(ValueError):
    pass


@dataclass(frozen=True)
class MinorCertificate:
    """Disjoint connected branch sets of the host, one per target vertex (in target order)."""

    branch_sets: tuple[frozenset[int], ...]
    target: Graph

    def to_json(self) -> dict:
        return {
            "target_order": self.target.n,
            "target_graph6": to_graph6(self.target),
            "branch_sets": [sorted(b) for b in self.branch_sets],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinorCertificate":
        from .graph6 import from_graph6

        return cls(tuple(frozenset(b) for b in data["branch_sets"]), from_graph6(data["target_graph6"]))


def certificate_violation(g: Graph, cert: MinorCertificate) -> str | None:
    """First violated certificate invariant, or None if the certificate is valid for ``g``."""
    sets = cert.branch_sets
    if len(sets) != cert.target.n:
        return f"{len(sets)} branch sets for a target on {cert.target.n} vertices"
    masks = []
    used = 0
    for i, b in enumerate(sets):
        if not b:
            return f"branch set {i} is empty"
        if any(not 0 <= v < g.n for v in b):
            return f"branch set {i} has a vertex outside the host"
        m = mask_of(b)
        if m & used:
            return f"branch set {i} overlaps an earlier branch set"
        used |= m
        if not g.is_connected(m):
            return f"branch set {i} is not connected"
        masks.append(m)
    for a, b in cert.target.edges():
        if not any(g.rows[v] & masks[b] for v in members(masks[a])):
            return f"no host edge between branch sets {a} and {b}"
    return None


def verify_certificate(g: Graph, cert: MinorCertificate) -> bool:
    return certificate_violation(g, cert) is None


# -- search state ------------------------------------------------------------


class _State(NamedTuple):
    alive: int
    frozen: int
    qrows: tuple[int, ...]
    parts: tuple[int, ...]

    def key(self) -> tuple:
        return self.frozen, tuple(self.parts[r] for r in members(self.alive))


def _initial(g: Graph, mask: int) -> _State:
    qrows = tuple(r & mask if mask >> v & 1 else 0 for v, r in enumerate(g.rows))
    parts = tuple(1 << v if mask >> v & 1 else 0 for v in range(g.n))
    return _State(mask, 0, qrows, parts)


def _contract(st: _State, u: int, v: int) -> _State:
    r, o = min(u, v), max(u, v)
    q = list(st.qrows)
    merged = (q[u] | q[v]) & ~(1 << u) & ~(1 << v)
    for w in members(q[o]):
        q[w] = q[w] & ~(1 << o) | 1 << r
    q[r] = merged
    q[o] = 0
    p = list(st.parts)
    p[r] = p[u] | p[v]
    p[o] = 0
    frozen = st.frozen & ~(1 << o)
    return _State(st.alive & ~(1 << o), frozen, tuple(q), tuple(p))


def _delete(st: _State, v: int) -> _State:
    q = list(st.qrows)
    for w in members(q[v]):
        q[w] &= ~(1 << v)
    q[v] = 0
    p = list(st.parts)
    p[v] = 0
    return _State(st.alive & ~(1 << v), st.frozen & ~(1 << v), tuple(q), tuple(p))


def _find_clique(qrows: tuple[int, ...], cand: int, t: int) -> int | None:
    def grow(current: int, size: int, pool: int) -> int | None:
        if size == t:
            return current
        while pool:
            if size + pool.bit_count() < t:
                return None
            low = pool & -pool
            v = low.bit_length() - 1
            found = grow(current | low, size + 1, pool & qrows[v])
            if found is not None:
                return found
            pool ^= low
        return None

    return grow(0, 0, cand)


class _CliqueSearch:
    def __init__(self, t: int) -> None:
        self.t = t
        self.need_edges = comb(t, 2)
        self.failed: set = set()
        self.nodes = 0

    def _reduce(self, st: _State) -> _State:
        t = self.t
        changed = True
        while changed:
            changed = False
            for v in members(st.alive):
                row = st.qrows[v]
                d = row.bit_count()
                if d >= t - 1:
                    continue
                frozen = st.frozen >> v & 1
                if frozen or d <= 1 or _is_clique(st.qrows, row):
                    st = _delete(st, v)
                    changed = True
                    break
                if d == 2 and t >= 4:
                    a, b = members(row)
                    free = [w for w in (a, b) if not st.frozen >> w & 1]
                    st = _contract(st, v, free[0]) if free else _delete(st, v)
                    changed = True
                    break
        return st

    def run(self, st: _State) -> tuple[int, ...] | None:
        self.nodes += 1
        t = self.t
        st = self._reduce(st)
        alive = st.alive
        m = alive.bit_count()
        if m < t:
            return None
        q = st.qrows
        degs = {v: q[v].bit_count() for v in members(alive)}
        if sum(degs.values()) // 2 < self.need_edges:
            return None
        key = st.key()
        if key in self.failed:
            return None
        cand = mask_of(v for v, d in degs.items() if d >= t - 1)
        if cand.bit_count() >= t:
            clique = _find_clique(q, cand, t)
            if clique is not None:
                return tuple(st.parts[v] for v in members(clique))
        if m > t:
            free = [v for v in members(alive & ~st.frozen)]
            if free:
                v = min(free, key=lambda x: (degs[x], x))
                row = q[v]
                nbrs = [u for u in members(row & ~st.frozen)]
                nbrs.sort(key=lambda u: ((row & q[u]).bit_count(), u))
                for u in nbrs:
                    found = self.run(_contract(st, v, u))
                    if found is not None:
                        return found
                frozen_state = _State(alive, st.frozen | 1 << v, q, st.parts)
                found = self.run(frozen_state)
                if found is not None:
                    return found
        self.failed.add(key)
        return None


def _is_clique(qrows: tuple[int, ...], mask: int) -> bool:
    for v in members(mask):
        if mask & ~qrows[v] & ~(1 << v):
            return False
    return True


# -- clique separator decomposition -------------------------------------------


def clique_atoms(g: Graph, mask: int | None = None) -> list[int]:
    """Vertex masks of pieces obtained by splitting along clique separators.

    Every K_t minor of ``G[mask]`` (t >= 1) lives in one of the pieces up to
    shrinking its branch sets, and every piece is an induced subgraph.
    """
    mask = g.vertex_mask if mask is None else mask
    comps = g.component_masks(mask)
    if len(comps) > 1:
        return [a for c in comps for a in clique_atoms(g, c)]
    order = members(mask)
    sub = induced(g, mask)
    for sep in minimal_separator_masks(sub):
        if sub.is_clique(sep):
            sep_host = mask_of(order[i] for i in members(sep))
            pieces = g.component_masks(mask & ~sep_host)
            return [a for c in pieces for a in clique_atoms(g, c | sep_host)]
    return [mask]


# -- public API --------------------------------------------------------------


def _shrink(g: Graph, sets: list[int], target: Graph) -> list[int]:
    sets = list(sets)
    for i in range(len(sets)):
        for v in reversed(members(sets[i])):
            trial = sets[i] & ~(1 << v)
            if not trial or not g.is_connected(trial):
                continue
            ok = True
            for j in members(target.rows[i]):
                if not any(g.rows[w] & sets[j] for w in members(trial)):
                    ok = False
                    break
            if ok:
                sets[i] = trial
    return sets


def _certificate(g: Graph, sets: list[int], target: Graph) -> MinorCertificate:
    sets = _shrink(g, sets, target)
    cert = MinorCertificate(tuple(frozenset(members(m)) for m in sets), target)
    problem = certificate_violation(g, cert)
    if problem is not None:  # pragma: no cover - search invariant
        raise AssertionError(f"search produced an invalid certificate: {problem}")
    return cert


def _kt_sets(g: Graph, t: int) -> list[int] | None:
    n = g.n
    if t == 1:
        return [1] if n else None
    decompose = n >= 10 and n - t >= 4
    atoms = clique_atoms(g) if decompose else [g.vertex_mask]
    for atom in sorted(atoms, key=lambda a: (-a.bit_count(), members(a))):
        if atom.bit_count() < t:
            continue
        found = _CliqueSearch(t).run(_initial(g, atom))
        if found is not None:
            return sorted(found, key=lambda m: members(m))
    return None


def has_kt_minor(g: Graph, t: int) -> MinorCertificate | None:
    """A certificate that ``G`` has a K_t minor, or None."""
    if t < 1:
        raise ValueError("t must be at least 1")
    sets = _kt_sets(g, t)
    return None if sets is None else _certificate(g, sets, complete(t))


class KtPlusK1(NamedTuple):
    vertex: int
    certificate: MinorCertificate


def has_kt_plus_k1_minor(g: Graph, t: int) -> KtPlusK1 | None:
    """A vertex ``x`` and a K_t certificate in ``G - x`` (host labels), or None.

    ``G`` has a K_t ∪ K_1 minor exactly when such an ``x`` exists.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    whole = has_kt_minor(g, t)
    if whole is None:
        return None
    covered = mask_of(v for b in whole.branch_sets for v in b)
    spare = g.vertex_mask & ~covered
    if spare:
        return KtPlusK1(members(spare)[0], whole)
    for x in range(g.n):
        rest = [v for v in range(g.n) if v != x]
        sets = _kt_sets(delete(g, {x}), t)
        if sets is not None:
            host = [mask_of(rest[i] for i in members(m)) for m in sets]
            return KtPlusK1(x, _certificate(g, host, complete(t)))
    return None


def hadwiger_number(g: Graph) -> int:
    """Largest ``t`` with a K_t minor (0 for the null graph)."""
    from .coloring import clique_number

    t = clique_number(g)
    while t < g.n and _kt_sets(g, t + 1) is not None:
        t += 1
    return t


# -- general targets ---------------------------------------------------------


def _monomorphism(h: Graph, qrows: tuple[int, ...], alive: int) -> list[int] | None:
    order = sorted(range(h.n), key=lambda x: (-h.degree(x), x))
    image = [-1] * h.n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        x = order[i]
        need = 0
        for y in members(h.rows[x]):
            if image[y] >= 0:
                need |= 1 << image[y]
        dx = h.degree(x)
        for c in members(alive & ~used):
            if qrows[c].bit_count() < dx or need & ~qrows[c]:
                continue
            image[x] = c
            used |= 1 << c
            if place(i + 1):
                return True
            used &= ~(1 << c)
            image[x] = -1
        return False

    return image if place(0) else None


class _GeneralSearch:
    def __init__(self, h: Graph) -> None:
        self.h = h
        self.min_deg = min(h.degrees(), default=0)
        self.failed: set = set()

    def run(self, st: _State) -> list[int] | None:
        h = self.h
        # frozen vertices too sparse to host any target vertex are useless
        for v in members(st.alive & st.frozen):
            if st.qrows[v].bit_count() < self.min_deg:
                st = _delete(st, v)
        m = st.alive.bit_count()
        if m < h.n:
            return None
        q = st.qrows
        if sum(q[v].bit_count() for v in members(st.alive)) // 2 < h.edge_count:
            return None
        key = st.key()
        if key in self.failed:
            return None
        image = _monomorphism(h, q, st.alive)
        if image is not None:
            return [st.parts[c] for c in image]
        free = members(st.alive & ~st.frozen)
        if m > h.n and free:
            v = min(free, key=lambda x: (q[x].bit_count(), x))
            row = q[v]
            nbrs = sorted(members(row & ~st.frozen), key=lambda u: ((row & q[u]).bit_count(), u))
            for u in nbrs:
                found = self.run(_contract(st, v, u))
                if found is not None:
                    return found
            found = self.run(_State(st.alive, st.frozen | 1 << v, q, st.parts))
            if found is not None:
                return found
        self.failed.add(key)
        return None


def has_minor(g: Graph, h: Graph) -> MinorCertificate | None:
    """A certificate that ``h`` is a minor of ``g``, or None.  Targets are capped at 10 vertices."""
    if h.n > GENERAL_TARGET_CAP:
        raise MinorCapError(f"general minor targets are capped at {GENERAL_TARGET_CAP} vertices")
    if h.n == 0:
        return MinorCertificate((), h)
    if h.edge_count == h.n * (h.n - 1) // 2:
        cert = has_kt_minor(g, h.n)
        return None if cert is None else MinorCertificate(cert.branch_sets, h)
    found = _GeneralSearch(h).run(_initial(g, g.vertex_mask))
    return None if found is None else _certificate(g, found, h)
