"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine an ordered partition to an
equitable one, individualise each vertex of the first non-trivial cell in
turn, recurse.  Each discrete leaf gives a relabelled adjacency tuple and
the lexicographically largest one is canonical.  Automorphisms discovered
at leaves prune children in the same orbit and let the search jump back to
the point where the current path left the first path.
"""

from __future__ import annotations

from .graph import Graph, mask_of, members


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    i = 0
    while i < len(cells):
        wmask = mask_of(cells[i])
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((rows[v] & wmask).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        i = 0 if split else i + 1
    return cells


def _certificate(rows: tuple[int, ...], lab: list[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    cert = []
    for v in lab:
        r = 0
        for u in members(rows[v]):
            r |= 1 << pos[u]
        cert.append(r)
    return tuple(cert)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``lab`` such that ``lab[i]`` is the vertex placed at position ``i``."""
    n = g.n
    if n <= 1:
        return list(range(n))
    rows = g.rows
    state: dict = {"first": None, "first_path": None, "best": None, "best_lab": None}
    autos: list[list[int]] = []

    def leaf(cells: list[list[int]], path: list[int]) -> int | None:
        lab = [c[0] for c in cells]
        cert = _certificate(rows, lab)
        if state["first"] is None:
            state["first"], state["first_lab"], state["first_path"] = cert, lab, list(path)
            state["best"], state["best_lab"] = cert, lab
            return None
        if cert == state["first"]:
            autos.append(_perm_between(lab, state["first_lab"], n))
            common = 0
            for a, b in zip(path, state["first_path"]):
                if a != b:
                    break
                common += 1
            return common
        if cert == state["best"]:
            autos.append(_perm_between(lab, state["best_lab"], n))
        elif cert > state["best"]:
            state["best"], state["best_lab"] = cert, lab
        return None

    def search(cells: list[list[int]], path: list[int]) -> int | None:
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return leaf(cells, path)
        cell = cells[target]
        depth = len(path)
        tried: list[int] = []
        for v in cell:
            if tried and _same_orbit(v, tried, autos, path):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = search(_refine(rows, child), path + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    search(_refine(rows, [list(range(n))]), [])
    return state["best_lab"]


def _perm_between(lab: list[int], ref: list[int], n: int) -> list[int]:
    perm = [0] * n
    for a, b in zip(lab, ref):
        perm[a] = b
    return perm


def _same_orbit(v: int, tried: list[int], autos: list[list[int]], fixed: list[int]) -> bool:
    usable = [a for a in autos if all(a[p] == p for p in fixed)]
    if not usable:
        return False
    seen = {v}
    frontier = [v]
    while frontier:
        w = frontier.pop()
        for a in usable:
            x = a[w]
            if x not in seen:
                seen.add(x)
                frontier.append(x)
    return any(t in seen for t in tried)


def canonical_form(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    return Graph._trusted(g.n, _certificate(g.rows, lab))


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable isomorphism invariant; equal keys iff the graphs are isomorphic."""
    return g.n, canonical_form(g).rows


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).rows == canonical_form(h).rows
