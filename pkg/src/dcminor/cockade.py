"""(H, k)-cockades: repeated clique-sums of copies of H along k-cliques.

A build script starts from ``H`` and glues one fresh copy of ``H`` per
step, identifying a k-clique of the current graph with a k-clique of the
copy.  Gluing two arbitrary cockades reduces to this, because the clique
used in the second cockade lies inside a single copy of ``H``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterator, Sequence

from .canon import canonical_key, is_isomorphic
from .graph import CapacityError, Graph, induced, mask_of
from .graph6 import from_graph6, to_graph6

COCKADE_CAP = 24


class CockadeSpecError(ValueError):
    pass


@dataclass(frozen=True)
class GlueStep:
    """Identify ``host[i]`` (current graph) with ``copy[i]`` (fresh copy of the base)."""

    host: tuple[int, ...]
    copy: tuple[int, ...]


@dataclass(frozen=True)
class CockadeSpec:
    base: Graph
    glue_size: int
    steps: tuple[GlueStep, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "base": to_graph6(self.base),
            "glue_size": self.glue_size,
            "steps": [{"host": list(s.host), "copy": list(s.copy)} for s in self.steps],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CockadeSpec":
        try:
            steps = tuple(GlueStep(tuple(s["host"]), tuple(s["copy"])) for s in data.get("steps", []))
            return cls(from_graph6(data["base"]), int(data["glue_size"]), steps)
        except (KeyError, TypeError) as exc:
            raise CockadeSpecError(f"malformed cockade spec: {exc}") from exc

    @classmethod
    def load(cls, path: str | Path) -> "CockadeSpec":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def build_cockade(spec: CockadeSpec) -> Graph:
    """Glue the steps in order.  New vertices of each copy are appended in base order."""
    h, k = spec.base, spec.glue_size
    rows = list(h.rows)
    for i, step in enumerate(spec.steps):
        n = len(rows)
        cur = Graph._trusted(n, rows)
        if len(step.host) != k or len(set(step.host)) != k or any(not 0 <= v < n for v in step.host):
            raise CockadeSpecError(f"step {i}: host must list {k} distinct vertices of the current graph")
        if not cur.is_clique(step.host):
            raise CockadeSpecError(f"step {i}: host vertices {list(step.host)} are not a clique")
        if len(step.copy) != k or len(set(step.copy)) != k or any(not 0 <= v < h.n for v in step.copy):
            raise CockadeSpecError(f"step {i}: copy must list {k} distinct vertices of the base")
        if not h.is_clique(step.copy):
            raise CockadeSpecError(f"step {i}: copy vertices {list(step.copy)} are not a clique of the base")
        where = dict(zip(step.copy, step.host))
        for v in range(h.n):
            if v not in where:
                where[v] = len(rows)
                rows.append(0)
        for a, b in h.edges():
            x, y = where[a], where[b]
            rows[x] |= 1 << y
            rows[y] |= 1 << x
    return Graph(len(rows), tuple(rows))


def random_spec(base: Graph, k: int, steps: int, rng) -> CockadeSpec:
    """A build script gluing ``steps`` copies on randomly chosen k-cliques."""
    base_cliques = list(k_cliques(base, k))
    if not base_cliques:
        raise CockadeSpecError(f"base has no {k}-clique")
    out: list[GlueStep] = []
    g = base
    for _ in range(steps):
        host = list(rng.choice(list(k_cliques(g, k))))
        copy = list(rng.choice(base_cliques))
        rng.shuffle(copy)
        out.append(GlueStep(tuple(host), tuple(copy)))
        g = build_cockade(CockadeSpec(base, k, tuple(out)))
    return CockadeSpec(base, k, tuple(out))


def cockade_family(base: Graph, k: int, max_steps: int) -> list[CockadeSpec]:
    """One build script per isomorphism class of cockade with at most ``max_steps`` glue steps.

    Every glue position is tried; the copy side always uses the base's
    first k-clique, which is enough when the base's automorphisms act as the
    full symmetric group on each of its k-cliques (true for complete
    multipartite bases).
    """
    copy = next(k_cliques(base, k), None)
    if copy is None:
        raise CockadeSpecError(f"base has no {k}-clique")
    root = CockadeSpec(base, k, ())
    seen = {canonical_key(base): root}
    frontier = [root]
    for _ in range(max_steps):
        grown = []
        for spec in frontier:
            g = build_cockade(spec)
            for host in k_cliques(g, k):
                nxt = CockadeSpec(base, k, spec.steps + (GlueStep(host, copy),))
                key = canonical_key(build_cockade(nxt))
                if key not in seen:
                    seen[key] = nxt
                    grown.append(nxt)
        frontier = grown
    return list(seen.values())


def k_cliques(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """All k-cliques as ascending vertex tuples, in lexicographic order."""

    def grow(chosen: list[int], cand: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == k:
            yield tuple(chosen)
            return
        while cand:
            if len(chosen) + cand.bit_count() < k:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from grow(chosen + [v], cand & g.rows[v])

    if k == 0:
        yield ()
        return
    yield from grow([], g.vertex_mask)


def is_cockade(g: Graph, h: Graph, k: int) -> bool:
    """Whether ``g`` is an (H, k)-cockade, by recursive splitting along k-clique separators."""
    if g.n > COCKADE_CAP:
        raise CapacityError(f"cockade recognition is capped at {COCKADE_CAP} vertices")
    if not 0 <= k < h.n:
        raise ValueError("glue size must satisfy 0 <= k < |H|")
    grow_v = h.n - k
    grow_e = h.edge_count - comb(k, 2)
    memo: dict = {}

    def rec(x: Graph) -> bool:
        if x.n < h.n or (x.n - h.n) % grow_v:
            return False
        steps = (x.n - h.n) // grow_v
        if x.edge_count != h.edge_count + steps * grow_e:
            return False
        if steps == 0:
            return is_isomorphic(x, h)
        key = canonical_key(x)
        if key in memo:
            return memo[key]
        memo[key] = False
        for clique in k_cliques(x, k):
            cm = mask_of(clique)
            comps = x.component_masks(x.vertex_mask & ~cm)
            if len(comps) < 2:
                continue
            first, others = comps[0], comps[1:]
            for r in range(len(others)):
                for extra in combinations(others, r):
                    side_a = first | mask_of_masks(extra)
                    side_b = x.vertex_mask & ~cm & ~side_a
                    if rec(induced(x, side_a | cm)) and rec(induced(x, side_b | cm)):
                        memo[key] = True
                        return True
        return False

    return rec(g)


def mask_of_masks(masks: Sequence[int]) -> int:
    out = 0
    for m in masks:
        out |= m
    return out
