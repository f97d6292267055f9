"""Combining colourings of two sides across a six-vertex separator.

``G = G1 ∪ G2`` with ``G1 ∩ G2 = G[S]``, ``|S| = 6`` and no edges between
``G1 - S`` and ``G2 - S``.  Given proper colourings of both sides, one new
colour (called beta below) is placed on an independent subset of ``S`` in
each colouring so that the two become equivalent on ``S``; the colour
classes of the second side are then renamed to agree with the first.

The repair follows a fixed case split on the colour-class sizes on ``S``
(a class of four, a class of three, then the 5- and 4-colour cases with
two colours per class at most).  Relabellings of the separator are found
by searching vertex orders, so every "without loss of generality" step is
explicit.  If the case split does not apply (inputs outside the situation
it was designed for), an exhaustive search over beta sets is used instead
and the outcome records that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .coloring import Coloring, is_proper, max_clique
from .graph import Graph, complement, mask_of, members
from .structure import shape6_witness


class MergePreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class MergeOutcome:
    coloring: Coloring | None
    case: str
    beta_first: frozenset[int] = frozenset()
    beta_second: frozenset[int] = frozenset()
    shape: str | None = None
    shape_witness: tuple[frozenset[int], ...] | None = None

    @property
    def success(self) -> bool:
        return self.coloring is not None


def _classes_on(c: Coloring, s: Sequence[int]) -> list[frozenset[int]]:
    groups: dict = {}
    for v in s:
        groups.setdefault(c[v], set()).add(v)
    return sorted((frozenset(x) for x in groups.values()), key=lambda x: (-len(x), min(x)))


def _partition_after(c: Coloring, s: Sequence[int], beta: frozenset[int]) -> set[frozenset[int]]:
    groups: dict = {}
    for v in s:
        key = ("beta",) if v in beta else ("old", c[v])
        groups.setdefault(key, set()).add(v)
    return {frozenset(x) for x in groups.values()}


def _repairs_ok(g: Graph, s: Sequence[int], c1: Coloring, c2: Coloring, x1: frozenset[int], x2: frozenset[int]) -> bool:
    if not g.is_independent(mask_of(x1)) or not g.is_independent(mask_of(x2)):
        return False
    return _partition_after(c1, s, x1) == _partition_after(c2, s, x2)


def _labelled_four_colour_case(g: Graph, s: Sequence[int], c1: Coloring, c2: Coloring) -> tuple[frozenset, frozenset, str] | None:
    """Both colourings use classes of size <= 2; c2 has exactly four colours on S."""
    k1 = len(_classes_on(c1, s))
    for lab in permutations(s):
        v1, v2, v3, v4, v5, v6 = lab
        if not (c2[v3] == c2[v4] and c2[v5] == c2[v6] and c2[v3] != c2[v5]):
            continue
        if v3 > v4 or v5 > v6:
            continue
        if c1[v3] == c1[v4]:
            continue
        if k1 == 6:
            return frozenset((v5, v6)), frozenset((v3,)), "four/six"
        if k1 == 5:
            if any(c1[v] == c1[w] for v in (v5, v6) for w in s if w != v):
                return frozenset((v5, v6)), frozenset((v3,)), "four/five"
            continue
        paired_12 = any(c1[v] == c1[w] for v in (v1, v2) for w in s if w != v)
        if paired_12:
            if c1[v1] != c1[v3]:
                continue
            single = [v for v in (v5, v6) if sum(c1[w] == c1[v] for w in s) == 1]
            if len(single) == 2 and c1[v2] == c1[v4]:
                return frozenset((v3, v4)), frozenset((v5,)), "four/four/v5v6-single"
            if c1[v6] == c1[v2]:
                return frozenset((v5, v6)), frozenset((v1, v3)), "four/four/i=2"
            if c1[v6] == c1[v4]:
                return frozenset((v3, v4)), frozenset((v6,)), "four/four/i=4"
            if c1[v6] == c1[v5]:
                return frozenset((v3,)), frozenset((v3,)), "four/four/i=5"
            continue
        if c1[v3] == c1[v5] and c1[v4] == c1[v6]:
            return frozenset((v5, v6)), frozenset((v3,)), "four/four/crossed"
    return None


def _case_repair(g: Graph, s: Sequence[int], c1: Coloring, c2: Coloring) -> tuple[frozenset, frozenset, str] | None:
    """Beta sets ``(X1, X2)`` for c1 and c2 from the case split, or None if no case applies."""
    p1, p2 = _classes_on(c1, s), _classes_on(c2, s)
    if _partition_after(c1, s, frozenset()) == _partition_after(c2, s, frozenset()):
        return frozenset(), frozenset(), "equivalent"

    # a class of four: the remaining pair is then forced to be an edge, and
    # moving the four-class of the other colouring onto beta matches them
    for first, (pa, pb) in enumerate(((p1, p2), (p2, p1))):
        if len(pa[0]) >= 4:
            q = pa[0]
            return (frozenset(), q, "four-repeat") if first == 0 else (q, frozenset(), "four-repeat")

    for first, (ca, cb, pa) in enumerate(((c1, c2, p1), (c2, c1, p2))):
        if len(pa[0]) != 3:
            continue
        t = pa[0]
        rest = [v for v in s if v not in t]
        groups_b = _classes_on(cb, rest)
        groups_a = _classes_on(ca, rest)
        if len(groups_b) == 2:
            pair = next(x for x in groups_b if len(x) == 2)
            xa, xb, tag = pair, t, "three-repeat/two"
        elif len(groups_b) == 3:
            if len(groups_a) == 3:
                xa, xb, tag = frozenset(), t, "three-repeat/three-three"
            elif len(groups_a) == 2:
                pair = next(x for x in groups_a if len(x) == 2)
                xa, xb, tag = frozenset((max(pair),)), t, "three-repeat/three-two"
            else:
                return None
        else:
            return None
        return (xa, xb, tag) if first == 0 else (xb, xa, tag)

    swapped = len(p2) > len(p1)
    if swapped:
        c1, c2, p1, p2 = c2, c1, p2, p1
    k2 = len(p2)
    if k2 == 5:
        x2 = frozenset((max(p2[0]),))
        x1 = frozenset((max(p1[0]),)) if len(p1) == 5 else frozenset()
        found = (x1, x2, "five")
    elif k2 == 4:
        found = _labelled_four_colour_case(g, s, c1, c2)
        if found is None:
            return None
    else:
        return None
    x1, x2, tag = found
    return (x2, x1, tag) if swapped else (x1, x2, tag)


def _exhaustive_repair(g: Graph, s: Sequence[int], c1: Coloring, c2: Coloring) -> tuple[frozenset, frozenset] | None:
    subsets = [frozenset(x) for r in range(len(s) + 1) for x in combinations(s, r) if g.is_independent(mask_of(x))]
    for x1 in subsets:
        for x2 in subsets:
            if _partition_after(c1, s, x1) == _partition_after(c2, s, x2):
                return x1, x2
    return None


def _combine(side1: list[int], side2: list[int], s: list[int], c1: Coloring, c2: Coloring,
             x1: frozenset[int], x2: frozenset[int]) -> Coloring:
    beta = object()
    new1 = {v: (beta if v in x1 else c1[v]) for v in side1}
    new2 = {v: (beta if v in x2 else c2[v]) for v in side2}
    names = sorted({c for c in new1.values() if c is not beta}, key=repr)
    index = {c: i for i, c in enumerate(names)}
    if beta in new1.values():
        index[beta] = len(names)
    out = {v: index[c] for v, c in new1.items()}
    rename = {}
    for v in s:
        rename[new2[v]] = out[v]
    taken = set(rename.values())
    spare = (i for i in range(len(index) + len(set(new2.values())) + 1) if i not in taken)
    for v in side2:
        c = new2[v]
        if c not in rename:
            rename[c] = next(spare)
        out.setdefault(v, rename[c])
    return Coloring(out)


def merge_colorings_across_separator(g: Graph, s: Iterable[int], side1: Iterable[int], side2: Iterable[int],
                                     c1: Coloring, c2: Coloring) -> MergeOutcome:
    """Combine a colouring of ``G[side1]`` and one of ``G[side2]`` into a colouring of ``G``.

    ``side1`` and ``side2`` may include or omit ``s``.  On success the result
    uses at most ``max(colours of c1, colours of c2) + 1`` colours and
    agrees with ``c1`` on ``side1 - s`` up to renaming.  If ``G[S]`` fits
    inside K_{3,3} or K_{2,2,2} no merge is attempted and the shape is
    returned instead, with the K_{3,3} split preferred when both fit.
    """
    s = sorted(set(s))
    if len(s) != 6:
        raise MergePreconditionError(f"separator must have 6 vertices, got {len(s)}")
    smask = mask_of(s)
    m1 = mask_of(side1) | smask
    m2 = mask_of(side2) | smask
    if m1 & m2 != smask:
        raise MergePreconditionError("the two sides overlap outside the separator")
    if m1 | m2 != g.vertex_mask:
        raise MergePreconditionError("the two sides do not cover the graph")
    for v in members(m1 & ~smask):
        if g.rows[v] & m2 & ~smask:
            raise MergePreconditionError(f"edge from side 1 vertex {v} to the other side: S does not separate")
    side1_l, side2_l = members(m1), members(m2)
    if not is_proper(g, c1, side1_l):
        raise MergePreconditionError("c1 is not a proper colouring of G[side1]")
    if not is_proper(g, c2, side2_l):
        raise MergePreconditionError("c2 is not a proper colouring of G[side2]")
    if max_clique(complement(g), smask).bit_count() > 4:
        raise MergePreconditionError("G[S] has an independent set of size 5 or more")
    for name, c in (("c1", c1), ("c2", c2)):
        if len(_classes_on(c, s)[0]) > 4:
            raise MergePreconditionError(f"{name} uses one colour on more than four separator vertices")

    tag, parts = shape6_witness(g, s)
    if tag != "neither":
        # the K_{3,3} split is preferred, so "both" reports as fits-K33
        shape = "fits-K222" if tag == "fits-K222" else "fits-K33"
        return MergeOutcome(None, "shape", shape=shape, shape_witness=parts)

    found = _case_repair(g, s, c1, c2)
    if found is not None and _repairs_ok(g, s, c1, c2, found[0], found[1]):
        x1, x2, case = found
    else:
        fallback = _exhaustive_repair(g, s, c1, c2)
        if fallback is None:
            return MergeOutcome(None, "no-repair")
        (x1, x2), case = fallback, "exhaustive"
    merged = _combine(side1_l, side2_l, s, c1, c2, x1, x2)
    return MergeOutcome(merged, case, x1, x2)
