"""Cut witnesses: edge cuts and separation triples.

A witness always refers to a concrete graph orientation.  Searches that
ran on the reversed graph re-express their findings before returning,
so a witness can be validated by a plain recount on the graph it names.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, cut_stats


@dataclass(frozen=True)
class EdgeCut:
    """Vertex set S with its crossing arcs E(S, V-S) in the base graph."""

    s: frozenset
    crossing: tuple = ()

    @property
    def size(self) -> int:
        return len(self.crossing)

    def describe(self):
        return {"kind": "edge_cut", "s_size": len(self.s), "cut_size": self.size}


@dataclass(frozen=True)
class SeparationTriple:
    """Partition (L, S, R) with L,R nonempty and no arcs from L to R."""

    left: frozenset
    separator: frozenset
    right: frozenset

    @property
    def size(self) -> int:
        return len(self.separator)

    def swapped(self) -> "SeparationTriple":
        """The same triple seen from the reversed graph."""
        return SeparationTriple(self.right, self.separator, self.left)

    def describe(self):
        return {
            "kind": "vertex_cut",
            "left_size": len(self.left),
            "cut_size": self.size,
            "right_size": len(self.right),
        }


CutWitness = EdgeCut | SeparationTriple


def edge_cut_of(g: Graph, s) -> EdgeCut:
    """Materialize the edge cut witness of S by scanning the base graph."""
    sset = frozenset(s)
    heads, offsets = g.heads, g.offsets
    crossing = []
    for v in sorted(sset):
        for a in range(offsets[v], offsets[v + 1]):
            if heads[a] not in sset:
                crossing.append(a)
    return EdgeCut(sset, tuple(crossing))


def valid_edge_cut(g: Graph, w: EdgeCut) -> bool:
    if not w.s or len(w.s) >= g.n:
        return False
    if any(not (0 <= v < g.n) for v in w.s):
        return False
    stats = cut_stats(g, w.s)
    if stats.cut_size != len(w.crossing):
        return False
    # Claimed crossing arcs must be exactly the arcs leaving S.
    return sorted(w.crossing) == [
        a for v in sorted(w.s) for a in g.out_arc_ids(v) if g.heads[a] not in w.s
    ]


def valid_triple(g: Graph, t: SeparationTriple) -> bool:
    L, S, R = t.left, t.separator, t.right
    if not L or not R:
        return False
    if len(L) + len(S) + len(R) != g.n:
        return False
    if L & S or L & R or S & R:
        return False
    if any(not (0 <= v < g.n) for part in (L, S, R) for v in part):
        return False
    heads, offsets = g.heads, g.offsets
    for v in L:
        for a in range(offsets[v], offsets[v + 1]):
            if heads[a] in R:
                return False
    return True


def separates(g: Graph, t: SeparationTriple) -> bool:
    """Reachability check: removing S leaves no path from L into R."""
    if not valid_triple(g, t):
        return False
    blocked = t.separator
    seen = set(t.left)
    stack = list(t.left)
    heads, offsets = g.heads, g.offsets
    while stack:
        v = stack.pop()
        for a in range(offsets[v], offsets[v + 1]):
            h = heads[a]
            if h in blocked or h in seen:
                continue
            if h in t.right:
                return False
            seen.add(h)
            stack.append(h)
    return True
