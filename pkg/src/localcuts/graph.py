"""Immutable directed multigraph in CSR-like adjacency-list form.

Arcs get stable integer ids: arc id ``a`` is a position into the global
``heads``/``tails`` arrays, and the out-arcs of vertex ``v`` are the id
range ``offsets[v]:offsets[v+1]``.  Stable ids let the per-run reversal
overlay record flips and marks as plain id sets without ever mutating
the base graph.

Undirected graphs are stored as symmetric arc pairs and every algorithm
operates on the directed view.  Parallel arcs and self-loops are
permitted everywhere; a self-loop contributes 1 to out-degree and
volume and never to a cut.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphFormatError


class Graph:
    """Immutable directed multigraph with positional arc ids."""

    __slots__ = ("n", "directed", "offsets", "heads", "tails", "_min_out_deg", "_rev")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]], directed: bool = True):
        pairs = list(arcs)
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"arc ({u},{v}) out of range for n={n}")
        # Counting sort by tail keeps per-vertex arc order equal to input
        # order, so construction is reproducible byte-for-byte.
        counts = [0] * (n + 1)
        for u, _ in pairs:
            counts[u + 1] += 1
        offsets = counts
        for i in range(1, n + 1):
            offsets[i] += offsets[i - 1]
        m = len(pairs)
        heads = [0] * m
        tails = [0] * m
        cursor = offsets[:-1].copy() if n else []
        for u, v in pairs:
            pos = cursor[u]
            cursor[u] = pos + 1
            heads[pos] = v
            tails[pos] = u
        self.n = n
        self.directed = directed
        self.offsets = offsets
        self.heads = heads
        self.tails = tails
        self._min_out_deg = min((offsets[v + 1] - offsets[v] for v in range(n)), default=0)
        self._rev = None

    # ---- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.heads)

    def out_degree(self, v: int) -> int:
        return self.offsets[v + 1] - self.offsets[v]

    @property
    def min_out_degree(self) -> int:
        return self._min_out_deg

    def out_arc_ids(self, v: int) -> range:
        return range(self.offsets[v], self.offsets[v + 1])

    def out_neighbors(self, v: int) -> Sequence[int]:
        return self.heads[self.offsets[v] : self.offsets[v + 1]]

    def arcs(self) -> Iterable[tuple[int, int]]:
        return zip(self.tails, self.heads)

    def has_self_loops(self) -> bool:
        return any(t == h for t, h in zip(self.tails, self.heads))

    def is_symmetric(self) -> bool:
        """True if the arc multiset equals its own reverse."""
        fwd: dict[tuple[int, int], int] = {}
        for t, h in zip(self.tails, self.heads):
            fwd[(t, h)] = fwd.get((t, h), 0) + 1
        for (t, h), c in fwd.items():
            if fwd.get((h, t), 0) != c:
                return False
        return True

    def reverse(self) -> "Graph":
        """Graph with every arc flipped; cached, reverse(reverse(g)) is g-equal."""
        if self._rev is None:
            rev = Graph(self.n, list(zip(self.heads, self.tails)), self.directed)
            rev._rev = self
            self._rev = rev
        return self._rev

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"

    # ---- text format -----------------------------------------------------

    def to_edge_list(self) -> str:
        """Whitespace edge-list document with an `n m` header.

        Undirected graphs emit each symmetric pair once (lower arc id of
        the pair), so load_graph(text, directed=False) round-trips.
        """
        lines = [f"{self.n} {self.m if self.directed else self.m // 2}"]
        if self.directed:
            lines.extend(f"{t} {h}" for t, h in zip(self.tails, self.heads))
        else:
            seen: dict[tuple[int, int], int] = {}
            for t, h in zip(self.tails, self.heads):
                key = (h, t) if (h, t) < (t, h) else (t, h)
                c = seen.get(key, 0)
                if c > 0:
                    seen[key] = c - 1
                else:
                    lines.append(f"{t} {h}")
                    seen[key] = seen.get(key, 0) + 1
        return "\n".join(lines) + "\n"


def load_graph(text: str, directed: bool = True) -> Graph:
    """Parse a whitespace edge-list document.

    Lines are `u v`; an optional first line `n m` declares the vertex
    count.  The first line is read as a header exactly when n >= 1 and m
    equals the number of remaining data lines (ambiguous inputs where an
    edge happens to satisfy that are read as headered).  Undirected
    input doubles each line into two arcs; duplicate lines are preserved
    as parallel arcs.
    """
    rows: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected two fields, got {len(fields)}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"non-integer fields {fields!r}", line=lineno) from None
        if a < 0 or b < 0:
            raise GraphFormatError("negative vertex id", line=lineno)
        rows.append((a, b))
    if not rows:
        return Graph(0, [], directed)
    declared_n = None
    pairs = rows
    if rows[0][0] >= 1 and rows[0][1] == len(rows) - 1:
        declared_n = rows[0][0]
        pairs = rows[1:]
    if declared_n is not None:
        for u, v in pairs:
            if u >= declared_n or v >= declared_n:
                raise GraphFormatError(f"vertex id {max(u, v)} >= declared n={declared_n}")
        n = declared_n
    else:
        n = 1 + max((max(u, v) for u, v in pairs), default=-1)
    if not directed:
        doubled = []
        for u, v in pairs:
            doubled.append((u, v))
            doubled.append((v, u))
        pairs = doubled
    return Graph(n, pairs, directed)


def reverse_graph(g: Graph) -> Graph:
    return g.reverse()


@dataclass(frozen=True)
class CutStats:
    cut_size: int
    vol_out: int
    n_out: frozenset


def cut_stats(g: Graph, s: Iterable[int]) -> CutStats:
    """|E(S, V-S)|, out-volume of S, and the out-neighbor set of S.

    Self-loops count toward the volume but never toward the cut or the
    neighbor set.  Empty S yields zeros.
    """
    sset = s if isinstance(s, (set, frozenset)) else set(s)
    cut = 0
    vol = 0
    n_out = set()
    heads = g.heads
    offsets = g.offsets
    for v in sset:
        lo, hi = offsets[v], offsets[v + 1]
        vol += hi - lo
        for a in range(lo, hi):
            h = heads[a]
            if h not in sset:
                cut += 1
                n_out.add(h)
    return CutStats(cut, vol, frozenset(n_out))
