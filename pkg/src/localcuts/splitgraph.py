"""On-the-fly split graph for vertex-capacitated searches.

The split graph w.r.t. a root x maps every vertex v != x to a pair
(v_in, v_out) joined by one arc, keeps x as a single merged vertex, and
turns each base arc (u, v) into (u_out, v_in).  It has 2n-1 vertices
and m+n-1 arcs.  Nothing is materialized: vertex ids are arithmetic
(v_in = 2v, v_out = 2v+1, x merged as 2x) and each view read costs at
most one counted base read.

An edge cut L' (containing x) of the split graph projects back to a
separation triple of the base graph with separator at most the split
cut and volume at most twice the split volume, and conversely a triple
lifts to a split set whose cut equals the separator exactly.
"""
from __future__ import annotations

from .errors import LocalCutsError, ParameterError, ProjectionDegenerateError
from .graph import Graph
from .witness import SeparationTriple


class SplitView:
    """Oracle-compatible incidence view of the split graph w.r.t. x.

    Wraps a QueryOracle; counted reads delegate 1:1 to the base oracle
    for (u_out, v_in) arcs, while the structural (v_in, v_out) arcs are
    answered arithmetically for free.  view_reads tracks view-level arc
    reads for the accounting invariant (view reads <= 2x what a
    materialized split graph would charge).
    """

    __slots__ = ("base", "x", "_split_offset", "view_reads")

    def __init__(self, oracle, x: int):
        if oracle.n < 2:
            raise ParameterError("split view needs at least two vertices")
        if not 0 <= x < oracle.n:
            raise ParameterError(f"root {x} out of range")
        if oracle.model == "unbounded" and oracle.graph.min_out_degree < 1:
            raise ParameterError("split view requires minimum out-degree >= 1")
        self.base = oracle
        self.x = x
        self._split_offset = oracle.arc_id_bound
        self.view_reads = 0

    # ---- vertex-id arithmetic ----------------------------------------------

    def in_id(self, v: int) -> int:
        return 2 * v

    def out_id(self, v: int) -> int:
        return 2 * v if v == self.x else 2 * v + 1

    def base_vertex(self, w: int) -> int:
        return w >> 1

    def is_out_role(self, w: int) -> bool:
        return bool(w & 1) or w == 2 * self.x

    # ---- oracle interface ----------------------------------------------------

    @property
    def n(self) -> int:
        return 2 * self.base.n - 1

    @property
    def m_model(self) -> int:
        return self.base.m_model + self.base.n - 1

    @property
    def counter(self):
        return self.base.counter

    @property
    def arc_id_bound(self) -> int:
        return self._split_offset + self.base.n

    def out_degree(self, w: int) -> int:
        if self.is_out_role(w):
            return self.base.out_degree(w >> 1)
        return 1

    def shortcut_eligible(self, w: int) -> bool:
        # An in-role singleton has split cut 1 but projects to an empty
        # left side; only out-role singletons match the back-projection.
        return self.is_out_role(w)

    def read_arc(self, w: int, j: int) -> tuple[int, int]:
        self.view_reads += 1
        if self.is_out_role(w):
            aid, h = self.base.read_arc(w >> 1, j)
            return aid, 2 * h
        if j != 0:
            raise ParameterError(f"in-role vertex {w} has a single out-arc")
        v = w >> 1
        return self._split_offset + v, 2 * v + 1

    def snapshot_out(self, w: int) -> list[tuple[int, int]]:
        if self.is_out_role(w):
            return [(aid, 2 * h) for aid, h in self.base.snapshot_out(w >> 1)]
        v = w >> 1
        return [(self._split_offset + v, 2 * v + 1)]

    def all_vertices(self):
        x2 = 2 * self.x
        for v in range(self.base.n):
            yield 2 * v
            if 2 * v != x2:
                yield 2 * v + 1


def split_view(oracle, x: int) -> SplitView:
    return SplitView(oracle, x)


def _singleton_triple(g: Graph, v: int, n: int) -> SeparationTriple:
    sep = frozenset(h for h in g.out_neighbors(v) if h != v)
    right = frozenset(range(n)) - sep - {v}
    if not right:
        raise ProjectionDegenerateError(f"N_out({v}) covers every other vertex")
    return SeparationTriple(frozenset((v,)), sep, right)


def project_cut(view: SplitView, lp) -> SeparationTriple:
    """Back-project a split-graph edge cut to a separation triple.

    Constructive: if some out-role vertex in lp has out-degree at most
    the split cut, its base vertex is returned as a singleton left side;
    otherwise the crossing arcs ending at in-role vertices name the set
    S2, lp is closed with their in-copies, and the left side is every
    base vertex with both copies inside the closure.  The separator size
    never exceeds the split cut, and the base volume of the left side is
    at most twice the split volume of lp.
    """
    lp = set(lp)
    x2 = 2 * view.x
    if x2 not in lp:
        raise ParameterError("projected set must contain the root")
    crossing_heads = []
    for w in sorted(lp):
        for _, h in view.snapshot_out(w):
            if h not in lp:
                crossing_heads.append(h)
    c = len(crossing_heads)
    g = view.base.graph
    n = view.base.n
    for w in sorted(lp):
        if view.is_out_role(w) and view.out_degree(w) <= c:
            return _singleton_triple(g, w >> 1, n)
    s2 = {h >> 1 for h in crossing_heads if not (h & 1)}
    l0 = lp | {2 * u for u in s2}
    x = view.x
    left = {w >> 1 for w in l0
            if not (w & 1) and (w == x2 or (w | 1) in l0)}
    sep = set()
    for v in left:
        for h in g.out_neighbors(v):
            if h not in left:
                sep.add(h)
    right = set(range(n)) - left - sep
    if not left or x not in left:
        raise LocalCutsError("projection lost the root from the left side")
    if len(sep) > c:
        raise LocalCutsError(f"projected separator {len(sep)} exceeds split cut {c}")
    if not right:
        raise ProjectionDegenerateError(
            "projection produced an empty right side (volume precondition violated)"
        )
    return SeparationTriple(frozenset(left), frozenset(sep), frozenset(right))


def lift_triple(g: Graph, t: SeparationTriple, x: int) -> frozenset:
    """Lift a separation triple with S = N_out(L) to a split-graph set.

    Returns L' = in/out copies of L plus in-copies of S; asserts the
    lemma's postconditions (split cut equals |S| exactly, and the volume
    sandwich vol(L) <= vol'(L') <= 2 vol(L)).
    """
    if x not in t.left:
        raise ParameterError("root must lie in the left side")
    expected_sep = set()
    vol_l = 0
    for v in t.left:
        vol_l += g.out_degree(v)
        for h in g.out_neighbors(v):
            if h not in t.left:
                expected_sep.add(h)
    if expected_sep != set(t.separator):
        raise ParameterError("triple separator must equal N_out(L) exactly")
    lifted = {2 * x}
    for v in t.left:
        if v != x:
            lifted.add(2 * v)
            lifted.add(2 * v + 1)
    for v in t.separator:
        lifted.add(2 * v)
    from .oracle import QueryOracle

    view = SplitView(QueryOracle(g), x)
    cut = 0
    vol = 0
    for w in lifted:
        for _, h in view.snapshot_out(w):
            vol += 1
            if h not in lifted:
                cut += 1
    if cut != len(t.separator):
        raise LocalCutsError(f"lifted cut {cut} != separator size {len(t.separator)}")
    if not vol_l <= vol <= 2 * vol_l:
        raise LocalCutsError(f"volume sandwich violated: {vol_l} <= {vol} <= {2 * vol_l}")
    return frozenset(lifted)
