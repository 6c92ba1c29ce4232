"""Query-counted incidence-list access.

Algorithms in the query model may only see the graph through
``query(v, i)`` (the i-th out-arc of v); complexity is measured in
queries.  Two models:

* unbounded: ``query(v, i)`` past the end of v's list returns the
  END_OF_LIST symbol;
* bounded d-regular: every vertex pretends to have exactly d out-arcs,
  positions past the real list return a padding self-loop (v, v).

Padding loops are first-class arcs with arithmetic ids (m + v*d + i-1),
so the local engines can mark and coin-flip them like real arcs.
Counters can be shared between oracles (e.g. the forward and reversed
views of one graph) so a tester's budget covers both.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, QueryBudgetExceeded
from .graph import Graph

END_OF_LIST = object()

UNBOUNDED = "unbounded"
BOUNDED_REGULAR = "bounded_regular"


@dataclass(frozen=True)
class Arc:
    arc_id: int
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


class QueryCounter:
    """Monotone query counter with an optional hard cap."""

    __slots__ = ("count", "cap")

    def __init__(self, cap: int | None = None):
        self.count = 0
        self.cap = cap

    def charge(self, amount: int = 1):
        if self.cap is not None and self.count + amount > self.cap:
            raise QueryBudgetExceeded(f"query budget {self.cap} exhausted")
        self.count += amount


class QueryOracle:
    """Incidence-list wrapper over an immutable Graph.

    Single-owner: each local run or tester owns its oracles (counters
    may be shared deliberately).  The underlying graph is shareable.
    """

    def __init__(self, graph: Graph, model: str = UNBOUNDED, d: int | None = None,
                 cap: int | None = None, counter: QueryCounter | None = None):
        if model == BOUNDED_REGULAR:
            if d is None or d < 1:
                raise ParameterError("bounded model needs a degree bound d >= 1")
            if d < max((graph.out_degree(v) for v in range(graph.n)), default=0):
                raise ParameterError("degree bound d below the maximum out-degree")
        elif model != UNBOUNDED:
            raise ParameterError(f"unknown oracle model {model!r}")
        self.graph = graph
        self.model = model
        self.d = d
        self.counter = counter if counter is not None else QueryCounter(cap)

    # ---- structure known without queries ----------------------------------

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m_model(self) -> int:
        """Arc count of the logical graph (n*d under padding)."""
        return self.graph.n * self.d if self.model == BOUNDED_REGULAR else self.graph.m

    @property
    def m_known(self) -> int | None:
        return self.m_model

    @property
    def arc_id_bound(self) -> int:
        if self.model == BOUNDED_REGULAR:
            return self.graph.m + self.graph.n * self.d
        return self.graph.m

    def out_degree(self, v: int) -> int:
        if self.model == BOUNDED_REGULAR:
            return self.d
        return self.graph.out_degree(v)

    def shortcut_eligible(self, v: int) -> bool:
        return True

    # ---- counted access ----------------------------------------------------

    def query(self, v: int, i: int):
        """Public 1-based query; returns an Arc or END_OF_LIST.

        Every call charges the counter exactly once.  In the bounded
        model i must lie in [1, d]; positions past the real out-degree
        answer with the padding self-loop (v, v).
        """
        if i < 1:
            raise ParameterError("query index is 1-based")
        if self.model == BOUNDED_REGULAR and i > self.d:
            raise ParameterError(f"index {i} outside bounded model range d={self.d}")
        self.counter.charge()
        deg = self.graph.out_degree(v)
        if i <= deg:
            a = self.graph.offsets[v] + i - 1
            return Arc(a, v, self.graph.heads[a])
        if self.model == BOUNDED_REGULAR:
            return Arc(self.graph.m + v * self.d + (i - 1), v, v)
        return END_OF_LIST

    def read_arc(self, v: int, j: int) -> tuple[int, int]:
        """0-based counted read of an existing position; (arc_id, head)."""
        arc = self.query(v, j + 1)
        if arc is END_OF_LIST:
            raise ParameterError(f"position {j} past out-degree of {v}")
        return arc.arc_id, arc.head

    def degree_below(self, v: int, k: int) -> bool:
        """One-query probe: is out-degree(v) < k?

        Unbounded model: query(v, k) hits END_OF_LIST iff deg < k.
        Bounded model: a self-loop answer at position k is read as
        padding, which is exact on loop-free base graphs; k > d is
        decided for free.
        """
        if self.model == BOUNDED_REGULAR:
            if k > self.d:
                return True
            arc = self.query(v, k)
            return arc.is_loop
        return self.query(v, k) is END_OF_LIST

    # ---- uncounted access for validation/diagnostics -----------------------

    def snapshot_out(self, v: int) -> list[tuple[int, int]]:
        """Full out-list of v without charging the counter.

        Witness validation and invariant tests only; algorithms must go
        through query/read_arc.
        """
        g = self.graph
        lo, hi = g.offsets[v], g.offsets[v + 1]
        out = [(a, g.heads[a]) for a in range(lo, hi)]
        if self.model == BOUNDED_REGULAR:
            out.extend(
                (g.m + v * self.d + j, v) for j in range(hi - lo, self.d)
            )
        return out


def sample_edge_regular(oracle: QueryOracle, rng) -> Arc:
    """Uniform arc sample in the d-regular padded model.

    Sample a vertex uniformly, then a position uniformly in [1, d];
    every arc of the padded graph (real or padding) comes out with
    probability 1/(n*d).
    """
    if oracle.model != BOUNDED_REGULAR:
        raise ParameterError("edge sampling needs the bounded d-regular model")
    v = rng.randrange(oracle.n)
    i = rng.randrange(oracle.d) + 1
    return oracle.query(v, i)
