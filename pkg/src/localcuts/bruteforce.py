"""Independent reference oracles.

Everything the randomized algorithms claim is checked against these:
exact global edge/vertex cuts by exhaustive pairwise max-flow, exact
local witnesses by subset enumeration, and witness validation by plain
recount.  They are correctness anchors, not fast; they refuse inputs
beyond their limits instead of silently truncating.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import OracleLimitError
from .flownet import FlowNetwork
from .graph import Graph, cut_stats
from .witness import (EdgeCut, SeparationTriple, edge_cut_of, separates,
                      valid_edge_cut, valid_triple)

UNKNOWN = "unknown"


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = 18            # subset enumeration
    max_nm: int = 10 ** 6      # flow-based oracles (n*m)
    max_candidates: int = 18   # local-witness candidate vertices


def _check_flow_limits(g: Graph, limits: OracleLimits):
    if g.n * max(g.m, 1) > limits.max_nm:
        raise OracleLimitError(f"n*m = {g.n * g.m} beyond limit {limits.max_nm}")


def _edge_flow_net(g: Graph) -> FlowNetwork:
    net = FlowNetwork(g.n)
    for t, h in g.arcs():
        if t != h:
            net.add_arc(t, h, 1)
    return net


def bf_min_edge_cut(g: Graph, limits: OracleLimits | None = None,
                    order: str = "bfs") -> tuple[int, EdgeCut]:
    """Exact global minimum edge cut (value, witness).

    min over t of maxflow(s0, t) and maxflow(t, s0) with unit arc
    capacities; the witness side is the residual-reachable set of the
    best direction.
    """
    limits = limits or OracleLimits()
    _check_flow_limits(g, limits)
    if g.n < 2:
        raise OracleLimitError("need at least two vertices")
    net = _edge_flow_net(g)
    best = None
    for t in range(1, g.n):
        for s, t2 in ((0, t), (t, 0)):
            cap = best[0] if best is not None else g.m + 1
            val = net.max_flow(s, t2, cap)
            if val < cap:
                side = frozenset(net.residual_reachable(s))
                best = (val, s, t2, side)
    val, _, _, side = best
    witness = edge_cut_of(g, side)
    assert witness.size == val
    return val, witness


def _split_flow_net(g: Graph, big: int) -> FlowNetwork:
    # v_in = 2v, v_out = 2v+1; split arcs cap 1, base arcs cap `big` so
    # min cuts cross split arcs only.
    net = FlowNetwork(2 * g.n)
    for v in range(g.n):
        net.add_arc(2 * v, 2 * v + 1, 1)
    for t, h in g.arcs():
        if t != h:
            net.add_arc(2 * t + 1, 2 * h, big)
    return net


def _extract_triple(g: Graph, s: int, t: int, net: FlowNetwork) -> SeparationTriple:
    reach = net.residual_reachable(2 * s + 1)
    sep = {v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach}
    left = set()
    stack = [s]
    seen = {s}
    while stack:
        u = stack.pop()
        left.add(u)
        for h in g.out_neighbors(u):
            if h not in sep and h not in seen:
                seen.add(h)
                stack.append(h)
    right = set(range(g.n)) - left - sep
    triple = SeparationTriple(frozenset(left), frozenset(sep), frozenset(right))
    assert t in right and separates(g, triple)
    return triple


def st_max_vertex_flow(g: Graph, s: int, t: int, limit: int,
                       net: FlowNetwork | None = None, order: str = "bfs"):
    """(flow value, triple or None): flow capped at `limit`.

    Returns a validated st-separation triple when the flow value stays
    below the cap; requires (s, t) not adjacent for a meaningful cut.
    """
    if net is None:
        net = _split_flow_net(g, limit + 1)
    val = net.max_flow(2 * s + 1, 2 * t, limit, order)
    if val >= limit:
        return val, None
    return val, _extract_triple(g, s, t, net)


def bf_min_vertex_cut(g: Graph, limits: OracleLimits | None = None,
                      order: str = "bfs") -> tuple[int, SeparationTriple | None]:
    """Exact vertex connectivity (kappa, witness triple).

    Returns (n-1, None) for complete-like graphs with no nonadjacent
    pair.  Pairs are pruned with the standard pivot trick: a minimum cut
    either misses the pivot (some pair (pivot, t) or (t, pivot) sees
    it), or contains it (then some in-neighbor/out-neighbor pair does).
    """
    limits = limits or OracleLimits()
    _check_flow_limits(g, limits)
    n = g.n
    if n < 2:
        raise OracleLimitError("need at least two vertices")
    out_adj = [set(g.out_neighbors(v)) for v in range(n)]
    pivot = min(range(n), key=lambda v: g.out_degree(v) + sum(v in out_adj[u] for u in range(n)))
    candidates: list[tuple[int, int]] = []
    for t in range(n):
        if t != pivot:
            candidates.append((pivot, t))
            candidates.append((t, pivot))
    in_nbrs = [u for u in range(n) if pivot in out_adj[u]]
    out_nbrs = sorted(out_adj[pivot] - {pivot})
    candidates.extend((u, w) for u in in_nbrs for w in out_nbrs if u != w)
    net = _split_flow_net(g, n + 1)
    best_val = n - 1
    best_pair = None
    for s, t in candidates:
        if t in out_adj[s] or s == t:
            continue
        val = net.max_flow(2 * s + 1, 2 * t, best_val)
        if val < best_val:
            best_val = val
            best_pair = (s, t)
    if best_pair is None:
        return n - 1, None
    s, t = best_pair
    net.max_flow(2 * s + 1, 2 * t, best_val + 1)
    triple = _extract_triple(g, s, t, net)
    assert triple.size == best_val
    return best_val, triple


def bf_local_witness(g: Graph, x: int, nu: int, kmax: int | None = None,
                     limits: OracleLimits | None = None):
    """Exact best (cut, vol, S) over S containing x with vol_out(S) <= nu.

    Enumerates subsets of the candidate set {v : deg(v) <= nu - deg(x)}
    (any heavier vertex cannot fit under the volume cap), so it is exact
    whenever the candidate set is small; returns the UNKNOWN marker
    otherwise.  kmax, if given, prunes to cuts below kmax.
    """
    limits = limits or OracleLimits()
    deg_x = g.out_degree(x)
    if deg_x > nu:
        return None
    budget = nu - deg_x
    candidates = [v for v in range(g.n) if v != x and g.out_degree(v) <= budget]
    if len(candidates) > limits.max_candidates:
        return UNKNOWN
    deg = [g.out_degree(v) for v in candidates]
    best = None
    for r in range(len(candidates) + 1):
        for combo in itertools.combinations(range(len(candidates)), r):
            if deg_x + sum(deg[i] for i in combo) > nu:
                continue
            s = {x, *(candidates[i] for i in combo)}
            stats = cut_stats(g, s)
            if kmax is not None and stats.cut_size >= kmax:
                continue
            key = (stats.cut_size, stats.vol_out)
            if best is None or key < (best[0], best[1]):
                best = (stats.cut_size, stats.vol_out, frozenset(s))
    return best


def validate_witness(g: Graph, w) -> bool:
    """Recount a claimed witness directly on the base graph."""
    if isinstance(w, EdgeCut):
        return valid_edge_cut(g, w)
    if isinstance(w, SeparationTriple):
        return valid_triple(g, w) and separates(g, w)
    return False
