"""Global k-vertex connectivity via sampled pairwise and local checks.

One sweep: (a) degree screens catch vertices that are themselves cheap
cuts, (b) for each volume level 2^i up to nu_bar, seeds sampled as arc
tails run the local vertex-cut search on the graph and its reverse,
(c) sampled nonadjacent vertex pairs run a capped Ford-Fulkerson
st-check on the split network.  The first validated cut wins (tasks are
ordered deterministically, so results are seed-deterministic); if a
graph that is not k-connected is given, boosted sweeps find a cut
w.h.p.  Undirected inputs should be sparsified first (min_vertex_cut
does this per k); vertex cuts below the bound survive sparsification.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import constants as C
from .errors import AdjacentPairError, ParameterError
from .flownet import FlowNetwork
from .graph import Graph, cut_stats
from .localec import derived_rng, floor_one_plus_eps, make_rng
from .localvc import local_vc
from .oracle import QueryOracle
from .witness import SeparationTriple, separates, valid_triple


@dataclass
class FrameworkConfig:
    """Tunable sampling parameters.

    sample_factor is the hidden constant in ceil(c * (m/2^i) * ln n)
    sample counts; boost repeats the sweep for w.h.p. detection.
    nu_bar overrides the largest local volume level (default: the
    precondition boundary m*(gap+1)/(8320k)).  pair_cap/seed_cap bound
    the per-category sample counts for feasibility on large inputs
    (None keeps the formula values).
    """

    sample_factor: float = 2.0
    boost: int = 1
    eps: float | None = None
    scheme: str = "edge"  # "edge" | "node"
    seed: int | None = None
    nu_bar: int | None = None
    n_bar: int | None = None
    pair_cap: int | None = None
    seed_cap: int | None = None

    def __post_init__(self):
        if self.sample_factor < 1:
            raise ParameterError("sample_factor must be >= 1")
        if self.boost < 1:
            raise ParameterError("boost must be >= 1")
        if self.scheme not in ("edge", "node"):
            raise ParameterError(f"unknown scheme {self.scheme!r}")


@dataclass
class VcVerdict:
    kind: str  # "connected" | "cut"
    k: int
    witness: SeparationTriple | None = None
    stats: dict = field(default_factory=dict)

    @property
    def is_cut(self) -> bool:
        return self.kind == "cut"


# ---------------------------------------------------------------------------
# Sparse certificate


def undirected_edges(g: Graph) -> list[tuple[int, int]]:
    """Collapse a symmetric arc multiset into undirected edge occurrences."""
    remainder: dict[tuple[int, int], int] = {}
    edges = []
    for t, h in g.arcs():
        key = (h, t) if (h, t) < (t, h) else (t, h)
        c = remainder.get(key, 0)
        if c > 0:
            remainder[key] = c - 1
        else:
            edges.append(key)
            remainder[key] = remainder.get(key, 0) + 1
    if any(c for c in remainder.values()):
        raise ParameterError("arc multiset is not symmetric")
    return edges


def sparsify_ni(g: Graph, k: int) -> Graph:
    """Union of k successive scan-first (BFS) forests.

    Keeps at most k(n-1) undirected edges while preserving
    k-vertex-connectivity and every vertex cut of size below k; a
    subgraph never gains connectivity, and the forest union certifies
    pairwise connectivity up to k.
    """
    if g.directed:
        raise ParameterError("sparsification is defined for undirected graphs")
    edges = undirected_edges(g)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for idx, (u, v) in enumerate(edges):
        adj[u].append((idx, v))
        adj[v].append((idx, u))
    removed = bytearray(len(edges))
    kept: list[tuple[int, int]] = []
    from collections import deque

    for _ in range(k):
        visited = bytearray(g.n)
        found_any = False
        for root in range(g.n):
            if visited[root]:
                continue
            visited[root] = 1
            queue = deque((root,))
            while queue:
                u = queue.popleft()
                for idx, w in adj[u]:
                    if removed[idx] or visited[w]:
                        continue
                    visited[w] = 1
                    removed[idx] = 1
                    kept.append(edges[idx])
                    found_any = True
                    queue.append(w)
        if not found_any:
            break
    pairs = []
    for u, v in kept:
        pairs.append((u, v))
        pairs.append((v, u))
    return Graph(g.n, pairs, directed=False)


# ---------------------------------------------------------------------------
# Pairwise checks


class StVcSolver:
    """Reusable split-network Ford-Fulkerson for st vertex cuts."""

    def __init__(self, g: Graph, big: int | None = None):
        self.g = g
        big = big if big is not None else g.n + 1
        net = FlowNetwork(2 * g.n)
        for v in range(g.n):
            net.add_arc(2 * v, 2 * v + 1, 1)
        for t, h in g.arcs():
            if t != h:
                net.add_arc(2 * t + 1, 2 * h, big)
        self.net = net
        self.out_adj = [set(g.out_neighbors(v)) - {v} for v in range(g.n)]

    def check(self, s: int, t: int, bound: int):
        """(flow, triple|None): triple extracted when flow < bound."""
        if s == t:
            raise ParameterError("s and t must differ")
        if t in self.out_adj[s]:
            raise AdjacentPairError(f"arc ({s},{t}) present; pair inseparable")
        val = self.net.max_flow(2 * s + 1, 2 * t, bound)
        if val >= bound:
            return val, None
        reach = self.net.residual_reachable(2 * s + 1)
        sep = {v for v in range(self.g.n) if 2 * v in reach and 2 * v + 1 not in reach}
        left = set()
        stack = [s]
        seen = {s}
        while stack:
            u = stack.pop()
            left.add(u)
            for h in self.g.out_neighbors(u):
                if h not in sep and h not in seen:
                    seen.add(h)
                    stack.append(h)
        right = set(range(self.g.n)) - left - sep
        triple = SeparationTriple(frozenset(left), frozenset(sep), frozenset(right))
        if t not in right or not separates(self.g, triple):
            raise ParameterError("st cut extraction failed validation")
        return val, triple


def st_vertex_connectivity(g: Graph, s: int, t: int, k: int, eps: float = 0.0,
                           solver: StVcSolver | None = None):
    """Capped unit Ford-Fulkerson on the st split network.

    Returns (value, triple): triple is a validated st-vertex cut when
    value < floor((1+eps)k), else None meaning "at least the bound".
    Exact when eps < 1/k.  Raises AdjacentPairError when the arc (s, t)
    exists.
    """
    bound = floor_one_plus_eps(eps, k)
    solver = solver or StVcSolver(g, bound + 1)
    return solver.check(s, t, bound)


# ---------------------------------------------------------------------------
# Framework sweeps


def _degree_screen(g: Graph, k: int) -> SeparationTriple | None:
    """A vertex with out-degree below k donates its out-neighborhood."""
    for v in range(g.n):
        if g.out_degree(v) < k:
            sep = frozenset(h for h in g.out_neighbors(v) if h != v)
            right = frozenset(range(g.n)) - sep - {v}
            if right:
                triple = SeparationTriple(frozenset((v,)), sep, right)
                if valid_triple(g, triple):
                    return triple
    return None


def _local_levels(m: int, k: int, gap: int, cfg: FrameworkConfig) -> list[int]:
    if cfg.nu_bar is not None:
        nu_bar = cfg.nu_bar
    else:
        nu_bar = (m * (gap + 1) - 1) // (C.VC_PRECONDITION_FACTOR * k)
    levels = []
    lv = 1
    while lv <= nu_bar:
        if lv > k:
            levels.append(lv)
        lv *= 2
    return levels


def _node_scheme_nu(n_bar: int, k: int, m: int, gap: int) -> int:
    nu = n_bar * n_bar + n_bar * k
    boundary = (m * (gap + 1) - 1) // (C.VC_PRECONDITION_FACTOR * k)
    return max(k + 1, min(nu, boundary)) if boundary > k else 0


def _sampled_pairs(g: Graph, count: int, out_adj, rng):
    """Distinct nonadjacent ordered pairs: enumerated when count covers
    all ordered pairs (a saturated sweep is deterministic), else sampled
    as tails of independent uniform arcs with adjacent pairs resampled."""
    n, m = g.n, g.m
    if count >= n * (n - 1):
        for s in range(n):
            for t in range(n):
                if s != t and t not in out_adj[s]:
                    yield s, t
        return
    seen = set()
    attempts = 0
    limit = 30 * count + 200
    tails = g.tails
    while len(seen) < count and attempts < limit:
        attempts += 1
        s = tails[rng.randrange(m)]
        t = tails[rng.randrange(m)]
        if s == t or (s, t) in seen or t in out_adj[s]:
            continue
        seen.add((s, t))
        yield s, t


def _sweep(g: Graph, k: int, gap: int, bound: int, cfg: FrameworkConfig,
           rng, directed: bool, solver: StVcSolver, stats: dict):
    n, m = g.n, g.m
    if m == 0:
        return None
    ln_n = math.log(max(n, 2))
    grev = g.reverse() if directed else g
    oracles = [(g, QueryOracle(g), False)]
    if directed:
        oracles.append((grev, QueryOracle(grev), True))
    # Small-side case: local runs per volume level, cheapest first.
    if cfg.scheme == "node":
        n_bar = cfg.n_bar or max(1, math.isqrt(max(m // max(k, 1), 1)))
        nu = _node_scheme_nu(n_bar, k, m, gap)
        levels = [nu] if nu else []
        seed_counts = [math.ceil(cfg.sample_factor * (n / max(n_bar, 1)) * ln_n)]
    else:
        levels = _local_levels(m, k, gap, cfg)
        seed_counts = [math.ceil(cfg.sample_factor * (m / lv) * ln_n) for lv in levels]
    for lv, cnt in zip(levels, seed_counts):
        if cfg.seed_cap is not None:
            cnt = min(cnt, cfg.seed_cap)
        for dgraph, oracle, swapped in oracles:
            for j in range(cnt):
                if cfg.scheme == "node":
                    x = rng.randrange(n)
                else:
                    x = dgraph.tails[rng.randrange(m)]
                res = local_vc(oracle, x, lv, k, gap, rng=rng,
                               degenerate_as_bottom=True)
                stats["local_runs"] = stats.get("local_runs", 0) + 1
                stats["local_queries"] = stats.get("local_queries", 0) + res.queries
                if res.is_found:
                    triple = res.witness.swapped() if swapped else res.witness
                    if valid_triple(g, triple) and triple.size < bound:
                        return triple
    # Large-side case: sampled pairwise Ford-Fulkerson checks.
    nu_bar_eff = max(levels[-1] if levels else 1, 1)
    pcnt = math.ceil(cfg.sample_factor * (m / nu_bar_eff) * ln_n)
    if cfg.pair_cap is not None:
        pcnt = min(pcnt, cfg.pair_cap)
    if pcnt >= n * (n - 1) and not levels:
        stats["saturated"] = True  # all-pairs sweep is deterministic
    pcnt = min(pcnt, n * (n - 1))
    for s, t in _sampled_pairs(g, pcnt, solver.out_adj, rng):
        stats["pair_checks"] = stats.get("pair_checks", 0) + 1
        _, triple = solver.check(s, t, bound)
        if triple is not None and triple.size < bound:
            return triple
    return None


def _check_common(g: Graph, k: int, eps: float | None, cfg: FrameworkConfig | None,
                  directed: bool) -> VcVerdict:
    cfg = cfg or FrameworkConfig()
    if k < 1:
        raise ParameterError("k must be >= 1")
    if g.n < 2:
        raise ParameterError("need at least two vertices")
    if eps is None:
        eps = cfg.eps if cfg.eps is not None else 1.0 / (2 * k)
    gap = math.floor(eps * k + 1e-12)
    bound = floor_one_plus_eps(eps, k)
    stats: dict = {"eps": eps, "bound": bound}
    # Degenerate screens: cheap cuts from low-degree vertices.
    screen = _degree_screen(g, k)
    if screen is not None:
        stats["screen"] = "out_degree"
        return VcVerdict("cut", k, screen, stats)
    if directed:
        screen = _degree_screen(g.reverse(), k)
        if screen is not None:
            stats["screen"] = "in_degree"
            return VcVerdict("cut", k, screen.swapped(), stats)
    solver = StVcSolver(g, bound + 1)
    fallback = not k < g.n / 4
    rng = make_rng(cfg.seed)
    for round_idx in range(cfg.boost):
        round_rng = derived_rng(cfg.seed, "vc", round_idx)
        if fallback:
            triple = _fallback_pairwise(g, bound, cfg, round_rng, solver, stats)
        else:
            triple = _sweep(g, k, gap, bound, cfg, round_rng, directed, solver, stats)
        if triple is not None:
            if not (valid_triple(g, triple) and separates(g, triple)):
                raise ParameterError("sweep produced an invalid cut")
            stats["boost_rounds_used"] = round_idx + 1
            return VcVerdict("cut", k, triple, stats)
        if stats.get("saturated"):
            break
    stats["boost_rounds_used"] = cfg.boost
    return VcVerdict("connected", k, None, stats)


_FALLBACK_SATURATE = 6000


def _fallback_pairwise(g: Graph, bound: int, cfg: FrameworkConfig, rng,
                       solver: StVcSolver, stats: dict):
    """k >= n/4 mode (no local runs): all nonadjacent ordered pairs when
    the graph is small enough for that to be cheap (deterministic),
    otherwise sampled pairs plus the min-degree pivot's in/out
    neighborhood pairs."""
    n = g.n
    stats["fallback"] = True
    if n * (n - 1) <= _FALLBACK_SATURATE:
        stats["saturated"] = True
        pairs = ((s, t) for s in range(n) for t in range(n)
                 if s != t and t not in solver.out_adj[s])
    else:
        pcnt = math.ceil(cfg.sample_factor * math.log(max(n, 2))) + 8
        sampled = list(_sampled_pairs(g, min(pcnt, n * (n - 1)), solver.out_adj, rng))
        pivot = min(range(n), key=g.out_degree)
        in_nbrs = [u for u in range(n) if pivot in solver.out_adj[u]]
        for u in in_nbrs:
            for w in sorted(solver.out_adj[pivot]):
                if u != w and w not in solver.out_adj[u]:
                    sampled.append((u, w))
        pairs = iter(sampled)
    for s, t in pairs:
        stats["pair_checks"] = stats.get("pair_checks", 0) + 1
        _, triple = solver.check(s, t, bound)
        if triple is not None and triple.size < bound:
            return triple
    return None


def vc_check(g: Graph, k: int, eps: float | None = None,
             cfg: FrameworkConfig | None = None) -> VcVerdict:
    """Decide k-connectivity of an undirected (symmetric) graph.

    Inputs should be pre-sparsified (see sparsify_ni / min_vertex_cut).
    Emitted cuts are always validated; Connected verdicts hold w.h.p.
    under boosting.
    """
    return _check_common(g, k, eps, cfg, directed=False)


def vc_check_directed(g: Graph, k: int, eps: float | None = None,
                      cfg: FrameworkConfig | None = None) -> VcVerdict:
    """Directed variant: same pipeline, no sparsification, both directions."""
    return _check_common(g, k, eps, cfg, directed=True)


# ---------------------------------------------------------------------------
# Minimum vertex cut by doubling + binary refinement


@dataclass
class MinVcResult:
    kappa: int | None
    witness: SeparationTriple | None
    cap_reached: bool
    checks: list = field(default_factory=list)


def _revalidate_on(g: Graph, triple: SeparationTriple, bound: int):
    """Re-derive a cut found on a sparsified certificate on the original.

    A certificate cut names sides whose pairs are no better connected in
    the original; one nonadjacent (u, v) across the sides yields a cut
    of no larger size there.
    """
    if valid_triple(g, triple) and separates(g, triple):
        return triple
    solver = StVcSolver(g, bound + 1)
    for u in sorted(triple.left):
        for v in sorted(triple.right):
            if u != v and v not in solver.out_adj[u]:
                _, fresh = solver.check(u, v, bound)
                if fresh is not None:
                    return fresh
                return None
    return None


def min_vertex_cut(g: Graph, eps: float | None = None,
                   cfg: FrameworkConfig | None = None) -> MinVcResult:
    """Doubling search over k with binary refinement.

    With eps < 1/k throughout (the default), returns the exact
    connectivity and a witness w.h.p.  Beyond k = n/4 the checks run in
    the pairwise-only fallback; graphs with no nonadjacent pair at all
    have no separation triple and report kappa = n-1 with the
    cap_reached flag.
    """
    cfg = cfg or FrameworkConfig()
    check = vc_check_directed if g.directed else vc_check
    checks: list = []
    if all(len(set(g.out_neighbors(v)) - {v}) >= g.n - 1 for v in range(g.n)):
        return MinVcResult(g.n - 1, None, True, [("complete", g.n - 1)])
    cap = max(1, g.n - 1)

    def run(k: int) -> VcVerdict:
        eps_k = eps if eps is not None else 1.0 / (2 * k)
        target = g
        if not g.directed:
            target = sparsify_ni(g, floor_one_plus_eps(eps_k, k))
        verdict = check(target, k, eps_k, cfg)
        if verdict.is_cut and target is not g:
            fresh = _revalidate_on(g, verdict.witness, verdict.stats["bound"])
            if fresh is None:
                verdict = VcVerdict("connected", k, None, verdict.stats)
            else:
                verdict = VcVerdict("cut", k, fresh, verdict.stats)
        checks.append((k, verdict.kind))
        return verdict

    k = 1
    last_conn = 0
    first_cut = None
    while True:
        verdict = run(k)
        if verdict.is_cut:
            first_cut = (k, verdict.witness)
            break
        last_conn = k
        if k >= cap:
            break
        k = min(k * 2, cap)
    if first_cut is None:
        return MinVcResult(cap, None, True, checks)
    lo, hi = last_conn, first_cut[0]
    witness = first_cut[1]
    while hi - lo > 1:
        mid = (lo + hi) // 2
        verdict = run(mid)
        if verdict.is_cut:
            hi = mid
            witness = verdict.witness
        else:
            lo = mid
    return MinVcResult(len(witness.separator), witness, False, checks)
