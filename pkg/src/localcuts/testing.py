"""One-sided sublinear testers for k-edge and k-vertex connectivity.

Four testers (edge/vertex x unbounded/bounded incidence model).  Each
samples degree probes and seed vertices (or arcs, in the bounded
d-regular model), runs the gap-parameterized local searches over a
doubling grid of (volume, gap) classes on the graph and its reverse,
and rejects only with a validated witness of size below k, so a
k-connected input is never rejected.  On inputs that are eps-far from
k-connectivity, some grid cell dominates a deficient set's (volume,
deficiency) class and the local search finds it with constant
probability.

Query accounting is strict: both directions share one counter, a hard
cap derived from the configuration is installed up front, and hitting
it raises instead of accepting.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import constants as C
from .errors import ParameterError, ProjectionDegenerateError
from .graph import Graph
from .localec import LocalResult, local_ec, make_rng
from .localvc import local_vc
from .oracle import BOUNDED_REGULAR, UNBOUNDED, QueryCounter, QueryOracle, sample_edge_regular
from .witness import SeparationTriple, edge_cut_of, separates, valid_triple


@dataclass
class TesterConfig:
    """Tester parameters; c1/c2 are the degree-probe and seed-sample
    constants left implicit by the union-bound analysis."""

    k: int
    eps: float
    model: str = UNBOUNDED
    dbar: float | None = None      # average degree, when known (unbounded)
    d: int | None = None           # degree bound (bounded model)
    simple_graph: bool = False
    c1: int = 8
    c2: int = 12
    seed: int | None = None
    enforce_cap: bool = True
    cap_override: int | None = None

    def __post_init__(self):
        if not 0 < self.eps < 1:
            raise ParameterError("eps must be in (0, 1)")
        if self.k < 1:
            raise ParameterError("k must be >= 1")
        if self.model not in (UNBOUNDED, BOUNDED_REGULAR):
            raise ParameterError(f"unknown model {self.model!r}")
        if self.model == BOUNDED_REGULAR and (self.d is None or self.d < 1):
            raise ParameterError("bounded model needs d >= 1")

    # ---- grid geometry -----------------------------------------------------

    @property
    def log_k1(self) -> int:
        return int(math.log2(self.k)) + 1 if self.k > 1 else 1

    def degree_samples(self) -> int:
        cnt = math.ceil(self.c1 / self.eps)
        if self.model == UNBOUNDED and self.dbar:
            cnt += math.ceil(self.c1 * self.k * self.log_k1 / (self.eps * self.dbar))
        return cnt

    def seed_samples(self) -> int:
        if self.model == UNBOUNDED and self.dbar:
            return math.ceil(self.c2 * self.k * self.log_k1 / (self.eps * self.dbar))
        return math.ceil(self.c2 * self.log_k1 / self.eps)

    def nu_for(self, i: int, vertex: bool) -> int:
        shift = 3 if vertex else 2
        return math.ceil((1 << (i + shift)) * self.log_k1 / self.eps)

    def unbounded_grid(self):
        """[(i, gap, nu)] for i in 0..floor(log2 k)."""
        return [(i, (1 << i) - 1, None) for i in range(self.log_k1)]

    def bounded_grid(self, vertex: bool):
        """[(i, j, gap, nu, samples)] cells; nu < gap+1 cells are vacuous
        in the d-regular model (every set has volume >= d >= k) and skipped."""
        cells = []
        for i in range(self.log_k1):
            gap = (1 << i) - 1
            eta = self.nu_for(i, vertex)
            log_eta1 = int(math.log2(eta)) + 1 if eta > 1 else 1
            for j in range(log_eta1):
                nu = 1 << (j + 1)
                if nu < gap + 1:
                    continue
                samples = math.ceil(
                    self.c2 * self.log_k1 * log_eta1 * (1 << i) / (self.eps * (1 << j))
                )
                cells.append((i, j, gap, nu, samples))
        return cells

    def simple_fast_path(self) -> bool:
        return self.simple_graph and self.eps > 4 / self.k

    # ---- query budget --------------------------------------------------------

    def query_cap(self, vertex: bool) -> int:
        """Worst-case query total, fixed before the run.

        Per local call the engine charges at most its mark cap (one
        query per first-read arc); vertex runs double the volume through
        the split view.  Degree probes and arc samples cost one each.
        """
        if self.cap_override is not None:
            return self.cap_override
        total = self.degree_samples()
        if self.simple_fast_path():
            return total
        factor = 2 if vertex else 1
        if self.model == UNBOUNDED:
            seeds = self.seed_samples()
            per_seed = 0
            for i, gap, _ in self.unbounded_grid():
                nu = self.nu_for(i, vertex)
                kp = self.k - gap
                per_seed += 2 * (-(-C.MARK_CAP_FACTOR * factor * nu * kp // (gap + 1)) + 2)
            total += seeds * per_seed
        else:
            for i, j, gap, nu, samples in self.bounded_grid(vertex):
                kp = self.k - gap
                per_call = -(-C.MARK_CAP_FACTOR * factor * nu * kp // (gap + 1)) + 2
                total += samples * (1 + 2 * per_call)
        return total


@dataclass
class TestVerdict:
    accept: bool
    witness: object | None = None
    witness_graph: str = "forward"  # orientation the witness refers to
    queries: int = 0
    details: dict = field(default_factory=dict)

    def describe(self):
        out = {"verdict": "accept" if self.accept else "reject",
               "queries": self.queries}
        if self.witness is not None:
            out["witness"] = self.witness.describe()
            out["witness_graph"] = self.witness_graph
        return out


# ---------------------------------------------------------------------------
# Gap adapters


def gap_local_ec(oracle, x: int, nu: int, k: int, gap: int, rng=None) -> LocalResult:
    """Edge-cut adapter: any returned cut has size below k; if some S
    containing x has volume <= nu and cut below k-gap, one is found with
    probability >= 3/4."""
    if not 0 <= gap < k:
        raise ParameterError(f"gap must lie in [0, k), got {gap}")
    return local_ec(oracle, x, nu, k - gap, gap, rng, strict=False)


def gap_local_vc(oracle, x: int, nu: int, k: int, gap: int, rng=None) -> LocalResult:
    """Vertex-cut adapter; degenerate projections count as bottom since
    query-model callers cannot verify the volume precondition."""
    if not 0 <= gap < k:
        raise ParameterError(f"gap must lie in [0, k), got {gap}")
    return local_vc(oracle, x, nu, k - gap, gap, rng, strict=False,
                    degenerate_as_bottom=True)


# ---------------------------------------------------------------------------
# Shared tester machinery


def _oracle_pair(oracle: QueryOracle, cfg: TesterConfig):
    rev = QueryOracle(oracle.graph.reverse(), model=oracle.model, d=oracle.d,
                      counter=oracle.counter)
    return oracle, rev


def _install_cap(oracle: QueryOracle, cfg: TesterConfig, vertex: bool) -> int | None:
    if not cfg.enforce_cap:
        return None
    cap = oracle.counter.count + cfg.query_cap(vertex)
    oracle.counter.cap = cap
    return cap


def _vertex_singleton(g: Graph, v: int) -> SeparationTriple | None:
    sep = frozenset(h for h in g.out_neighbors(v) if h != v)
    right = frozenset(range(g.n)) - sep - {v}
    if not right:
        return None
    return SeparationTriple(frozenset((v,)), sep, right)


def _degree_step(fwd: QueryOracle, cfg: TesterConfig, rng, vertex: bool):
    """Steps 1-2: probe degrees of uniform vertices; a vertex of
    out-degree below k is itself a witness."""
    k = cfg.k
    g = fwd.graph
    for _ in range(cfg.degree_samples()):
        v = rng.randrange(fwd.n)
        if fwd.degree_below(v, k):
            if vertex:
                t = _vertex_singleton(g, v)
                if t is not None and t.size < k and separates(g, t):
                    return t
            else:
                w = edge_cut_of(g, (v,))
                if w.size < k:
                    return w
    return None


def _finish(accept: bool, witness, graph_tag: str, counter: QueryCounter,
            start: int, details: dict) -> TestVerdict:
    return TestVerdict(accept, witness, graph_tag,
                       queries=counter.count - start, details=details)


def _run_unbounded(oracle: QueryOracle, cfg: TesterConfig, vertex: bool) -> TestVerdict:
    if oracle.model != UNBOUNDED:
        raise ParameterError("tester expects the unbounded model")
    if vertex and not cfg.k < oracle.n / 4:
        raise ParameterError("vertex testers need k < n/4")
    rng = make_rng(cfg.seed)
    start = oracle.counter.count
    cap = _install_cap(oracle, cfg, vertex)
    details = {"model": "unbounded", "kind": "kvc" if vertex else "kec",
               "cap": cap, "log_k1": cfg.log_k1}
    fwd, rev = _oracle_pair(oracle, cfg)
    hit = _degree_step(fwd, cfg, rng, vertex)
    if hit is not None:
        details["step"] = "degree"
        return _finish(False, hit, "forward", oracle.counter, start, details)
    if cfg.simple_fast_path():
        details["step"] = "simple_fast_path"
        return _finish(True, None, "forward", oracle.counter, start, details)
    runner = gap_local_vc if vertex else gap_local_ec
    seeds = cfg.seed_samples()
    details["seeds"] = seeds
    for s_idx in range(seeds):
        x = rng.randrange(oracle.n)
        for i, gap, _ in cfg.unbounded_grid():
            nu = cfg.nu_for(i, vertex)
            for tag, o in (("forward", fwd), ("reverse", rev)):
                res = runner(o, x, nu, cfg.k, gap, rng)
                if res.is_found:
                    details["step"] = f"grid(i={i})"
                    w, tag = _orient(res.witness, tag, vertex)
                    return _finish(False, w, tag, oracle.counter, start, details)
    details["step"] = "exhausted"
    return _finish(True, None, "forward", oracle.counter, start, details)


def _orient(witness, tag: str, vertex: bool):
    # Vertex cuts are orientation-symmetric: re-express reverse-graph
    # triples in the forward graph.  Edge cuts keep their orientation tag.
    if vertex and tag == "reverse":
        return witness.swapped(), "forward"
    return witness, tag


def _run_bounded(oracle: QueryOracle, cfg: TesterConfig, vertex: bool) -> TestVerdict:
    if oracle.model != BOUNDED_REGULAR:
        raise ParameterError("tester expects the bounded d-regular model")
    if oracle.d != cfg.d:
        raise ParameterError("oracle degree bound differs from config")
    if vertex and not cfg.k < oracle.n / 4:
        raise ParameterError("vertex testers need k < n/4")
    rng = make_rng(cfg.seed)
    start = oracle.counter.count
    cap = _install_cap(oracle, cfg, vertex)
    details = {"model": "bounded", "kind": "kvc" if vertex else "kec",
               "cap": cap, "d": cfg.d}
    fwd, rev = _oracle_pair(oracle, cfg)
    hit = _degree_step(fwd, cfg, rng, vertex)
    if hit is not None:
        details["step"] = "degree"
        return _finish(False, hit, "forward", oracle.counter, start, details)
    if cfg.simple_fast_path():
        details["step"] = "simple_fast_path"
        return _finish(True, None, "forward", oracle.counter, start, details)
    runner = gap_local_vc if vertex else gap_local_ec
    for i, j, gap, nu, samples in cfg.bounded_grid(vertex):
        for _ in range(samples):
            arc = sample_edge_regular(fwd, rng)
            for tag, o, x in (("forward", fwd, arc.tail), ("reverse", rev, arc.head)):
                res = runner(o, x, nu, cfg.k, gap, rng)
                if res.is_found:
                    details["step"] = f"grid(i={i},j={j})"
                    w, tag = _orient(res.witness, tag, vertex)
                    return _finish(False, w, tag, oracle.counter, start, details)
    details["step"] = "exhausted"
    return _finish(True, None, "forward", oracle.counter, start, details)


# ---------------------------------------------------------------------------
# Public testers


def test_kec_unbounded(oracle: QueryOracle, cfg: TesterConfig) -> TestVerdict:
    """k-edge-connectivity, unbounded incidence model."""
    return _run_unbounded(oracle, cfg, vertex=False)


def test_kvc_unbounded(oracle: QueryOracle, cfg: TesterConfig) -> TestVerdict:
    """k-vertex-connectivity, unbounded incidence model (k < n/4)."""
    return _run_unbounded(oracle, cfg, vertex=True)


def test_kec_bounded(oracle: QueryOracle, cfg: TesterConfig) -> TestVerdict:
    """k-edge-connectivity, bounded d-regular model with loop padding."""
    return _run_bounded(oracle, cfg, vertex=False)


def test_kvc_bounded(oracle: QueryOracle, cfg: TesterConfig) -> TestVerdict:
    """k-vertex-connectivity, bounded d-regular model (k < n/4)."""
    return _run_bounded(oracle, cfg, vertex=True)
