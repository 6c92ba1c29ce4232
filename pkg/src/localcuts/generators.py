"""Seeded instance generators.

Every randomized generator takes a seed (or a random.Random) and is
reproducible byte-for-byte: same seed, same arc list.  Planted
generators return a GeneratedInstance whose JSON-able metadata records
the planted witness, seed and parameters (emitted as a sidecar by the
CLI); structural generators return a plain Graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ConstructionError
from .graph import Graph
from .localec import make_rng


@dataclass(frozen=True)
class GeneratedInstance:
    graph: Graph
    meta: dict = field(default_factory=dict)


def _symmetric(pairs):
    out = []
    for u, v in pairs:
        out.append((u, v))
        out.append((v, u))
    return out


def gen_cycle(n: int, directed: bool = True) -> Graph:
    if n < 1:
        raise ConstructionError("cycle needs n >= 1")
    pairs = [(v, (v + 1) % n) for v in range(n)]
    if not directed:
        return Graph(n, _symmetric(pairs), directed=False)
    return Graph(n, pairs)


def gen_clique(n: int, directed: bool = True) -> Graph:
    if n < 1:
        raise ConstructionError("clique needs n >= 1")
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return Graph(n, pairs, directed=directed)


def gen_union_of_cycles(t: int, length: int, directed: bool = True) -> Graph:
    """t disjoint cycles; every component has no outgoing arcs."""
    if t < 1 or length < 1:
        raise ConstructionError("need t >= 1 and length >= 1")
    pairs = []
    for c in range(t):
        base = c * length
        pairs.extend((base + i, base + (i + 1) % length) for i in range(length))
    if not directed:
        pairs = _symmetric(pairs)
    return Graph(t * length, pairs, directed=directed)


def gen_circulant(n: int, offsets) -> Graph:
    """Directed circulant: arcs v -> v+o (mod n) for each offset.

    With offsets 1..r this is r-regular and strongly r-connected, the
    workhorse accept-side instance for the testers.
    """
    offs = list(offsets)
    if n < 2 or not offs or any(o % n == 0 for o in offs):
        raise ConstructionError("circulant needs n >= 2 and nonzero offsets mod n")
    pairs = [(v, (v + o) % n) for v in range(n) for o in offs]
    return Graph(n, pairs)


def gen_hypercube(dim: int) -> Graph:
    """dim-dimensional hypercube as symmetric arc pairs; kappa = dim."""
    if dim < 1:
        raise ConstructionError("hypercube needs dim >= 1")
    n = 1 << dim
    pairs = [(v, v ^ (1 << b)) for v in range(n) for b in range(dim)]
    return Graph(n, pairs, directed=False)


def gen_random_digraph(n: int, m: int, rng=None, min_out_degree: int = 0) -> Graph:
    """m arcs chosen uniformly (no self-loops), then padded so every
    vertex has out-degree >= min_out_degree."""
    rng = make_rng(rng)
    if n < 2:
        raise ConstructionError("need n >= 2")
    pairs = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n - 1)
        if v >= u:
            v += 1
        pairs.append((u, v))
    if min_out_degree > 0:
        deg = [0] * n
        for u, _ in pairs:
            deg[u] += 1
        for u in range(n):
            while deg[u] < min_out_degree:
                v = rng.randrange(n - 1)
                if v >= u:
                    v += 1
                pairs.append((u, v))
                deg[u] += 1
    return Graph(n, pairs)


def gen_random_regular(n: int, d: int, rng=None, simple: bool = False,
                       max_tries: int = 200) -> Graph:
    """Directed d-regular multigraph by the pairing model.

    Every vertex gets out-degree and in-degree exactly d.  simple=True
    rejects samples containing loops or parallel arcs (feasible for
    d < n; raises after max_tries).
    """
    rng = make_rng(rng)
    if d < 1 or d >= n:
        raise ConstructionError(f"need 1 <= d < n, got d={d}, n={n}")
    tails = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        heads = tails.copy()
        rng.shuffle(heads)
        pairs = list(zip(tails, heads))
        if not simple:
            return Graph(n, pairs)
        if all(u != v for u, v in pairs) and len(set(pairs)) == len(pairs):
            return Graph(n, pairs)
    raise ConstructionError(f"no simple {d}-regular sample in {max_tries} tries")


def gen_planted_vertex_cut(a: int, b: int, s: int, rng=None,
                           side_degree: int | None = None) -> GeneratedInstance:
    """Two sides joined only through a planted separator of size s.

    Dense mode (default): A+Sep and B+Sep are complete, so the vertex
    connectivity is exactly s.  With side_degree, the B side is a sparse
    random near-regular graph instead (a cycle backbone plus random
    chords), giving large instances with m proportional to n; only the
    witness triple is guaranteed then, not exact connectivity.
    """
    rng = make_rng(rng)
    if a < 1 or b < 1 or s < 0 or s >= a + b:
        raise ConstructionError("need a,b >= 1 and 0 <= s < a+b")
    n = a + s + b
    side_a = list(range(a))
    sep = list(range(a, a + s))
    side_b = list(range(a + s, n))
    pairs = []
    left = side_a + sep
    pairs.extend((u, v) for u in left for v in left if u != v)
    if side_degree is None:
        right = side_b + sep
        pairs.extend((u, v) for u in right for v in right if u != v)
    else:
        if side_degree < 3 or side_degree > b - 1:
            raise ConstructionError("side_degree must be in [3, b-1]")
        pairs.extend(_symmetric([(side_b[i], side_b[(i + 1) % b]) for i in range(b)]))
        chords = (side_degree - 2) * b // 2
        for _ in range(chords):
            u = side_b[rng.randrange(b)]
            v = side_b[rng.randrange(b)]
            if u != v:
                pairs.extend(((u, v), (v, u)))
        for w in sep:
            targets = rng.sample(side_b, min(side_degree, b))
            for v in targets:
                pairs.extend(((w, v), (v, w)))
    g = Graph(n, pairs, directed=False)
    meta = {
        "generator": "planted_vertex_cut",
        "params": {"a": a, "b": b, "s": s, "side_degree": side_degree},
        "witness": {"left": side_a, "separator": sep, "right": side_b},
        "kappa": s if side_degree is None else None,
    }
    return GeneratedInstance(g, meta)


def gen_planted_edge_cut(a: int, b: int, c: int, rng=None) -> GeneratedInstance:
    """Two directed cliques joined by exactly c arcs each way.

    The minimum edge cut is c; needs c <= min(a,b)-1 so the seam is the
    weakest cut.
    """
    rng = make_rng(rng)
    if a < 2 or b < 2 or c < 1 or c > min(a, b) - 1:
        raise ConstructionError("need a,b >= 2 and 1 <= c <= min(a,b)-1")
    n = a + b
    pairs = [(u, v) for u in range(a) for v in range(a) if u != v]
    pairs.extend((u, v) for u in range(a, n) for v in range(a, n) if u != v)
    for _ in range(c):
        pairs.append((rng.randrange(a), a + rng.randrange(b)))
    for _ in range(c):
        pairs.append((a + rng.randrange(b), rng.randrange(a)))
    g = Graph(n, pairs)
    meta = {
        "generator": "planted_edge_cut",
        "params": {"a": a, "b": b, "c": c},
        "witness": {"side_a": list(range(a)), "cut_size": c},
    }
    return GeneratedInstance(g, meta)


def gen_two_cliques_shared(a: int, b: int, shared: int) -> Graph:
    """Undirected K_a and K_b glued on `shared` common vertices; kappa = shared."""
    if shared < 1 or shared >= min(a, b):
        raise ConstructionError("need 1 <= shared < min(a, b)")
    n = a + b - shared
    first = range(a)
    second = range(a - shared, n)
    pairs = [(u, v) for u in first for v in first if u != v]
    pairs += [(u, v) for u in second for v in second if u != v]
    seen = set()
    dedup = []
    for p in pairs:
        if p not in seen:
            seen.add(p)
            dedup.append(p)
    return Graph(n, dedup, directed=False)


def gen_low_degree_planted(n: int, k: int, deficient: int, rng=None) -> Graph:
    """Simple graph with `deficient` vertices of degree below k.

    The core is a (k+1)-offset circulant (degree >= k+1); each deficient
    vertex hangs off the core with a single symmetric edge.
    """
    rng = make_rng(rng)
    core = n - deficient
    if core < k + 3:
        raise ConstructionError("core too small for the requested degree")
    pairs = [(v, (v + o) % core) for v in range(core) for o in range(1, k + 2)]
    pairs += [(v, (v - o) % core) for v in range(core) for o in range(1, k + 2)]
    for i in range(deficient):
        v = core + i
        t = rng.randrange(core)
        pairs.extend(((v, t), (t, v)))
    seen = set()
    dedup = []
    for p in pairs:
        if p not in seen:
            seen.add(p)
            dedup.append(p)
    return Graph(n, dedup, directed=False)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union with consecutive vertex relabeling."""
    pairs = []
    base = 0
    for g in graphs:
        pairs.extend((base + t, base + h) for t, h in g.arcs())
        base += g.n
    return Graph(base, pairs, directed=all(g.directed for g in graphs))


def with_arcs(g: Graph, extra) -> Graph:
    """Copy of g with extra arcs appended."""
    pairs = list(g.arcs()) + list(extra)
    return Graph(g.n, pairs, directed=g.directed)
