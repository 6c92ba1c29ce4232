"""Local edge-connectivity search by randomized path reversal.

Given a seed vertex x, a volume budget nu, a cut-size target k and a
slack gap, the search repeats k+gap rounds: grow a BFS tree from x over
the current arc orientation, stopping at each newly marked arc with
probability (gap+1)/(8*nu).  A round that exhausts its reachable set
has found a set with no outgoing arcs under the current orientation;
one path reversal per earlier round means its cut in the *base* graph
is below k+gap and its base volume at most 130*nu*k/(gap+1).  If the
run ever marks 128*nu*k/(gap+1) arcs it gives up with bottom.

If some S containing x has out-volume <= nu and cut below k, a set is
returned with probability at least 3/4; any returned set is a genuine
witness regardless (eagerly revalidated here).  The DFS variant grows a
depth-first tree until exactly ceil(8*nu/eps) arcs are visited and
reverses the path to the tail of a uniformly sampled visited arc; it
trades the success probability down to 1/2 for simpler accounting.
"""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass

from . import constants as C
from .errors import LocalCutsError, ParameterError
from .overlay import ReversalOverlay
from .witness import EdgeCut, edge_cut_of

BOTTOM_REASONS = ("mark_cap", "exhausted", "degenerate")


@dataclass(frozen=True)
class LocalEcParams:
    """Inputs of one local search; seed makes the run reproducible."""

    x: int
    nu: int
    k: int
    gap: int = 0
    seed: int | None = None

    def validate(self, m: int | None = None, strict: bool = True):
        check_local_params(self.nu, self.k, self.gap, strict=strict)
        if m is not None and not volume_precondition_ok(self.nu, self.k, self.gap, m):
            raise ParameterError(
                f"nu={self.nu} >= m*(gap+1)/({C.EC_PRECONDITION_FACTOR}*k) for m={m}"
            )


@dataclass(frozen=True)
class LocalResult:
    """Found(witness) or bottom, plus run accounting.

    reason is one of 'stuck', 'low_degree' (found) and 'mark_cap',
    'exhausted', 'degenerate' (bottom).
    """

    witness: object | None
    reason: str
    cut_size: int | None = None
    volume: int | None = None
    marks: int = 0
    queries: int = 0

    @property
    def is_found(self) -> bool:
        return self.witness is not None

    def describe(self):
        out = {"found": self.is_found, "reason": self.reason,
               "marks": self.marks, "queries": self.queries}
        if self.is_found:
            out.update(cut_size=self.cut_size, volume=self.volume)
        return out


def check_local_params(nu: int, k: int, gap: int, strict: bool = True):
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not 0 <= gap <= k:
        raise ParameterError(f"gap must lie in [0, k], got gap={gap}, k={k}")
    if strict:
        if nu <= k:
            raise ParameterError(f"nu must exceed k, got nu={nu}, k={k}")
    elif nu < gap + 1:
        raise ParameterError(f"nu must be at least gap+1, got nu={nu}, gap={gap}")


def volume_precondition_ok(nu: int, k: int, gap: int, m: int,
                           factor: int = C.EC_PRECONDITION_FACTOR) -> bool:
    """Advisory check nu < m*(gap+1)/(factor*k); guarantees S != V."""
    return nu * factor * k < m * (gap + 1)


def floor_one_plus_eps(eps: float, k: int) -> int:
    return math.floor((1 + eps) * k + 1e-12)


def make_rng(rng) -> random.Random:
    return rng if isinstance(rng, random.Random) else random.Random(rng)


def derived_rng(seed, *path) -> random.Random:
    """Independent stream for (master seed, task path); stable across runs."""
    return random.Random(":".join(str(p) for p in (seed, *path)))


def reverse_tree_path(overlay: ReversalOverlay, parent: dict, x: int, y: int):
    """Flip every arc on the tree path x -> y (parent maps v -> (arc_id, u)).

    For any fixed S containing x, the set's cut and out-volume under the
    overlay drop by exactly one if y is outside S and stay unchanged
    otherwise.
    """
    arcs = []
    v = y
    while v != x:
        entry = parent.get(v)
        if entry is None:
            raise ParameterError(f"vertex {v} is not in the tree rooted at {x}")
        aid, v = entry[0], entry[1]
        arcs.append(aid)
    for aid in arcs:
        overlay.flip(aid)


def path_reversal_search(source, x: int, nu: int, k: int, gap: int, rng):
    """Core loop shared by plain and split-graph runs.

    Returns (found_set | None, reason, overlay).  found sets are in the
    source's vertex space; cut/volume guarantees are w.r.t. the source's
    unreversed orientation.
    """
    mark_cap = -(-C.MARK_CAP_FACTOR * nu * k // (gap + 1))
    threshold = (gap + 1) << 64
    denom = C.STOP_DENOM * nu
    ov = ReversalOverlay(source)
    marked = ov.marked
    n = source.n
    getbits = rng.getrandbits
    deg_of = source.out_degree
    eligible = source.shortcut_eligible
    if eligible(x) and deg_of(x) < k:
        return {x}, "low_degree", ov
    for _ in range(k + gap):
        visited = {x}
        parent: dict[int, tuple[int, int]] = {}
        queue = deque((x,))
        y = None
        while queue:
            v = queue.popleft()
            stop = False
            for aid, h in ov.iter_out(v):
                if aid not in marked:
                    marked.add(aid)
                    if len(marked) >= mark_cap:
                        return None, "mark_cap", ov
                    if getbits(64) * denom < threshold:
                        y = v
                        stop = True
                        break
                if h not in visited:
                    visited.add(h)
                    parent[h] = (aid, v)
                    if eligible(h) and deg_of(h) < k:
                        return {h}, "low_degree", ov
                    queue.append(h)
            if stop:
                break
        if y is None:
            if len(visited) >= n:
                # Spanning set: only reachable when the advisory volume
                # precondition was violated; V is never a witness.
                return None, "degenerate", ov
            return visited, "stuck", ov
        reverse_tree_path(ov, parent, x, y)
    return None, "exhausted", ov


def dfs_sampling_search(source, x: int, nu: int, k: int, eps: float, rng):
    """DFS variant core: visit exactly ceil(8*nu/eps) arcs per round."""
    rounds = floor_one_plus_eps(eps, k)
    target = math.ceil(C.DFS_VISIT_FACTOR * nu / eps)
    ov = ReversalOverlay(source)
    n = source.n
    for _ in range(rounds):
        visited = {x}
        parent: dict[int, tuple[int, int]] = {}
        seen_arcs: list[tuple[int, int]] = []  # (arc id, current tail)
        stack = [ov.iter_out(x)]
        tails = [x]
        while stack and len(seen_arcs) < target:
            it = stack[-1]
            v = tails[-1]
            step = next(it, None)
            if step is None:
                stack.pop()
                tails.pop()
                continue
            aid, h = step
            seen_arcs.append((aid, v))
            if h not in visited:
                visited.add(h)
                parent[h] = (aid, v)
                stack.append(ov.iter_out(h))
                tails.append(h)
        if len(seen_arcs) < target:
            if len(visited) >= n:
                return None, "degenerate", ov
            return visited, "stuck", ov
        _, tail = seen_arcs[rng.randrange(len(seen_arcs))]
        reverse_tree_path(ov, parent, x, tail)
    return None, "exhausted", ov


def source_cut_stats(source, s) -> tuple[int, int]:
    """(cut, volume) of a set w.r.t. the source's unreversed orientation.

    Validation helper: reads snapshots, charges no queries.  Volume is
    the model volume (d per vertex under padding); loops never cross.
    """
    sset = s if isinstance(s, (set, frozenset)) else set(s)
    cut = 0
    vol = 0
    for v in sset:
        for _, h in source.snapshot_out(v):
            vol += 1
            if h not in sset:
                cut += 1
    return cut, vol


def _check_found(source, found, cut, vol, nu, k, gap):
    if not found or len(found) >= source.n:
        raise LocalCutsError("witness must be a nonempty proper vertex subset")
    if cut >= k + gap:
        raise LocalCutsError(f"witness cut {cut} not below k+gap={k + gap}")
    if vol * (gap + 1) > C.VOLUME_FACTOR * nu * k:
        raise LocalCutsError(
            f"witness volume {vol} exceeds {C.VOLUME_FACTOR}*nu*k/(gap+1)"
        )


def local_ec(oracle, x: int, nu: int, k: int, gap: int = 0, rng=None, *,
             strict: bool = True) -> LocalResult:
    """Run the path-reversal search on an incidence oracle.

    Any returned witness satisfies cut_size < k+gap and out-volume at
    most 130*nu*k/(gap+1); if some S containing x has volume <= nu and
    cut below k, a witness is found with probability >= 3/4.
    """
    check_local_params(nu, k, gap, strict=strict)
    rng = make_rng(rng)
    before = oracle.counter.count
    found, reason, ov = path_reversal_search(oracle, x, nu, k, gap, rng)
    queries = oracle.counter.count - before
    marks = len(ov.marked)
    if found is None:
        return LocalResult(None, reason, marks=marks, queries=queries)
    cut, vol = source_cut_stats(oracle, found)
    _check_found(oracle, found, cut, vol, nu, k, gap)
    witness = edge_cut_of(oracle.graph, found)
    return LocalResult(witness, reason, cut_size=cut, volume=vol,
                       marks=marks, queries=queries)


def local_ec_exact(oracle, x: int, nu: int, k: int, rng=None) -> LocalResult:
    """gap=0 specialization: any witness has cut strictly below k."""
    return local_ec(oracle, x, nu, k, 0, rng)


def local_ec_approx(oracle, x: int, nu: int, k: int, eps: float, rng=None) -> LocalResult:
    """gap=floor(eps*k) specialization: witness cut below floor((1+eps)k)."""
    if not 0 < eps <= 1:
        raise ParameterError(f"eps must be in (0, 1], got {eps}")
    gap = math.floor(eps * k + 1e-12)
    return local_ec(oracle, x, nu, k, gap, rng)


def local_ec_dfs(oracle, x: int, nu: int, k: int, eps: float, rng=None) -> LocalResult:
    """DFS sampling variant.

    Witnesses have cut below floor((1+eps)k) and volume at most
    10*nu/eps; if a qualifying S exists, bottom is returned with
    probability at most 1/2.  Needs 8*nu/eps < m to ever get stuck.
    """
    if not 0 < eps <= 1:
        raise ParameterError(f"eps must be in (0, 1], got {eps}")
    check_local_params(nu, k, 0, strict=True)
    rng = make_rng(rng)
    before = oracle.counter.count
    found, reason, ov = dfs_sampling_search(oracle, x, nu, k, eps, rng)
    queries = oracle.counter.count - before
    if found is None:
        return LocalResult(None, reason, queries=queries)
    cut, vol = source_cut_stats(oracle, found)
    bound = floor_one_plus_eps(eps, k)
    if not found or len(found) >= oracle.n:
        raise LocalCutsError("witness must be a nonempty proper vertex subset")
    if cut >= bound:
        raise LocalCutsError(f"witness cut {cut} not below floor((1+eps)k)={bound}")
    if vol * eps > C.DFS_VOLUME_FACTOR * nu + 1e-9:
        raise LocalCutsError(f"witness volume {vol} exceeds 10*nu/eps")
    witness = edge_cut_of(oracle.graph, found)
    return LocalResult(witness, reason, cut_size=cut, volume=vol, queries=queries)
