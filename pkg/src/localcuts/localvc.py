"""Local vertex-connectivity search via the split graph.

Runs the path-reversal engine on the on-the-fly split view with a
doubled volume budget and back-projects any found split cut to a
separation triple.  If some triple (L, S, R) with x in L has
|S| < k and out-volume(L) <= nu, a vertex cut of size below k+gap is
returned with probability at least 3/4; any returned cut is genuine.
"""
from __future__ import annotations

import math

from . import constants as C
from .errors import LocalCutsError, ParameterError, ProjectionDegenerateError
from .graph import cut_stats
from .localec import (LocalResult, check_local_params, make_rng,
                      path_reversal_search, source_cut_stats)
from .splitgraph import SplitView, _singleton_triple, project_cut
from .witness import valid_triple


def vc_volume_precondition_ok(nu: int, k: int, gap: int, m: int) -> bool:
    """Advisory check nu < m*(gap+1)/(8320*k); rules out degenerate projection."""
    return nu * C.VC_PRECONDITION_FACTOR * k < m * (gap + 1)


def local_vc(oracle, x: int, nu: int, k: int, gap: int = 0, rng=None, *,
             strict: bool = True, degenerate_as_bottom: bool = False) -> LocalResult:
    """Local vertex-cut search from seed x.

    strict enforces the structural preconditions nu > k and k < n/4;
    the m-dependent volume precondition is the caller's contract (use
    vc_volume_precondition_ok).  degenerate_as_bottom turns an
    (impossible-under-preconditions) degenerate projection into bottom
    instead of an error, for query-model callers that cannot verify the
    volume precondition.
    """
    check_local_params(nu, k, gap, strict=strict)
    if strict and not k < oracle.n / 4:
        raise ParameterError(f"k={k} must be below n/4={oracle.n / 4}")
    rng = make_rng(rng)
    view = SplitView(oracle, x)
    before = oracle.counter.count
    found, reason, ov = path_reversal_search(view, 2 * x, 2 * nu, k, gap, rng)
    queries = oracle.counter.count - before
    marks = len(ov.marked)
    if found is None:
        return LocalResult(None, reason, marks=marks, queries=queries)
    split_cut, split_vol = source_cut_stats(view, found)
    if split_cut >= k + gap:
        raise LocalCutsError(f"split cut {split_cut} not below k+gap={k + gap}")
    if split_vol * (gap + 1) > C.VOLUME_FACTOR * (2 * nu) * k:
        raise LocalCutsError("split volume exceeds the engine bound")
    try:
        if reason == "low_degree":
            # Out-role singleton: exactly the projection's first branch.
            (w,) = found
            triple = _singleton_triple(oracle.graph, w >> 1, oracle.n)
        else:
            triple = project_cut(view, found)
    except ProjectionDegenerateError:
        if degenerate_as_bottom:
            return LocalResult(None, "degenerate", marks=marks, queries=queries)
        raise
    if triple.size >= k + gap:
        raise LocalCutsError(f"vertex cut {triple.size} not below k+gap={k + gap}")
    if not valid_triple(oracle.graph, triple):
        raise LocalCutsError("projected triple failed validation")
    vol = cut_stats(oracle.graph, triple.left).vol_out
    return LocalResult(triple, reason, cut_size=triple.size, volume=vol,
                       marks=marks, queries=queries)


def local_vc_exact(oracle, x: int, nu: int, k: int, rng=None) -> LocalResult:
    """gap=0: any returned vertex cut has size strictly below k."""
    return local_vc(oracle, x, nu, k, 0, rng)


def local_vc_approx(oracle, x: int, nu: int, k: int, eps: float, rng=None) -> LocalResult:
    """gap=floor(eps*k): cut size below floor((1+eps)k)."""
    if not 0 < eps <= 1:
        raise ParameterError(f"eps must be in (0, 1], got {eps}")
    gap = math.floor(eps * k + 1e-12)
    return local_vc(oracle, x, nu, k, gap, rng)
