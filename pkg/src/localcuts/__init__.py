"""Randomized local cut detection, small-k vertex connectivity, and
sublinear connectivity testers, with brute-force oracles that make the
probabilistic guarantees testable."""

from .graph import Graph, CutStats, cut_stats, load_graph, reverse_graph
from .oracle import (Arc, BOUNDED_REGULAR, END_OF_LIST, QueryCounter,
                     QueryOracle, UNBOUNDED, sample_edge_regular)
from .overlay import ReversalOverlay
from .witness import EdgeCut, SeparationTriple, edge_cut_of, separates
from .localec import (LocalEcParams, LocalResult, local_ec, local_ec_approx,
                      local_ec_dfs, local_ec_exact, reverse_tree_path,
                      volume_precondition_ok)
from .splitgraph import SplitView, lift_triple, project_cut, split_view
from .localvc import local_vc, local_vc_approx, local_vc_exact, vc_volume_precondition_ok
from .globalvc import (FrameworkConfig, MinVcResult, StVcSolver, VcVerdict,
                       min_vertex_cut, sparsify_ni, st_vertex_connectivity,
                       vc_check, vc_check_directed)
from .testing import (TesterConfig, TestVerdict, gap_local_ec, gap_local_vc,
                      test_kec_bounded, test_kec_unbounded, test_kvc_bounded,
                      test_kvc_unbounded)
from .bruteforce import (OracleLimits, UNKNOWN, bf_local_witness,
                         bf_min_edge_cut, bf_min_vertex_cut, validate_witness)
from . import generators

__all__ = [name for name in dir() if not name.startswith("_")]
