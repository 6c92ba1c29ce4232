"""Algorithm constants for the local cut engine.

These are the exact constants the correctness analysis of the local
search is written against.  They are exposed read-only so experiments
can report which constant family a run used; changing them voids the
stated success-probability and witness-volume guarantees, so nothing
in this package mutates them.
"""

# Random stop probability per newly marked arc is (gap+1) / (STOP_DENOM * nu).
STOP_DENOM = 8

# The search returns bottom once MARK_CAP_FACTOR * nu * k / (gap+1) arcs
# are marked.
MARK_CAP_FACTOR = 128

# Any returned vertex set has out-volume at most
# VOLUME_FACTOR * nu * k / (gap+1) in the unreversed graph.
VOLUME_FACTOR = 130

# Advisory volume precondition for the edge version: nu < m*(gap+1)/(EC_PRECONDITION_FACTOR*k).
EC_PRECONDITION_FACTOR = 130

# Advisory volume precondition for the vertex version (guarantees the
# back-projection never degenerates): nu < m*(gap+1)/(VC_PRECONDITION_FACTOR*k).
VC_PRECONDITION_FACTOR = 8320

# The back-projection's non-degeneracy argument needs the found set's
# split-graph volume to be at most m'/SPLIT_VOLUME_DIVISOR.
SPLIT_VOLUME_DIVISOR = 32

# DFS sampling variant: each pass visits ceil(DFS_VISIT_FACTOR * nu / eps)
# arcs; returned sets have volume at most DFS_VOLUME_FACTOR * nu / eps.
DFS_VISIT_FACTOR = 8
DFS_VOLUME_FACTOR = 10
