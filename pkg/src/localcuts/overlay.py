"""Per-run mutable view of a graph with reversible arcs and marks.

A local run never touches the immutable base graph: it owns one
ReversalOverlay holding (a) the prefix of each out-list it has read so
far (reads go through the counted source, so the overlay doubles as the
run's query cache), (b) the set of arc ids currently flipped, with
per-vertex lists of arcs flipped into them, and (c) the set of marked
arc ids.  All state is sized to the arcs actually touched, so a local
run pays nothing proportional to the whole graph.

An arc id is in the flipped set at most once: flipping twice restores
the base orientation and removes it.  Marks only grow within a run.
"""
from __future__ import annotations

from .errors import ParameterError


class ReversalOverlay:
    __slots__ = ("source", "marked", "reversed_ids", "_read", "_complete",
                 "_ends", "_flipped_in")

    def __init__(self, source):
        self.source = source
        self.marked: set[int] = set()
        self.reversed_ids: set[int] = set()
        self._read: dict[int, list[tuple[int, int]]] = {}
        self._complete: set[int] = set()
        # arc id -> (base tail, base head); populated on first read
        self._ends: dict[int, tuple[int, int]] = {}
        # current owner vertex -> insertion-ordered {arc id: None}
        self._flipped_in: dict[int, dict[int, None]] = {}

    def ends(self, arc_id: int) -> tuple[int, int]:
        return self._ends[arc_id]

    def iter_out(self, v: int):
        """Yield (arc_id, current_head) over v's current out-arcs.

        Order: base arcs in list order (flipped-away ones skipped), then
        arcs flipped into v in flip order.  Base positions not yet read
        are queried through the source one at a time, so a consumer that
        stops early never pays for arcs past the stop.
        """
        read = self._read.get(v)
        if read is None:
            read = self._read[v] = []
        rev = self.reversed_ids
        idx = 0
        while idx < len(read):
            aid, h = read[idx]
            idx += 1
            if aid not in rev:
                yield aid, h
        if v not in self._complete:
            src = self.source
            deg = src.out_degree(v)
            ends = self._ends
            j = len(read)
            while j < deg:
                aid, h = src.read_arc(v, j)
                read.append((aid, h))
                ends[aid] = (v, h)
                j += 1
                yield aid, h
            self._complete.add(v)
        flipped = self._flipped_in.get(v)
        if flipped:
            ends = self._ends
            for aid in flipped:
                yield aid, ends[aid][0]

    def flip(self, arc_id: int):
        """Reverse the current orientation of one previously read arc."""
        try:
            t, h = self._ends[arc_id]
        except KeyError:
            raise ParameterError(f"arc {arc_id} was never traversed") from None
        if arc_id in self.reversed_ids:
            self.reversed_ids.discard(arc_id)
            del self._flipped_in[h][arc_id]
        else:
            self.reversed_ids.add(arc_id)
            self._flipped_in.setdefault(h, {})[arc_id] = None

    # ---- uncounted views for validation and invariant tests ----------------

    def current_out_arcs(self, v: int) -> list[tuple[int, int]]:
        """(arc_id, head) list under the current orientation; no queries."""
        ends = self._ends
        out = []
        for aid, h in self.source.snapshot_out(v):
            if aid not in self.reversed_ids:
                out.append((aid, h))
            if aid not in ends:
                ends[aid] = (v, h)
        for aid in self._flipped_in.get(v, ()):
            out.append((aid, ends[aid][0]))
        return out

    def current_out_degree(self, v: int) -> int:
        return len(self.current_out_arcs(v))

    def current_cut_stats(self, s) -> tuple[int, int]:
        """(cut_size, vol_out) of the set under the current orientation."""
        sset = s if isinstance(s, (set, frozenset)) else set(s)
        cut = 0
        vol = 0
        for v in sset:
            for _, h in self.current_out_arcs(v):
                vol += 1
                if h not in sset:
                    cut += 1
        return cut, vol
