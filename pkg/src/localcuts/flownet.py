"""Small augmenting-path max-flow kernel with residual pair-arcs.

Built once per graph and reused across many (s, t) calls: flow values
and visit stamps are reset via touched-lists and epochs, so a call
costs only what it traverses.  Augmenting paths can be found in BFS or
DFS order; the two orders are used to cross-validate the brute-force
oracles against each other.
"""
from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Integer-capacity directed network; arc pairs (fwd, back)."""

    def __init__(self, num_nodes: int):
        self.n = num_nodes
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        self.flow: list[int] = []
        self._touched: list[int] = []
        self._seen = [0] * num_nodes
        self._stamp = 0
        self._parent_arc = [0] * num_nodes

    def add_arc(self, u: int, v: int, cap: int) -> int:
        a = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.adj[u].append(a)
        self.to.append(u)
        self.cap.append(0)
        self.adj[v].append(a + 1)
        self.flow.append(0)
        self.flow.append(0)
        return a

    def reset(self):
        flow = self.flow
        for a in self._touched:
            flow[a] = 0
        self._touched.clear()

    def _find_path(self, s: int, t: int, order: str) -> bool:
        self._stamp += 1
        stamp = self._stamp
        seen = self._seen
        parent = self._parent_arc
        adj, to, cap, flow = self.adj, self.to, self.cap, self.flow
        seen[s] = stamp
        if order == "bfs":
            frontier = deque((s,))
            pop = frontier.popleft
        else:
            frontier = [s]
            pop = frontier.pop
        while frontier:
            u = pop()
            for a in adj[u]:
                if cap[a] - flow[a] <= 0:
                    continue
                v = to[a]
                if seen[v] == stamp:
                    continue
                seen[v] = stamp
                parent[v] = a
                if v == t:
                    return True
                frontier.append(v)
        return False

    def max_flow(self, s: int, t: int, limit: int, order: str = "bfs") -> int:
        """Augment unit paths until `limit` units or no augmenting path."""
        self.reset()
        to, cap, flow = self.to, self.cap, self.flow
        value = 0
        touched = self._touched
        while value < limit and self._find_path(s, t, order):
            v = t
            while v != s:
                a = self._parent_arc[v]
                flow[a] += 1
                flow[a ^ 1] -= 1
                touched.append(a)
                touched.append(a ^ 1)
                v = to[a ^ 1]
            value += 1
        return value

    def residual_reachable(self, s: int) -> set[int]:
        """Nodes reachable from s in the residual graph of the last flow."""
        seen = {s}
        stack = [s]
        adj, to, cap, flow = self.adj, self.to, self.cap, self.flow
        while stack:
            u = stack.pop()
            for a in adj[u]:
                if cap[a] - flow[a] <= 0:
                    continue
                v = to[a]
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen
