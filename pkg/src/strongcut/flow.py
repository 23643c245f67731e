"""Unit-capacity max-flow on undirected simple graphs (Dinic's algorithm).

Each undirected edge ``i`` becomes the arc pair ``2i`` (u -> v) and ``2i+1``
(v -> u), each of capacity one and each the reverse of the other.  Sources
and sinks are vertex *sets*; a set behaves exactly like the vertex obtained by
contracting it, which is how edge contraction is realised without rebuilding
the network.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graph import Graph


class FlowNetwork:
    """Residual network template built once per graph and reused per query."""

    __slots__ = ("order", "heads", "out_arcs", "base_caps")

    def __init__(self, g: Graph):
        self.order = g.order
        heads: list[int] = []
        out_arcs: list[list[int]] = [[] for _ in range(g.order)]
        for u, v in g.edges:
            out_arcs[u].append(len(heads))
            heads.append(v)
            out_arcs[v].append(len(heads))
            heads.append(u)
        self.heads = heads
        self.out_arcs = [tuple(a) for a in out_arcs]
        self.base_caps = [1] * len(heads)

    def max_flow(
        self,
        sources: Iterable[int],
        sinks: Iterable[int],
        limit: int | None = None,
    ) -> tuple[int, list[int]]:
        """Maximum flow from the source set to the sink set.

        Stops once the flow reaches ``limit``.  Returns the flow value and the
        residual capacities; when the value is below ``limit`` the residual
        graph certifies a minimum cut (see :meth:`source_side`).
        """
        src = set(sources)
        dst = set(sinks)
        if src & dst:
            raise ValueError("source and sink sets overlap")
        cap = self.base_caps.copy()
        heads = self.heads
        out_arcs = self.out_arcs
        n = self.order
        flow = 0
        if limit is None:
            limit = len(heads)

        is_sink = [False] * n
        for t in dst:
            is_sink[t] = True

        while flow < limit:
            level = [-1] * n
            queue = deque()
            for s in src:
                level[s] = 0
                queue.append(s)
            reached = False
            while queue:
                u = queue.popleft()
                nxt = level[u] + 1
                for a in out_arcs[u]:
                    if cap[a]:
                        w = heads[a]
                        if level[w] < 0:
                            level[w] = nxt
                            if is_sink[w]:
                                reached = True
                            else:
                                queue.append(w)
            if not reached:
                break

            # blocking flow via iterative DFS with per-vertex arc pointers
            ptr = [0] * n
            for s in src:
                while flow < limit:
                    path = self._augment(s, level, ptr, cap, is_sink)
                    if not path:
                        break
                    for a in path:
                        cap[a] -= 1
                        cap[a ^ 1] += 1
                    flow += 1
                if flow >= limit:
                    break
        return flow, cap

    def _augment(self, s, level, ptr, cap, is_sink) -> list[int]:
        heads = self.heads
        out_arcs = self.out_arcs
        stack = [s]
        path: list[int] = []
        while stack:
            u = stack[-1]
            if is_sink[u]:
                return path
            arcs = out_arcs[u]
            advanced = False
            while ptr[u] < len(arcs):
                a = arcs[ptr[u]]
                w = heads[a]
                if cap[a] and level[w] == level[u] + 1:
                    stack.append(w)
                    path.append(a)
                    advanced = True
                    break
                ptr[u] += 1
            if not advanced:
                # dead end: prune u from this phase and retreat
                level[u] = -2
                stack.pop()
                if path:
                    path.pop()
                    ptr[stack[-1]] += 1
        return []

    def source_side(self, sources: Iterable[int], cap: list[int]) -> frozenset[int]:
        """Vertices reachable from the sources in the residual network."""
        seen = set(sources)
        queue = deque(seen)
        while queue:
            u = queue.popleft()
            for a in self.out_arcs[u]:
                if cap[a]:
                    w = self.heads[a]
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return frozenset(seen)


def max_flow(g: Graph, sources: Iterable[int], sinks: Iterable[int], limit: int | None = None) -> int:
    return FlowNetwork(g).max_flow(sources, sinks, limit)[0]


def min_cut_side(g: Graph, sources: Iterable[int], sinks: Iterable[int]) -> tuple[int, frozenset[int]]:
    """Minimum cut value between two vertex sets and the source side of one such cut."""
    net = FlowNetwork(g)
    sources = tuple(sources)
    value, cap = net.max_flow(sources, sinks)
    return value, net.source_side(sources, cap)
