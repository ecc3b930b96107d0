"""Edge connectivity via unit-capacity max-flow (loops never cross a cut)."""

from __future__ import annotations

from collections import deque

from .graph import MultiDigraph, is_weakly_connected, require_eulerian


def max_flow(cap: list[list[int]], s: int, t: int, limit: int | None = None) -> int:
    """Edmonds-Karp on a dense capacity matrix; stops early once ``limit`` is reached."""
    n = len(cap)
    residual = [row[:] for row in cap]
    flow = 0
    while limit is None or flow < limit:
        prev = [-1] * n
        prev[s] = s
        queue = deque([s])
        while queue and prev[t] < 0:
            u = queue.popleft()
            row = residual[u]
            for v in range(n):
                if row[v] > 0 and prev[v] < 0:
                    prev[v] = u
                    queue.append(v)
        if prev[t] < 0:
            break
        # unit augmentations keep this simple; capacities are tiny
        v = t
        while v != s:
            u = prev[v]
            residual[u][v] -= 1
            residual[v][u] += 1
            v = u
        flow += 1
    return flow


def _directed_capacity(g: MultiDigraph) -> list[list[int]]:
    cap = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for t, h in g.arcs:
        if t != h:
            cap[t][h] += 1
    return cap


def _undirected_capacity(g: MultiDigraph) -> list[list[int]]:
    cap = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for t, h in g.arcs:
        if t != h:
            cap[t][h] += 1
            cap[h][t] += 1
    return cap


def underlying_edge_connectivity(g: MultiDigraph) -> int:
    """Minimum edge cut of the underlying undirected multigraph."""
    if g.vertex_count < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    if not is_weakly_connected(g):
        raise ValueError("graph is not connected")
    cap = _undirected_capacity(g)
    return min(max_flow(cap, 0, t) for t in range(1, g.vertex_count))


def arc_connectivity(g: MultiDigraph, limit: int | None = None) -> int:
    """min over s != t of the directed s->t max-flow.

    Only pairs through vertex 0 are needed: lambda(s, t) >= min(lambda(s, 0),
    lambda(0, t)) for any s, t.
    """
    if g.vertex_count < 2:
        raise ValueError("arc connectivity needs at least 2 vertices")
    cap = _directed_capacity(g)
    best = None
    for v in range(1, g.vertex_count):
        for s, t in ((0, v), (v, 0)):
            f = max_flow(cap, s, t, limit)
            best = f if best is None else min(best, f)
            if best == 0:
                return 0
    return best


def is_strongly_2_edge_connected(g: MultiDigraph) -> bool:
    require_eulerian(g)
    if g.vertex_count < 2:
        return False
    return arc_connectivity(g, limit=2) >= 2
