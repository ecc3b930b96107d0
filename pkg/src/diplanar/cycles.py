"""Directed cycles and the cycle-removal order.

A cycle is a tuple of arc ids in traversal order, starting at the arc that
leaves its smallest vertex.  Cycles are vertex-simple, so the arc-id set
determines the tuple.  Loops are 1-cycles and parallel arcs give distinct
cycles.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Callable, Iterator, Sequence

from .canon import canonical_form
from .graph import MultiDigraph, delete_arcs, normalize, require_eulerian

DirectedCycle = tuple[int, ...]


class CycleError(ValueError):
    pass


def iter_directed_cycles(g: MultiDigraph) -> Iterator[DirectedCycle]:
    """Backtracking search rooted at each vertex s over vertices > s.

    Vertex sequences are found on the simple underlying digraph and then
    expanded over the parallel arcs of each step.
    """
    n = g.vertex_count
    parallel: list[dict[int, list[int]]] = [{} for _ in range(n)]
    for a, (t, h) in enumerate(g.arcs):
        parallel[t].setdefault(h, []).append(a)
    succ = [sorted(w for w in parallel[v] if w != v) for v in range(n)]

    for s in range(n):
        for a in parallel[s].get(s, ()):
            yield (a,)
        path = [s]
        on_path = [False] * n
        on_path[s] = True
        stack = [iter(succ[s])]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            if w == s:
                if len(path) > 1:
                    steps = [parallel[path[i]][path[(i + 1) % len(path)]] for i in range(len(path))]
                    yield from product(*steps)
                continue
            if w < s or on_path[w]:
                continue
            path.append(w)
            on_path[w] = True
            stack.append(iter(succ[w]))


def enumerate_directed_cycles(g: MultiDigraph, consumer: Callable[[DirectedCycle], None] | None = None):
    if consumer is None:
        return list(iter_directed_cycles(g))
    for c in iter_directed_cycles(g):
        consumer(c)
    return None


def check_cycle(g: MultiDigraph, c: Sequence[int]) -> None:
    if not c:
        raise CycleError("empty cycle")
    if len(set(c)) != len(c):
        raise CycleError("cycle repeats an arc")
    for a in c:
        if not 0 <= a < g.arc_count:
            raise CycleError(f"arc {a} does not exist")
    tails = [g.arcs[a][0] for a in c]
    if len(set(tails)) != len(tails):
        raise CycleError("cycle repeats a vertex")
    for i, a in enumerate(c):
        if g.arcs[a][1] != g.arcs[c[(i + 1) % len(c)]][0]:
            raise CycleError(f"arcs {a} and {c[(i + 1) % len(c)]} are not consecutive")


def remove_cycle(g: MultiDigraph, c: Sequence[int]) -> MultiDigraph:
    check_cycle(g, c)
    return normalize(delete_arcs(g, c))


def predecessors(g: MultiDigraph) -> list[MultiDigraph]:
    """One-step predecessors under cycle removal, deduplicated up to isomorphism."""
    require_eulerian(g)
    seen = set()
    result = []
    for c in iter_directed_cycles(g):
        h = remove_cycle(g, c)
        key = canonical_form(h)
        if key not in seen:
            seen.add(key)
            result.append(h)
    return result


def cycle_partition(g: MultiDigraph) -> list[DirectedCycle]:
    """Greedy peeling: walk along the lowest unused out-arc until a vertex repeats."""
    require_eulerian(g)
    unused = [sorted(x) for x in g.out_arcs]
    remaining = g.arc_count
    cycles = []
    while remaining:
        start = min(a for arcs in unused for a in arcs[:1])
        v = g.arcs[start][0]
        walk_vertices = [v]
        walk_arcs: list[int] = []
        position = {v: 0}
        while True:
            a = unused[v][0]
            walk_arcs.append(a)
            v = g.arcs[a][1]
            if v in position:
                cycle = walk_arcs[position[v]:]
                break
            position[v] = len(walk_vertices)
            walk_vertices.append(v)
        for a in cycle:
            unused[g.arcs[a][0]].remove(a)
        remaining -= len(cycle)
        k = min(range(len(cycle)), key=lambda i: g.arcs[cycle[i]][0])
        cycles.append(tuple(cycle[k:] + cycle[:k]))
    return cycles


def return_path_exists(g: MultiDigraph, x: int, y: int) -> bool:
    """True iff g has a directed path from y to x."""
    if x == y:
        return True
    seen = {y}
    queue = deque([y])
    while queue:
        u = queue.popleft()
        for a in g.out_arcs[u]:
            w = g.arcs[a][1]
            if w == x:
                return True
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return False
