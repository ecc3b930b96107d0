"""Multidigraph value type and the structural helpers everything else builds on.

Arc ids are positions in ``MultiDigraph.arcs``.  Loops and parallel arcs are
allowed; a loop counts once toward the in-degree and once toward the
out-degree of its vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class NotEulerianError(ValueError):
    """Raised when an operation requires in-degree == out-degree everywhere."""


@dataclass(frozen=True)
class MultiDigraph:
    vertex_count: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        arcs = tuple((int(t), int(h)) for t, h in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for t, h in arcs:
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise ValueError(f"arc ({t}, {h}) out of range for {self.vertex_count} vertices")

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def out_arcs(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.vertex_count)]
        for a, (t, _) in enumerate(self.arcs):
            out[t].append(a)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arcs(self) -> tuple[tuple[int, ...], ...]:
        inc = [[] for _ in range(self.vertex_count)]
        for a, (_, h) in enumerate(self.arcs):
            inc[h].append(a)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Arc multiplicities, ``matrix[u][v]`` = number of arcs u -> v."""
        m = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for t, h in self.arcs:
            m[t][h] += 1
        return tuple(tuple(row) for row in m)

    def degree(self, v: int) -> int:
        return len(self.out_arcs[v]) + len(self.in_arcs[v])

    def tail(self, a: int) -> int:
        return self.arcs[a][0]

    def head(self, a: int) -> int:
        return self.arcs[a][1]

    def __str__(self):
        return f"MultiDigraph(n={self.vertex_count}, arcs={list(self.arcs)})"


@dataclass(frozen=True)
class DegreeProfile:
    in_degrees: tuple[int, ...]
    out_degrees: tuple[int, ...]

    def __iter__(self):
        return iter(zip(self.in_degrees, self.out_degrees))


def degree_profile(g: MultiDigraph) -> DegreeProfile:
    return DegreeProfile(
        tuple(len(x) for x in g.in_arcs),
        tuple(len(x) for x in g.out_arcs),
    )


def is_eulerian(g: MultiDigraph) -> bool:
    return all(len(i) == len(o) for i, o in zip(g.in_arcs, g.out_arcs))


def is_quartic(g: MultiDigraph) -> bool:
    return all(len(i) == 2 and len(o) == 2 for i, o in zip(g.in_arcs, g.out_arcs))


def require_eulerian(g: MultiDigraph) -> None:
    if not is_eulerian(g):
        bad = next(v for v in range(g.vertex_count) if len(g.in_arcs[v]) != len(g.out_arcs[v]))
        raise NotEulerianError(
            f"vertex {bad} has in-degree {len(g.in_arcs[bad])} "
            f"and out-degree {len(g.out_arcs[bad])}"
        )


def normalize(g: MultiDigraph) -> MultiDigraph:
    """Delete isolated vertices and suppress every vertex of degree 2.

    Suppressing v with in-arc u->v and out-arc v->w rewrites the in-arc to
    u->w (a loop when u == w) and drops the out-arc.  A vertex whose only
    incidence is one loop is deleted with its loop.  Suppression never
    changes the degree of another vertex, so a single pass is enough.
    Surviving arcs keep their relative order; vertices are re-packed.
    """
    require_eulerian(g)
    n = g.vertex_count
    tails = [t for t, _ in g.arcs]
    heads = [h for _, h in g.arcs]
    alive_arc = [True] * len(g.arcs)
    ins = [set(x) for x in g.in_arcs]
    outs = [set(x) for x in g.out_arcs]
    alive_vertex = [True] * n
    for v in range(n):
        deg = len(ins[v]) + len(outs[v])
        if deg == 0:
            alive_vertex[v] = False
        elif deg == 2:
            (a,) = ins[v]
            (b,) = outs[v]
            alive_vertex[v] = False
            if a == b:
                alive_arc[a] = False
                ins[v].clear()
                outs[v].clear()
                continue
            w = heads[b]
            ins[v].discard(a)
            outs[v].discard(b)
            ins[w].discard(b)
            ins[w].add(a)
            heads[a] = w
            alive_arc[b] = False
    return _repack(n, tails, heads, alive_arc, alive_vertex)


def _repack(n, tails, heads, alive_arc, alive_vertex) -> MultiDigraph:
    index = {}
    for v in range(n):
        if alive_vertex[v]:
            index[v] = len(index)
    arcs = [(index[tails[a]], index[heads[a]]) for a in range(len(tails)) if alive_arc[a]]
    return MultiDigraph(len(index), arcs)


def delete_arcs(g: MultiDigraph, arc_ids: Iterable[int]) -> MultiDigraph:
    """Drop arcs by id, keeping every vertex (no normalization)."""
    drop = set(arc_ids)
    return MultiDigraph(g.vertex_count, [e for a, e in enumerate(g.arcs) if a not in drop])


def permute(g: MultiDigraph, perm: Sequence[int], arc_order: Sequence[int] | None = None) -> MultiDigraph:
    """Relabel vertex v as perm[v]; optionally reorder arcs (new arc i = old arc_order[i])."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("perm must be a permutation of the vertices")
    order = range(g.arc_count) if arc_order is None else arc_order
    return MultiDigraph(g.vertex_count, [(perm[g.arcs[a][0]], perm[g.arcs[a][1]]) for a in order])


def disjoint_union(*graphs: MultiDigraph) -> MultiDigraph:
    arcs = []
    offset = 0
    for h in graphs:
        arcs.extend((t + offset, hd + offset) for t, hd in h.arcs)
        offset += h.vertex_count
    return MultiDigraph(offset, arcs)


def directed_cycle(n: int) -> MultiDigraph:
    return MultiDigraph(n, [(i, (i + 1) % n) for i in range(n)])


def weak_components(g: MultiDigraph) -> list[tuple[list[int], list[int]]]:
    """Weak components as (sorted original vertices, sorted original arc ids)."""
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in g.arcs:
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[max(rt, rh)] = min(rt, rh)
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(find(v), ([], []))[0].append(v)
    for a, (t, _) in enumerate(g.arcs):
        groups[find(t)][1].append(a)
    return [groups[r] for r in sorted(groups)]


def induced(g: MultiDigraph, vertices: Sequence[int], arc_ids: Sequence[int]) -> MultiDigraph:
    index = {v: i for i, v in enumerate(vertices)}
    return MultiDigraph(len(vertices), [(index[g.arcs[a][0]], index[g.arcs[a][1]]) for a in arc_ids])


def components(g: MultiDigraph) -> list[MultiDigraph]:
    """Weak components, ordered by smallest original vertex.

    Component i relabels ``weak_components(g)[i][0]`` in increasing order,
    which is the back-map to the original vertices.
    """
    return [induced(g, vs, arcs) for vs, arcs in weak_components(g)]


def is_weakly_connected(g: MultiDigraph) -> bool:
    return len(weak_components(g)) <= 1


def cut_balance(g: MultiDigraph, part: Iterable[int]) -> tuple[int, int]:
    """Return (#arcs A->B, #arcs B->A) for A = part and B its complement."""
    side = set(part)
    forward = sum(1 for t, h in g.arcs if t in side and h not in side)
    backward = sum(1 for t, h in g.arcs if h in side and t not in side)
    return forward, backward


def loop_count(g: MultiDigraph) -> int:
    return sum(1 for t, h in g.arcs if t == h)


def max_undirected_multiplicity(g: MultiDigraph) -> int:
    m = g.matrix
    best = 0
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            best = max(best, m[u][v] + m[v][u])
    return best
