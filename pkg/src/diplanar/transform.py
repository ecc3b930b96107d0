"""Digon contraction, vertex splitting and digon-path insertion.

None of these operations normalizes its result: a split leaves two degree-2
vertices in place so that a digon path can be attached to them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canon import canonical_form
from .embedding import is_diplanar
from .graph import MultiDigraph


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class DigonRef:
    u: int
    v: int
    arc_uv: int
    arc_vu: int


@dataclass(frozen=True)
class AntiDigonRef:
    u: int
    v: int
    arc1: int
    arc2: int


@dataclass(frozen=True)
class SplitSpec:
    """Split ``vertex`` with dart pairing 0 or 1 and attach ``length`` digons.

    With in-arcs a < b and out-arcs c < d at the vertex, pairing 0 keeps
    (a, c) on the original vertex and moves (b, d) to a new one; pairing 1
    keeps (a, d) and moves (b, c).
    """

    vertex: int
    pairing: int
    length: int = 1

    @classmethod
    def parse(cls, text: str) -> "SplitSpec":
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise TransformError(f"bad split spec {text!r}; expected v:pairing[:p]")
        try:
            nums = [int(x) for x in parts]
        except ValueError as exc:
            raise TransformError(f"bad split spec {text!r}") from exc
        spec = cls(*nums)
        if spec.pairing not in (0, 1) or spec.length < 1:
            raise TransformError(f"bad split spec {text!r}")
        return spec

    def __str__(self):
        return f"{self.vertex}:{self.pairing}:{self.length}"


def find_digons(g: MultiDigraph) -> list[DigonRef]:
    """Every arc pair u->v, v->u (u < v), sorted by smaller arc id."""
    found = []
    for x, (u, v) in enumerate(g.arcs):
        if u >= v:
            continue
        for y in g.out_arcs[v]:
            if g.arcs[y][1] == u:
                found.append(DigonRef(u, v, x, y))
    found.sort(key=lambda d: (min(d.arc_uv, d.arc_vu), max(d.arc_uv, d.arc_vu)))
    return found


def find_antidigons(g: MultiDigraph) -> list[AntiDigonRef]:
    found = []
    for x, (u, v) in enumerate(g.arcs):
        if u == v:
            continue
        for y in g.out_arcs[u]:
            if y > x and g.arcs[y][1] == v:
                found.append(AntiDigonRef(u, v, x, y))
    return found


def _check_digon(g: MultiDigraph, d: DigonRef) -> None:
    ok = (
        0 <= d.arc_uv < g.arc_count and 0 <= d.arc_vu < g.arc_count
        and d.u != d.v
        and g.arcs[d.arc_uv] == (d.u, d.v)
        and g.arcs[d.arc_vu] == (d.v, d.u)
    )
    if not ok:
        raise TransformError(f"{d} is not a digon of the graph")


def _merge(g: MultiDigraph, groups: list[list[int]], drop: set[int]) -> MultiDigraph:
    """Identify each vertex group into its smallest member, delete arcs in drop, repack."""
    rep = list(range(g.vertex_count))
    for grp in groups:
        r = min(grp)
        for x in grp:
            rep[x] = r
    keep = sorted(set(rep))
    index = {v: i for i, v in enumerate(keep)}
    arcs = [(index[rep[t]], index[rep[h]]) for a, (t, h) in enumerate(g.arcs) if a not in drop]
    return MultiDigraph(len(keep), arcs)


def contract_digon(g: MultiDigraph, d: DigonRef) -> MultiDigraph:
    """Identify the digon's ends (into the smaller index) and delete its two arcs."""
    _check_digon(g, d)
    return _merge(g, [[d.u, d.v]], {d.arc_uv, d.arc_vu})


def contract_digons(g: MultiDigraph) -> MultiDigraph:
    """Contract a greedy (arc-id order) set of pairwise vertex-disjoint digons at once."""
    used: set[int] = set()
    groups, drop = [], set()
    for d in find_digons(g):
        if d.u in used or d.v in used:
            continue
        used.update((d.u, d.v))
        groups.append([d.u, d.v])
        drop.update((d.arc_uv, d.arc_vu))
    return _merge(g, groups, drop)


def digon_free_kernel(g: MultiDigraph) -> MultiDigraph:
    """Contract digons one at a time, always the one with the lowest arc id."""
    while True:
        digons = find_digons(g)
        if not digons:
            return g
        g = contract_digon(g, digons[0])


def kernel_forms(g: MultiDigraph) -> set[bytes]:
    """Canonical forms of every digon-free graph reachable by contracting digons in any order."""
    terminals: set[bytes] = set()
    seen: set[bytes] = set()
    stack = [g]
    while stack:
        h = stack.pop()
        key = canonical_form(h)
        if key in seen:
            continue
        seen.add(key)
        digons = find_digons(h)
        if not digons:
            terminals.add(key)
        for d in digons:
            stack.append(contract_digon(h, d))
    return terminals


def split_pairs(g: MultiDigraph, v: int, pairing: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """((in-arc, out-arc) kept at v, (in-arc, out-arc) moved to the new vertex)."""
    ins = sorted(g.in_arcs[v])
    outs = sorted(g.out_arcs[v])
    if len(ins) != 2 or len(outs) != 2:
        raise TransformError(f"vertex {v} must have in- and out-degree 2 to be split")
    if pairing == 0:
        return (ins[0], outs[0]), (ins[1], outs[1])
    if pairing == 1:
        return (ins[0], outs[1]), (ins[1], outs[0])
    raise TransformError(f"pairing must be 0 or 1, got {pairing}")


def split_vertex(g: MultiDigraph, v: int, pairing: int) -> tuple[MultiDigraph, int, int]:
    """Split v into v (first pair) and a new last vertex (second pair).

    Returns (graph, v1, v2).  Arc ids are unchanged; only endpoints at v move.
    """
    _, (moved_in, moved_out) = split_pairs(g, v, pairing)
    new = g.vertex_count
    arcs = list(g.arcs)
    t, h = arcs[moved_in]
    arcs[moved_in] = (t, new)
    t, h = arcs[moved_out]
    arcs[moved_out] = (new, h)
    return MultiDigraph(new + 1, arcs), v, new


def add_digon_path(g: MultiDigraph, v1: int, v2: int, p: int) -> MultiDigraph:
    """Join degree-2 vertices v1, v2 by a path of p digons through p - 1 new vertices."""
    if p < 1:
        raise TransformError("digon path length must be at least 1")
    for x in (v1, v2):
        if len(g.in_arcs[x]) != 1 or len(g.out_arcs[x]) != 1:
            raise TransformError(f"vertex {x} must have in- and out-degree 1")
    if v1 == v2:
        raise TransformError("digon path endpoints must differ")
    chain = [v1] + list(range(g.vertex_count, g.vertex_count + p - 1)) + [v2]
    arcs = list(g.arcs)
    for a, b in zip(chain, chain[1:]):
        arcs.append((a, b))
        arcs.append((b, a))
    return MultiDigraph(g.vertex_count + p - 1, arcs)


def is_admissible_splitting(g: MultiDigraph, v: int, pairing: int) -> bool:
    return is_diplanar(split_vertex(g, v, pairing)[0])[0]


def expand_obstruction(h: MultiDigraph, specs: Sequence[SplitSpec], check_admissible: bool = True) -> MultiDigraph:
    """Split each listed vertex of h and attach its digon path.

    Splits refer to h's vertex and arc ids, which earlier splits leave
    unchanged.  The result is not checked here; callers verify it.
    """
    vertices = [s.vertex for s in specs]
    if len(set(vertices)) != len(vertices):
        raise TransformError("splits must be at distinct vertices")
    if check_admissible:
        for s in specs:
            if not is_admissible_splitting(h, s.vertex, s.pairing):
                raise TransformError(f"splitting {s.vertex} with pairing {s.pairing} is not admissible")
    g = h
    ends = []
    for s in specs:
        g, v1, v2 = split_vertex(g, s.vertex, s.pairing)
        ends.append((v1, v2, s.length))
    for v1, v2, p in ends:
        g = add_digon_path(g, v1, v2, p)
    return g
