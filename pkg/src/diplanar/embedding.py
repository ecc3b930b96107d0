"""Alternating rotation systems, face tracing and the diplanarity search.

Darts: arc ``a`` has out-dart ``2a`` at its tail and in-dart ``2a + 1`` at its
head, so ``d ^ 1`` is the opposite dart.  A rotation system lists, for every
vertex, the cyclic order of its darts.  Faces are the orbits of
``phi(d) = sigma(d ^ 1)`` where ``sigma`` is "next dart in the rotation".

With alternating rotations an orbit that starts on an out-dart only ever
visits out-darts, so the faces split into two orientation classes: orbits of
out-darts traverse their arcs forwards ("directed faces") and orbits of
in-darts traverse them backwards.  Each arc is on exactly one face of each
class.  The Euler formula uses both classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .graph import MultiDigraph, require_eulerian, weak_components

LocalRotation = tuple[int, ...]
RotationSystem = tuple[LocalRotation, ...]


class RotationError(ValueError):
    pass


def out_dart(a: int) -> int:
    return 2 * a


def in_dart(a: int) -> int:
    return 2 * a + 1


def dart_arc(d: int) -> int:
    return d >> 1


def is_out_dart(d: int) -> bool:
    return not d & 1


def reverse(d: int) -> int:
    return d ^ 1


def darts_at(g: MultiDigraph, v: int) -> tuple[list[int], list[int]]:
    """(in-darts, out-darts) at v, each sorted."""
    return sorted(in_dart(a) for a in g.in_arcs[v]), sorted(out_dart(a) for a in g.out_arcs[v])


def alternating_rotations(g: MultiDigraph, v: int) -> list[LocalRotation]:
    """All alternating cyclic orders at v, written starting from the smallest in-dart.

    Degree 4 with in-darts i1 < i2 and out-darts o1 < o2 gives
    ``(i1, o1, i2, o2)`` (choice 0) and ``(i1, o2, i2, o1)`` (choice 1).
    """
    ins, outs = darts_at(g, v)
    if len(ins) == 1 and len(outs) == 1:
        return [(ins[0], outs[0])]
    if len(ins) == 2 and len(outs) == 2:
        i1, i2 = ins
        o1, o2 = outs
        return [(i1, o1, i2, o2), (i1, o2, i2, o1)]
    raise RotationError(f"vertex {v} has in/out degree {len(ins)}/{len(outs)}; need 1/1 or 2/2")


def _sigma(g: MultiDigraph, rho: Sequence[Sequence[int]], alternating: bool) -> list[int]:
    if len(rho) != g.vertex_count:
        raise RotationError("rotation system must list every vertex")
    sigma = [-1] * (2 * g.arc_count)
    for v, rot in enumerate(rho):
        ins, outs = darts_at(g, v)
        if sorted(rot) != sorted(ins + outs):
            raise RotationError(f"rotation at vertex {v} does not list exactly its darts")
        k = len(rot)
        for i, d in enumerate(rot):
            nxt = rot[(i + 1) % k]
            if alternating and k > 0 and is_out_dart(d) == is_out_dart(nxt):
                raise RotationError(f"rotation at vertex {v} is not alternating")
            sigma[d] = nxt
    return sigma


def _orbits(sigma: list[int], darts: Sequence[int]) -> list[list[int]]:
    seen = set()
    orbits = []
    for start in darts:
        if start in seen:
            continue
        orbit = []
        d = start
        while d not in seen:
            seen.add(d)
            orbit.append(d)
            d = sigma[d ^ 1]
        orbits.append(orbit)
    return orbits


def map_faces(g: MultiDigraph, rho: Sequence[Sequence[int]], alternating: bool = False) -> list[list[int]]:
    """All faces of the combinatorial map (rho, dart involution) as dart orbits."""
    sigma = _sigma(g, rho, alternating)
    return _orbits(sigma, range(2 * g.arc_count))


def trace_faces(g: MultiDigraph, rho: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Directed faces: arriving at v by an in-dart, leave by the next dart in v's rotation.

    Each face is returned as its arc ids in arc direction, starting from the
    smallest out-dart not yet used.
    """
    sigma = _sigma(g, rho, alternating=True)
    orbits = _orbits(sigma, [out_dart(a) for a in range(g.arc_count)])
    return [tuple(dart_arc(d) for d in orbit) for orbit in orbits]


def backward_faces(g: MultiDigraph, rho: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """The other orientation class; arcs listed in the order the orbit meets them."""
    sigma = _sigma(g, rho, alternating=True)
    orbits = _orbits(sigma, [in_dart(a) for a in range(g.arc_count)])
    return [tuple(dart_arc(d) for d in orbit) for orbit in orbits]


def _component_genus(v_count: int, e_count: int, f_count: int) -> int:
    if e_count == 0:
        return 0
    twice = 2 - v_count + e_count - f_count
    if twice < 0 or twice % 2:
        raise RotationError(f"inconsistent Euler characteristic: V={v_count} E={e_count} F={f_count}")
    return twice // 2


def genus(g: MultiDigraph, rho: Sequence[Sequence[int]], alternating: bool = True) -> list[int]:
    """Orientable genus of the map induced by rho, per weak component."""
    sigma = _sigma(g, rho, alternating)
    result = []
    for vs, arcs in weak_components(g):
        darts = [d for a in arcs for d in (2 * a, 2 * a + 1)]
        faces = len(_orbits(sigma, darts))
        result.append(_component_genus(len(vs), len(arcs), faces))
    return result


def rotation_systems(g: MultiDigraph) -> Iterator[RotationSystem]:
    """Every alternating rotation system, in lexicographic choice order."""
    options = [alternating_rotations(g, v) if g.degree(v) else [()] for v in range(g.vertex_count)]
    for choice in product(*options):
        yield tuple(choice)


@dataclass(frozen=True)
class EmbeddingCertificate:
    rotation: RotationSystem
    faces: tuple[tuple[int, ...], ...]
    genera: tuple[int, ...]

    @property
    def diplanar(self) -> bool:
        return all(x == 0 for x in self.genera)


@dataclass(frozen=True)
class EmbeddingSearch:
    """Outcome of the exhaustive rotation-system search."""

    diplanar: bool
    certificate: EmbeddingCertificate | None
    min_genus: int
    systems_examined: int
    component_genera: tuple[int, ...]
    rotation: RotationSystem = ()


def _check_searchable(g: MultiDigraph) -> None:
    require_eulerian(g)
    for v in range(g.vertex_count):
        if g.degree(v) > 4:
            raise ValueError(f"vertex {v} has degree {g.degree(v)} > 4")


def _search_component(g: MultiDigraph, vertices: list[int], arcs: list[int], sigma: list[int]):
    """Minimise genus over one component; returns (genus, chosen rotations, examined)."""
    if not arcs:
        return 0, {v: () for v in vertices}, 1
    fixed: dict[int, LocalRotation] = {}
    free: list[int] = []
    options: dict[int, list[LocalRotation]] = {}
    for v in vertices:
        opts = alternating_rotations(g, v)
        if len(opts) == 1:
            fixed[v] = opts[0]
        else:
            free.append(v)
            options[v] = opts
    for rot in fixed.values():
        for i, d in enumerate(rot):
            sigma[d] = rot[(i + 1) % len(rot)]
    darts = [d for a in arcs for d in (2 * a, 2 * a + 1)]
    planar_faces = 2 - len(vertices) + len(arcs)
    # each free vertex has exactly two choices; precompute their sigma writes
    writes = [
        [[(rot[i], rot[(i + 1) % 4]) for i in range(4)] for rot in options[v]]
        for v in free
    ]
    best_faces = -1
    best_choice = None
    examined = 0
    seen = bytearray(len(sigma))
    for choice in product((0, 1), repeat=len(free)):
        for w, c in zip(writes, choice):
            for d, nxt in w[c]:
                sigma[d] = nxt
        examined += 1
        for d in darts:
            seen[d] = 0
        faces = 0
        for start in darts:
            if seen[start]:
                continue
            faces += 1
            d = start
            while not seen[d]:
                seen[d] = 1
                d = sigma[d ^ 1]
        if faces > best_faces:
            best_faces = faces
            best_choice = choice
            if faces == planar_faces:
                break
    chosen = dict(fixed)
    for v, c in zip(free, best_choice):
        chosen[v] = options[v][c]
    return _component_genus(len(vertices), len(arcs), best_faces), chosen, examined


def search_embedding(g: MultiDigraph) -> EmbeddingSearch:
    """Exhaustive minimum-genus search over alternating rotation systems.

    Components are independent; within a component the first genus-0 system
    in lexicographic choice order (vertices in index order, choice 0 before
    1) is reported.  ``rotation`` is always a minimum-genus system, so a
    negative answer still comes with an embedding that can be re-checked.
    """
    _check_searchable(g)
    sigma = [-1] * (2 * g.arc_count)
    rotation: list[LocalRotation] = [()] * g.vertex_count
    genera = []
    examined = 0
    for vs, arcs in weak_components(g):
        gc, chosen, count = _search_component(g, vs, arcs, sigma)
        genera.append(gc)
        examined += count
        for v, rot in chosen.items():
            rotation[v] = rot
    total = sum(genera)
    cert = None
    if total == 0:
        rho = tuple(rotation)
        cert = EmbeddingCertificate(rho, tuple(trace_faces(g, rho)), tuple(genera))
    return EmbeddingSearch(total == 0, cert, total, examined, tuple(genera), tuple(rotation))


def certificate_for(g: MultiDigraph, rho: Sequence[Sequence[int]]) -> EmbeddingCertificate:
    rho = tuple(tuple(r) for r in rho)
    return EmbeddingCertificate(rho, tuple(trace_faces(g, rho)), tuple(genus(g, rho)))


def is_diplanar(g: MultiDigraph) -> tuple[bool, EmbeddingCertificate | None]:
    result = search_embedding(g)
    return result.diplanar, result.certificate


def min_directed_genus(g: MultiDigraph) -> int:
    """Sum over weak components of the minimum orientable alternating genus."""
    return search_embedding(g).min_genus
