"""Generators for the known obstruction families and the directed medial construction.

Vertex labels are fixed per family so canonical forms are reproducible:

* ``doubled_cycle(n)``: vertex i, arcs i -> i+1 twice.
* ``mobius_ladder_plus(n)``: rim vertex i (1..2n) is label i - 1.
* ``circulant_z(n)``: vertex i, arcs i -> i+1 and i -> i+k, n = 2k + 1.
* ``anti_ladder(n)``: s_i = 2i, t_i = 2i + 1.
* ``n_chain(n_1, ..., n_p)``: each block lists its pinch vertex and then its
  anti-digons (s, t) left to right.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Sequence

from .canon import canonical_form
from .embedding import genus, map_faces, search_embedding
from .graph import MultiDigraph, is_weakly_connected


@dataclass(frozen=True)
class FamilyId:
    tag: str
    params: tuple[int, ...] = ()

    def __str__(self):
        if not self.params:
            return self.tag
        return f"{self.tag}({','.join(map(str, self.params))})"


def doubled_cycle(n: int) -> MultiDigraph:
    if n < 3:
        raise ValueError("doubled cycle needs n >= 3")
    arcs = []
    for i in range(n):
        arcs += [(i, (i + 1) % n)] * 2
    return MultiDigraph(n, arcs)


def mobius_ladder_plus(n: int) -> MultiDigraph:
    """Directed cycle 1..2n plus arc (i, i+n) for even i and (i, i-1) for odd i."""
    if n < 3 or n % 2 == 0:
        raise ValueError("Mobius ladder needs odd n >= 3")
    m = 2 * n

    def lab(i):
        return (i - 1) % m

    arcs = [(lab(i), lab(i + 1)) for i in range(1, m + 1)]
    for i in range(1, m + 1):
        arcs.append((lab(i), lab(i + n)) if i % 2 == 0 else (lab(i), lab(i - 1)))
    return MultiDigraph(m, arcs)


def circulant_z(n: int) -> MultiDigraph:
    """Cayley digraph of Z_n, n = 2k + 1, with generators 1 and k."""
    if n < 3 or n % 2 == 0:
        raise ValueError("circulant needs odd n >= 3")
    k = n // 2
    arcs = []
    for i in range(n):
        arcs += [(i, (i + 1) % n), (i, (i + k) % n)]
    return MultiDigraph(n, arcs)


def anti_ladder(n: int) -> MultiDigraph:
    """Cyclic sequence of n anti-digons s_i => t_i, neighbours linked t_i -> s_{i+1}, t_{i+1} -> s_i."""
    if n < 2:
        raise ValueError("anti-ladder needs n >= 2")
    arcs = []
    for i in range(n):
        arcs += [(2 * i, 2 * i + 1)] * 2
    for i in range(n):
        j = (i + 1) % n
        arcs += [(2 * i + 1, 2 * j), (2 * j + 1, 2 * i)]
    return MultiDigraph(2 * n, arcs)


def n_chain(*ns: int) -> MultiDigraph:
    """Blocks of n_i linked anti-digons glued cyclically at pinch vertices."""
    if len(ns) == 1 and not isinstance(ns[0], int):
        ns = tuple(ns[0])
    if not ns or any(k < 1 for k in ns):
        raise ValueError("n_chain needs p >= 1 positive block sizes")
    pinches = []
    blocks = []
    count = 0
    for k in ns:
        pinches.append(count)
        count += 1
        blocks.append([(count + 2 * j, count + 2 * j + 1) for j in range(k)])
        count += 2 * k
    arcs = []
    p = len(ns)
    for i, block in enumerate(blocks):
        x, y = pinches[i], pinches[(i + 1) % p]
        for s, t in block:
            arcs += [(s, t), (s, t)]
        for (s, t), (s2, t2) in zip(block, block[1:]):
            arcs += [(t, s2), (t2, s)]
        s_first, t_first = block[0]
        s_last, t_last = block[-1]
        arcs += [(x, s_first), (t_first, x), (t_last, y), (y, s_last)]
    return MultiDigraph(count, arcs)


# -- plane maps and the directed medial -------------------------------------------------


def find_plane_rotation(g: MultiDigraph) -> tuple[tuple[int, ...], ...] | None:
    """Brute-force a genus-0 rotation for a small connected undirected graph (arcs as edges)."""
    options = []
    for v in range(g.vertex_count):
        darts = sorted([2 * a for a in g.out_arcs[v]] + [2 * a + 1 for a in g.in_arcs[v]])
        if not darts:
            options.append([()])
            continue
        first, rest = darts[0], darts[1:]
        options.append([(first,) + p for p in permutations(rest)])
    for rho in product(*options):
        if genus(g, rho, alternating=False) == [0]:
            return tuple(rho)
    return None


def random_plane_graph(rng: random.Random, vertices: int, chords: int):
    """Random connected plane multigraph as (graph, rotation).

    Grows a random tree (planar under any rotation), then repeatedly joins
    two corners of one face, which splits that face and keeps genus 0.
    """
    arcs: list[tuple[int, int]] = []
    rot: list[list[int]] = [[]]
    for i in range(1, vertices):
        u = rng.randrange(i)
        a = len(arcs)
        arcs.append((u, i))
        rot[u].insert(rng.randrange(len(rot[u]) + 1), 2 * a)
        rot.append([2 * a + 1])
    for _ in range(chords):
        g = MultiDigraph(vertices, arcs)
        faces = [f for f in map_faces(g, rot) if len(f) >= 2]
        if not faces:
            break
        face = rng.choice(faces)
        k, l = sorted(rng.sample(range(len(face)), 2))
        a = len(arcs)
        corners = []
        for idx in (k, l):
            # the corner in front of face[idx] sits right after the dart that precedes it
            before = face[idx - 1] ^ 1
            corners.append(before)
        x = _dart_vertex(arcs, face[k])
        y = _dart_vertex(arcs, face[l])
        if rng.random() < 0.5:
            arcs.append((x, y))
            new_darts = (2 * a, 2 * a + 1)
        else:
            arcs.append((y, x))
            new_darts = (2 * a + 1, 2 * a)
        for vertex, before, d in zip((x, y), corners, new_darts):
            r = rot[vertex]
            r.insert(r.index(before) + 1, d)
    g = MultiDigraph(vertices, arcs)
    rho = tuple(tuple(r) for r in rot)
    return g, rho


def _dart_vertex(arcs, d: int) -> int:
    t, h = arcs[d >> 1]
    return h if d & 1 else t


def directed_medial(g: MultiDigraph, rho: Sequence[Sequence[int]]) -> MultiDigraph:
    """Medial of a plane map with every facial walk directed by the map orientation.

    Vertex e of the result is edge (arc id) e of g; consecutive edges e, f on
    a facial walk give the arc e -> f.
    """
    if g.arc_count == 0 or not is_weakly_connected(g):
        raise ValueError("medial construction needs a connected graph with at least one edge")
    if genus(g, rho, alternating=False) != [0]:
        raise ValueError("rotation system is not a plane embedding")
    arcs = []
    for face in map_faces(g, rho):
        k = len(face)
        for i in range(k):
            arcs.append((face[i] >> 1, face[(i + 1) % k] >> 1))
    return MultiDigraph(g.arc_count, arcs)


def plane_tetrahedron() -> tuple[MultiDigraph, tuple[tuple[int, ...], ...]]:
    k4 = MultiDigraph(4, list(combinations(range(4), 2)))
    return k4, find_plane_rotation(k4)


# -- sporadic examples ----------------------------------------------------------------


def oriented_k222() -> MultiDigraph:
    """Octahedron with all faces directed, then two same-class facial triangles reversed.

    Same-class faces of the octahedron share exactly one vertex.
    """
    octa = directed_medial(*plane_tetrahedron())
    cert = search_embedding(octa).certificate
    f1, f2 = cert.faces[0], cert.faces[1]
    shared = {octa.arcs[a][0] for a in f1} & {octa.arcs[a][0] for a in f2}
    if len(f1) != 3 or len(f2) != 3 or len(shared) != 1:
        raise RuntimeError("unexpected octahedron face structure")
    flip = set(f1) | set(f2)
    arcs = [(h, t) if a in flip else (t, h) for a, (t, h) in enumerate(octa.arcs)]
    return MultiDigraph(octa.vertex_count, arcs)


def k44_eulerian_orientations() -> list[MultiDigraph]:
    """All 2-in/2-out orientations of K_{4,4} up to isomorphism, sorted by canonical form."""
    left, right = range(4), range(4, 8)
    found: dict[bytes, MultiDigraph] = {}
    for outs in product(list(combinations(right, 2)), repeat=4):
        indeg = {r: 0 for r in right}
        for chosen in outs:
            for r in chosen:
                indeg[r] += 1
        if any(d != 2 for d in indeg.values()):
            continue
        arcs = []
        for l, chosen in zip(left, outs):
            for r in right:
                arcs.append((l, r) if r in chosen else (r, l))
        g = MultiDigraph(8, arcs)
        found.setdefault(canonical_form(g), g)
    return [found[k] for k in sorted(found)]


@lru_cache(maxsize=None)
def _k44_candidates() -> tuple[MultiDigraph, ...]:
    from .obstruction import obstruction_verdict

    return tuple(g for g in k44_eulerian_orientations() if obstruction_verdict(g))


def oriented_k44_candidates() -> list[MultiDigraph]:
    return list(_k44_candidates())


# -- digon expansions of the doubled triangle -------------------------------------------


@lru_cache(maxsize=None)
def _c3_expansions() -> tuple[tuple[int, MultiDigraph], ...]:
    from .transform import SplitSpec, expand_obstruction, is_admissible_splitting

    h = doubled_cycle(3)
    found: dict[bytes, tuple[int, MultiDigraph]] = {}
    for size in (1, 2, 3):
        for vs in combinations(range(3), size):
            for pairings in product((0, 1), repeat=size):
                if not all(is_admissible_splitting(h, v, p) for v, p in zip(vs, pairings)):
                    continue
                g = expand_obstruction(h, [SplitSpec(v, p, 1) for v, p in zip(vs, pairings)])
                found.setdefault(canonical_form(g), (size, g))
    return tuple(found[k] for k in sorted(found, key=lambda k: (found[k][0], k)))


def c3_digon_expansions(splits: int | None = None) -> list[MultiDigraph]:
    """Admissible one-digon expansions of the doubled triangle, up to isomorphism."""
    return [g for size, g in _c3_expansions() if splits is None or size == splits]


def mobius3_plus() -> MultiDigraph:
    """The full three-digon expansion isomorphic to ``mobius_ladder_plus(3)``."""
    key = canonical_form(mobius_ladder_plus(3))
    for g in c3_digon_expansions(3):
        if canonical_form(g) == key:
            return g
    raise RuntimeError("no full expansion of the doubled triangle matches M_3^+")


def prism3_plus() -> MultiDigraph:
    """The other full three-digon expansion."""
    key = canonical_form(mobius_ladder_plus(3))
    others = [g for g in c3_digon_expansions(3) if canonical_form(g) != key]
    if len(others) != 1:
        raise RuntimeError(f"expected one non-Mobius full expansion, found {len(others)}")
    return others[0]


# -- lookup ------------------------------------------------------------------------------


def compositions(total: int) -> list[tuple[int, ...]]:
    if total == 0:
        return [()]
    out = []
    for first in range(1, total + 1):
        out += [(first,) + rest for rest in compositions(total - first)]
    return out


def n_chain_parameters(vertex_count: int) -> list[tuple[int, ...]]:
    """All (n_1..n_p) with p + 2 * sum = vertex_count, one per rotation/reflection class."""
    seen = set()
    result = []
    for p in range(1, vertex_count + 1):
        rest = vertex_count - p
        if rest < 2 * p or rest % 2:
            continue
        for comp in compositions(rest // 2):
            if len(comp) != p:
                continue
            variants = [comp[i:] + comp[:i] for i in range(p)]
            variants += [tuple(reversed(x)) for x in variants]
            key = min(variants)
            if key not in seen:
                seen.add(key)
                result.append(key)
    return result


def family_members(n_max: int) -> list[tuple[FamilyId, MultiDigraph]]:
    """Every named family member with at most n_max vertices."""
    members: list[tuple[FamilyId, MultiDigraph]] = []
    for n in range(3, n_max + 1):
        members.append((FamilyId("doubled-cycle", (n,)), doubled_cycle(n)))
    for n in range(5, n_max + 1, 2):
        members.append((FamilyId("z", (n,)), circulant_z(n)))
    for n in range(3, n_max // 2 + 1, 2):
        members.append((FamilyId("mobius-ladder", (n,)), mobius_ladder_plus(n)))
    if n_max >= 6:
        members.append((FamilyId("k222"), oriented_k222()))
        members.append((FamilyId("prism3"), prism3_plus()))
    if n_max >= 8:
        for i, g in enumerate(oriented_k44_candidates()):
            members.append((FamilyId("k44", (i,)), g))
    for n in range(2, n_max // 2 + 1):
        members.append((FamilyId("anti-ladder", (n,)), anti_ladder(n)))
    for n in range(3, n_max + 1):
        for params in n_chain_parameters(n):
            members.append((FamilyId("nchain", params), n_chain(*params)))
    return members


GENERATOR_NAMES = (
    "doubled-cycle", "mobius-ladder", "z", "k222", "k44", "anti-ladder", "nchain", "prism3", "mobius3",
)


def generate(tag: str, params: Sequence[int] = ()) -> MultiDigraph:
    """Build a family member from a CLI-style tag."""
    params = tuple(params)

    def one():
        if len(params) != 1:
            raise ValueError(f"{tag} takes exactly one parameter")
        return params[0]

    if tag == "doubled-cycle":
        return doubled_cycle(one())
    if tag == "mobius-ladder":
        return mobius_ladder_plus(one())
    if tag == "z":
        return circulant_z(one())
    if tag == "anti-ladder":
        return anti_ladder(one())
    if tag == "nchain":
        return n_chain(*params)
    if tag == "k222":
        return oriented_k222()
    if tag == "k44":
        idx = params[0] if params else 0
        cands = oriented_k44_candidates()
        if not 0 <= idx < len(cands):
            raise ValueError(f"k44 index must be in 0..{len(cands) - 1}")
        return cands[idx]
    if tag == "prism3":
        return prism3_plus()
    if tag == "mobius3":
        return mobius3_plus()
    raise ValueError(f"unknown family {tag!r}; choose from {', '.join(GENERATOR_NAMES)}")
