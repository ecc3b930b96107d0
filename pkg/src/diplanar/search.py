"""Isomorph-free generation of small quartic Eulerian digraphs and the obstruction census.

Generation is orderly (Read/Faradzev style).  A labeled graph is encoded
vertex by vertex: block j is ``A[j][j]`` followed by ``A[i][j], A[j][i]``
for i < j, and the code is the concatenation of blocks.  The accepted
representative of a class is the labeling with the lexicographically
largest code.  Because block j only involves vertices <= j, every prefix
of a maximal code is the maximal code of the induced subgraph on the first
vertices, so non-maximal prefixes are pruned as soon as they appear.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .canon import canonical_form, canonical_graph
from .cycles import iter_directed_cycles
from .families import (
    anti_ladder,
    doubled_cycle,
    family_members,
    n_chain,
    n_chain_parameters,
)
from .graph import MultiDigraph, is_weakly_connected
from .obstruction import lemma2_sanity, obstruction_verdict
from .transform import digon_free_kernel, find_antidigons, find_digons


@dataclass(frozen=True)
class Constraints:
    loop_free: bool = False
    max_multiplicity: int | None = None
    connected: bool = False

    def admits(self, g: MultiDigraph) -> bool:
        if self.loop_free and any(t == h for t, h in g.arcs):
            return False
        if self.max_multiplicity is not None:
            m = g.matrix
            for u in range(g.vertex_count):
                for v in range(u + 1, g.vertex_count):
                    if m[u][v] + m[v][u] > self.max_multiplicity:
                        return False
        return not self.connected or is_weakly_connected(g)


OBSTRUCTION_SEARCH = Constraints(loop_free=True, max_multiplicity=2, connected=True)


def _prefix_is_maximal(a: list[list[int]], k: int) -> bool:
    target = []
    for p in range(k):
        blk = [a[p][p]]
        for i in range(p):
            blk += [a[i][p], a[p][i]]
        target.append(blk)
    perm: list[int] = []
    used = [False] * k

    def rec(p: int) -> bool:
        tgt = target[p]
        for x in range(k):
            if used[x]:
                continue
            row = a[x]
            cmp = (row[x] > tgt[0]) - (row[x] < tgt[0])
            idx = 1
            for q in perm:
                if cmp:
                    break
                val = a[q][x]
                cmp = (val > tgt[idx]) - (val < tgt[idx])
                if not cmp:
                    val = row[q]
                    cmp = (val > tgt[idx + 1]) - (val < tgt[idx + 1])
                idx += 2
            if cmp > 0:
                return False
            if cmp == 0 and p + 1 < k:
                perm.append(x)
                used[x] = True
                ok = rec(p + 1)
                perm.pop()
                used[x] = False
                if not ok:
                    return False
        return True

    return rec(0)


class _Orderly:
    def __init__(self, n: int, constraints: Constraints):
        self.n = n
        self.c = constraints
        self.a = [[0] * n for _ in range(n)]
        self.outd = [0] * n
        self.ind = [0] * n

    def load(self, prefix: tuple[tuple[int, ...], ...], k: int) -> None:
        self.a = [list(r) for r in prefix]
        self.outd = [sum(r) for r in self.a]
        self.ind = [sum(self.a[i][j] for i in range(self.n)) for j in range(self.n)]

    def _feasible(self, j: int) -> bool:
        r = self.n - j - 1
        per_pair = 4 if self.c.max_multiplicity is None else self.c.max_multiplicity
        total_out = total_in = 0
        for i in range(j + 1):
            od = 2 - self.outd[i]
            idg = 2 - self.ind[i]
            if od > 2 * r or idg > 2 * r or od + idg > per_pair * r:
                return False
            total_out += od
            total_in += idg
        return total_out <= 2 * r and total_in <= 2 * r

    def _pairs(self, i: int, j: int) -> Iterator[None]:
        if i == j:
            yield
            return
        a, outd, ind = self.a, self.outd, self.ind
        m = self.c.max_multiplicity
        for x in range(min(2 - outd[i], 2 - ind[j]), -1, -1):
            for y in range(min(2 - ind[i], 2 - outd[j]), -1, -1):
                if m is not None and x + y > m:
                    continue
                a[i][j], a[j][i] = x, y
                outd[i] += x
                ind[j] += x
                outd[j] += y
                ind[i] += y
                yield from self._pairs(i + 1, j)
                outd[i] -= x
                ind[j] -= x
                outd[j] -= y
                ind[i] -= y
                a[i][j] = a[j][i] = 0

    def _blocks(self, j: int) -> Iterator[None]:
        loops = (0,) if self.c.loop_free else (2, 1, 0)
        for lp in loops:
            self.a[j][j] = lp
            self.outd[j] += lp
            self.ind[j] += lp
            yield from self._pairs(0, j)
            self.outd[j] -= lp
            self.ind[j] -= lp
            self.a[j][j] = 0

    def run(self, j: int, stop: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        """Yield maximal prefixes with ``stop`` vertices placed, continuing from vertex j."""
        if j == stop:
            yield tuple(tuple(r) for r in self.a)
            return
        for _ in self._blocks(j):
            if self._feasible(j) and _prefix_is_maximal(self.a, j + 1):
                yield from self.run(j + 1, stop)


def _matrix_graph(m: tuple[tuple[int, ...], ...]) -> MultiDigraph:
    n = len(m)
    return MultiDigraph(n, [(i, j) for i in range(n) for j in range(n) for _ in range(m[i][j])])


def generation_prefixes(n: int, constraints: Constraints, depth: int) -> list[tuple[tuple[int, ...], ...]]:
    """Maximal prefixes on ``depth`` vertices; each roots an independent subtree."""
    return list(_Orderly(n, constraints).run(0, min(depth, n)))


def complete_prefix(n: int, constraints: Constraints, prefix, depth: int) -> Iterator[MultiDigraph]:
    gen = _Orderly(n, constraints)
    gen.load(prefix, depth)
    for m in gen.run(min(depth, n), n):
        g = _matrix_graph(m)
        if constraints.admits(g):
            yield g


def enumerate_quartic_eulerian(n: int, constraints: Constraints = Constraints()) -> Iterator[MultiDigraph]:
    """One representative (the maximal-code labeling) per isomorphism class."""
    if n < 1:
        raise ValueError("n must be at least 1")
    gen = _Orderly(n, constraints)
    for m in gen.run(0, n):
        g = _matrix_graph(m)
        if constraints.admits(g):
            yield g


# -- census ------------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusConfig:
    n_max: int
    n_min: int = 1
    constraints: Constraints = OBSTRUCTION_SEARCH
    lemma2_prune: bool = True
    include_all: bool = False
    jobs: int = 1
    shard_depth: int = 3


@dataclass(frozen=True)
class CensusEntry:
    canonical: bytes
    graph: MultiDigraph
    vertex_count: int
    digons: int
    antidigons: int
    verdict: bool
    family: str = "unclassified"

    def line(self) -> str:
        return "\t".join([
            self.canonical.hex(), str(self.vertex_count), str(self.digons),
            str(self.antidigons), "yes" if self.verdict else "no", self.family,
        ])


def _evaluate(g: MultiDigraph, lemma2_prune: bool) -> bool:
    if lemma2_prune and not lemma2_sanity(g).all_ok:
        return False
    return obstruction_verdict(g)


def _run_shard(args) -> list[tuple[bytes, tuple, bool]]:
    n, constraints, prefix, depth, lemma2_prune, include_all = args
    out = []
    for g in complete_prefix(n, constraints, prefix, depth):
        verdict = _evaluate(g, lemma2_prune)
        if verdict or include_all:
            cg = canonical_graph(g)
            out.append((canonical_form(cg), cg.arcs, verdict))
    return out


class FamilyIndex:
    """Canonical form -> family tags, for members up to n_max vertices."""

    def __init__(self, n_max: int):
        self.tags: dict[bytes, list[str]] = {}
        for fid, g in family_members(n_max):
            self.tags.setdefault(canonical_form(g), []).append(str(fid))

    def lookup(self, g: MultiDigraph, key: bytes | None = None) -> str:
        key = canonical_form(g) if key is None else key
        if key in self.tags:
            return "|".join(self.tags[key])
        if find_digons(g):
            kernel = digon_free_kernel(g)
            kkey = canonical_form(kernel)
            if kkey in self.tags:
                return "expansion:" + "|".join(self.tags[kkey])
            return "expansion:unclassified"
        return "unclassified"


def obstruction_census(config: CensusConfig) -> list[CensusEntry]:
    """All obstruction classes (or all graphs, with include_all) for n_min..n_max vertices.

    Sorted by (vertex count, canonical form); identical for any job count.
    """
    tasks = []
    for n in range(max(1, config.n_min), config.n_max + 1):
        depth = min(config.shard_depth, n)
        for prefix in generation_prefixes(n, config.constraints, depth):
            tasks.append((n, config.constraints, prefix, depth, config.lemma2_prune, config.include_all))
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_shard, tasks, chunksize=1))
    else:
        results = [_run_shard(t) for t in tasks]
    raw = {}
    for shard in results:
        for key, arcs, verdict in shard:
            raw[key] = (arcs, verdict)
    index = FamilyIndex(config.n_max)
    entries = []
    for key in raw:
        arcs, verdict = raw[key]
        g = MultiDigraph(_vertex_count(key), arcs)
        entries.append(CensusEntry(
            canonical=key,
            graph=g,
            vertex_count=g.vertex_count,
            digons=len(find_digons(g)),
            antidigons=len(find_antidigons(g)),
            verdict=verdict,
            family=index.lookup(g, key) if verdict else "-",
        ))
    entries.sort(key=lambda e: (e.vertex_count, e.canonical))
    return entries


def _vertex_count(key: bytes) -> int:
    return int.from_bytes(key[:4], "big")


def census_table(entries: list[CensusEntry]) -> str:
    return "".join(e.line() + "\n" for e in entries)


# -- anti-digon classification -----------------------------------------------------------


@dataclass
class Theorem5Report:
    checked: int = 0
    classified: dict[str, int] = field(default_factory=dict)
    unclassified: list[str] = field(default_factory=list)
    all_cycles_meet_d: list[str] = field(default_factory=list)
    branch_violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unclassified and not self.branch_violations

    def lines(self) -> list[str]:
        out = [f"theorem5 checked {self.checked}"]
        for kind in sorted(self.classified):
            out.append(f"theorem5 classified {kind} {self.classified[kind]}")
        out.append(f"theorem5 every-cycle-meets-D {len(self.all_cycles_meet_d)}")
        out.append(f"theorem5 unclassified {len(self.unclassified)}")
        out += [f"theorem5 unclassified-entry {h}" for h in self.unclassified]
        out += [f"theorem5 branch-violation {h}" for h in self.branch_violations]
        out.append(f"theorem5 {'ok' if self.ok else 'FAILED'}")
        return out


def _antidigon_candidates(n: int) -> list[tuple[str, MultiDigraph]]:
    cands = []
    if n >= 3:
        cands.append((f"doubled-cycle({n})", doubled_cycle(n)))
    if n % 2 == 0 and n >= 4:
        cands.append((f"anti-ladder({n // 2})", anti_ladder(n // 2)))
    for params in n_chain_parameters(n):
        cands.append((f"nchain({','.join(map(str, params))})", n_chain(*params)))
    return cands


def every_cycle_meets(g: MultiDigraph, vertices: set[int]) -> bool:
    return all(any(g.arcs[a][0] in vertices for a in c) for c in iter_directed_cycles(g))


def verify_theorem5(entries: list[CensusEntry]) -> Theorem5Report:
    """Classify every digon-free obstruction with an anti-digon.

    Each must be a doubled cycle, an anti-ladder or an n-chain of its size;
    and whenever every directed cycle meets some anti-digon, it must be a
    doubled cycle.
    """
    report = Theorem5Report()
    cache: dict[int, list[tuple[str, bytes]]] = {}
    for e in entries:
        if not e.verdict or e.digons or not e.antidigons:
            continue
        report.checked += 1
        n = e.vertex_count
        if n not in cache:
            cache[n] = [(name, canonical_form(g)) for name, g in _antidigon_candidates(n)]
        matches = [name for name, key in cache[n] if key == e.canonical]
        if not matches:
            report.unclassified.append(e.canonical.hex())
        for name in matches:
            kind = name.split("(")[0]
            report.classified[kind] = report.classified.get(kind, 0) + 1
        meets = any(every_cycle_meets(e.graph, {d.u, d.v}) for d in find_antidigons(e.graph))
        if meets:
            report.all_cycles_meet_d.append(e.canonical.hex())
            if f"doubled-cycle({n})" not in matches:
                report.branch_violations.append(e.canonical.hex())
    return report
