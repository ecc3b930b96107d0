"""Minimal non-diplanarity under cycle removal, with re-checkable reports.

Diplanarity is inherited by every graph below a diplanar one, so a
non-diplanar quartic graph is minimal as soon as each one-step predecessor
(remove one directed cycle, then normalize) is diplanar.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import is_strongly_2_edge_connected, underlying_edge_connectivity
from .cycles import DirectedCycle, iter_directed_cycles, remove_cycle
from .embedding import EmbeddingCertificate, search_embedding
from .graph import (
    MultiDigraph,
    is_quartic,
    is_weakly_connected,
    loop_count,
    max_undirected_multiplicity,
)


@dataclass(frozen=True)
class Lemma2Check:
    loop_free: bool
    multiplicity_at_most_2: bool
    four_edge_connected: bool
    strongly_2_edge_connected: bool

    @property
    def all_ok(self) -> bool:
        return (self.loop_free and self.multiplicity_at_most_2
                and self.four_edge_connected and self.strongly_2_edge_connected)

    def items(self):
        return [
            ("loop-free", self.loop_free),
            ("multiplicity", self.multiplicity_at_most_2),
            ("edge-connectivity", self.four_edge_connected),
            ("strong-2-edge", self.strongly_2_edge_connected),
        ]


def lemma2_sanity(g: MultiDigraph) -> Lemma2Check:
    """Structural necessary conditions every obstruction satisfies."""
    connected = g.vertex_count >= 2 and is_weakly_connected(g)
    return Lemma2Check(
        loop_free=loop_count(g) == 0,
        multiplicity_at_most_2=max_undirected_multiplicity(g) <= 2,
        four_edge_connected=connected and underlying_edge_connectivity(g) >= 4,
        strongly_2_edge_connected=connected and is_strongly_2_edge_connected(g),
    )


@dataclass(frozen=True)
class CycleWitness:
    cycle: DirectedCycle
    predecessor: MultiDigraph
    certificate: EmbeddingCertificate | None

    @property
    def diplanar(self) -> bool:
        return self.certificate is not None


@dataclass(frozen=True)
class ObstructionReport:
    verdict: bool
    graph_diplanar: bool
    min_genus: int
    systems_examined: int
    witnesses: tuple[CycleWitness, ...]
    sanity: Lemma2Check


def _require_quartic(g: MultiDigraph) -> None:
    if g.vertex_count == 0:
        raise ValueError("the empty graph is not a member of the quartic class")
    if not is_quartic(g):
        raise ValueError("obstruction checks need a quartic Eulerian digraph")


def is_obstruction(g: MultiDigraph, stop_early: bool = False) -> ObstructionReport:
    """Full report: graph search evidence plus an embedding witness per cycle.

    With ``stop_early`` the per-cycle loop ends at the first non-diplanar
    predecessor (the verdict is unaffected).
    """
    _require_quartic(g)
    top = search_embedding(g)
    witnesses = []
    verdict = not top.diplanar
    if verdict:
        cache: dict[MultiDigraph, EmbeddingCertificate | None] = {}
        for c in iter_directed_cycles(g):
            h = remove_cycle(g, c)
            if h not in cache:
                cache[h] = search_embedding(h).certificate
            witnesses.append(CycleWitness(c, h, cache[h]))
            if cache[h] is None:
                verdict = False
                if stop_early:
                    break
    return ObstructionReport(
        verdict=verdict,
        graph_diplanar=top.diplanar,
        min_genus=top.min_genus,
        systems_examined=top.systems_examined,
        witnesses=tuple(witnesses),
        sanity=lemma2_sanity(g),
    )


def obstruction_verdict(g: MultiDigraph) -> bool:
    """Fast boolean form of ``is_obstruction(g).verdict``."""
    _require_quartic(g)
    if search_embedding(g).diplanar:
        return False
    seen: set[MultiDigraph] = set()
    for c in iter_directed_cycles(g):
        h = remove_cycle(g, c)
        if h in seen:
            continue
        seen.add(h)
        if not search_embedding(h).diplanar:
            return False
    return True
