"""Canonical forms for multidigraphs.

Individualization-refinement: the vertex partition is refined until
equitable with respect to (in, out) multiplicities, then every vertex of the
first non-singleton cell is individualized in turn.  The canonical form is
the least serialized adjacency matrix over all leaves of that search tree.
Both the refinement and the choice of target cell depend only on the
partition, so the set of leaves is closed under relabeling.  No automorphism
pruning is done; at the sizes used here the trees are small.
"""

from __future__ import annotations

import struct

from .graph import MultiDigraph


def _refine(cells: list[list[int]], m, n: int) -> list[list[int]]:
    while True:
        cell_of = [0] * n
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = m[v]
                key = tuple(sorted(
                    (cell_of[w], row[w], m[w][v]) for w in range(n) if row[w] or m[w][v]
                ))
                groups.setdefault(key, []).append(v)
            for key in sorted(groups):
                new_cells.append(groups[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _leaf_code(m, order: list[int], width: int) -> bytes:
    if width == 1:
        return bytes(m[u][v] for u in order for v in order)
    return b"".join(struct.pack(">I", m[u][v]) for u in order for v in order)


def canonical_labeling(g: MultiDigraph) -> tuple[bytes, list[int]]:
    """Return (canonical form, order) where order[i] is the vertex placed at position i."""
    n = g.vertex_count
    m = g.matrix
    width = 1 if all(x < 256 for row in m for x in row) else 4
    header = struct.pack(">IB", n, width)
    if n == 0:
        return header, []
    start: dict[tuple, list[int]] = {}
    for v in range(n):
        start.setdefault((m[v][v], len(g.out_arcs[v]), len(g.in_arcs[v])), []).append(v)
    cells = [start[k] for k in sorted(start)]

    best: list = [None, None]

    def search(cells):
        cells = _refine(cells, m, n)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(m, order, width)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(cells)
    return header + best[0], best[1]


def canonical_form(g: MultiDigraph) -> bytes:
    return canonical_labeling(g)[0]


def canonical_graph(g: MultiDigraph) -> MultiDigraph:
    """The representative with vertices in canonical order and arcs sorted."""
    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    return MultiDigraph(g.vertex_count, sorted((pos[t], pos[h]) for t, h in g.arcs))


def is_isomorphic(g: MultiDigraph, h: MultiDigraph) -> bool:
    if g.vertex_count != h.vertex_count or g.arc_count != h.arc_count:
        return False
    return canonical_form(g) == canonical_form(h)
