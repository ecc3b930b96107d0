import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from diplanar.families import (
    anti_ladder,
    c3_digon_expansions,
    circulant_z,
    doubled_cycle,
    mobius_ladder_plus,
    n_chain,
    oriented_k222,
    oriented_k44_candidates,
)
from diplanar.graph import MultiDigraph

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SEED = 20240601


def quartic_from_perms(n, p1, p2):
    """Every quartic Eulerian digraph is the union of two permutation digraphs."""
    return MultiDigraph(n, [(v, p1[v]) for v in range(n)] + [(v, p2[v]) for v in range(n)])


@st.composite
def quartic_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    p1 = draw(st.permutations(range(n)))
    p2 = draw(st.permutations(range(n)))
    return quartic_from_perms(n, p1, p2)


@st.composite
def eulerian_graphs(draw, max_n=6, max_cycles=4):
    """Unions of random closed walks; loops and parallel arcs allowed."""
    n = draw(st.integers(1, max_n))
    arcs = []
    for _ in range(draw(st.integers(0, max_cycles))):
        walk = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=n))
        arcs += [(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]
    order = draw(st.permutations(range(len(arcs))))
    return MultiDigraph(n, [arcs[i] for i in order])


def random_quartic(rng: random.Random, n: int) -> MultiDigraph:
    p1 = list(range(n))
    p2 = list(range(n))
    rng.shuffle(p1)
    rng.shuffle(p2)
    return quartic_from_perms(n, p1, p2)


def family_obstructions():
    """(name, graph) for every family member the acceptance criteria name."""
    out = [(f"doubled_cycle({n})", doubled_cycle(n)) for n in range(3, 9)]
    out += [(f"circulant_z({n})", circulant_z(n)) for n in (5, 7, 9)]
    out += [(f"mobius_ladder_plus({n})", mobius_ladder_plus(n)) for n in (3, 5, 7)]
    out.append(("oriented_k222", oriented_k222()))
    out += [(f"oriented_k44[{i}]", g) for i, g in enumerate(oriented_k44_candidates())]
    out += [(f"anti_ladder({n})", anti_ladder(n)) for n in range(2, 6)]
    for params in [(1,), (2,), (1, 1), (1, 2), (3,), (2, 1, 1)]:
        out.append((f"n_chain{params}", n_chain(*params)))
    out += [(f"c3_expansion[{i}]", g) for i, g in enumerate(c3_digon_expansions())]
    return out


@pytest.fixture(scope="session")
def obstruction_corpus():
    return family_obstructions()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])
