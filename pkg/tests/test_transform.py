from itertools import combinations, product

import pytest

from diplanar.canon import canonical_form, is_isomorphic
from diplanar.embedding import is_diplanar
from diplanar.families import (
    circulant_z,
    doubled_cycle,
    mobius3_plus,
    mobius_ladder_plus,
    n_chain,
    prism3_plus,
)
from diplanar.graph import MultiDigraph, delete_arcs, is_quartic, normalize
from diplanar.obstruction import is_obstruction
from diplanar.transform import (
    DigonRef,
    SplitSpec,
    TransformError,
    add_digon_path,
    contract_digon,
    contract_digons,
    digon_free_kernel,
    expand_obstruction,
    find_antidigons,
    find_digons,
    is_admissible_splitting,
    kernel_forms,
    split_pairs,
    split_vertex,
)


def test_find_examples():
    assert (len(find_digons(mobius_ladder_plus(3))), len(find_antidigons(mobius_ladder_plus(3)))) == (3, 0)
    assert (len(find_digons(doubled_cycle(3))), len(find_antidigons(doubled_cycle(3)))) == (0, 3)
    assert (len(find_digons(circulant_z(5))), len(find_antidigons(circulant_z(5)))) == (0, 0)


def test_contract_two_digons():
    g = MultiDigraph(2, [(0, 1), (1, 0), (0, 1), (1, 0)])
    h = contract_digon(g, find_digons(g)[0])
    assert h == MultiDigraph(1, [(0, 0), (0, 0)])


def test_contract_rejects_bad_ref():
    with pytest.raises(TransformError):
        contract_digon(doubled_cycle(3), DigonRef(0, 1, 0, 1))


def test_contractions_of_mobius():
    for n in (3, 5, 7):
        assert is_isomorphic(contract_digons(mobius_ladder_plus(n)), circulant_z(n))
        assert is_isomorphic(digon_free_kernel(mobius_ladder_plus(n)), circulant_z(n))
    assert digon_free_kernel(circulant_z(5)) == circulant_z(5)
    assert is_isomorphic(digon_free_kernel(prism3_plus()), doubled_cycle(3))


def test_kernel_confluence_on_corpus(obstruction_corpus):
    for name, g in obstruction_corpus:
        forms = kernel_forms(g)
        assert len(forms) == 1, name
        assert forms == {canonical_form(digon_free_kernel(g))}


def test_split_pairs_order():
    g = circulant_z(5)
    ins, outs = sorted(g.in_arcs[0]), sorted(g.out_arcs[0])
    assert split_pairs(g, 0, 0) == ((ins[0], outs[0]), (ins[1], outs[1]))
    assert split_pairs(g, 0, 1) == ((ins[0], outs[1]), (ins[1], outs[0]))
    with pytest.raises(TransformError):
        split_pairs(g, 0, 2)


def test_split_then_merge_roundtrip():
    for g in (circulant_z(5), doubled_cycle(4), n_chain(1, 1)):
        for v, p in product(range(g.vertex_count), (0, 1)):
            s, v1, v2 = split_vertex(g, v, p)
            assert s.degree(v1) == s.degree(v2) == 2
            e = add_digon_path(s, v1, v2, 1)
            assert is_quartic(e)
            d = find_digons(e)[-1]
            assert {d.u, d.v} == {v1, v2}
            assert is_isomorphic(contract_digon(e, d), g)


def test_split_of_doubled_cycle_shrinks():
    for n in (4, 5, 6):
        g = doubled_cycle(n)
        results = [normalize(split_vertex(g, 0, p)[0]) for p in (0, 1)]
        assert any(is_isomorphic(h, doubled_cycle(n - 1)) for h in results)


def test_circulant_one_admissible_pairing_per_vertex():
    for n in (5, 7, 9):
        g = circulant_z(n)
        for v in range(n):
            assert sum(is_admissible_splitting(g, v, p) for p in (0, 1)) == 1


def test_inadmissible_split_contracts_to_smaller_circulant():
    g = circulant_z(7)
    p = next(p for p in (0, 1) if not is_admissible_splitting(g, 0, p))
    s, v1, v2 = split_vertex(g, 0, p)
    h = normalize(s)
    assert not is_diplanar(h)[0]
    assert any(is_isomorphic(contract_digon(h, d), circulant_z(5)) for d in find_digons(h))


def test_digon_path():
    s, v1, v2 = split_vertex(circulant_z(5), 0, 0)
    e = add_digon_path(s, v1, v2, 3)
    assert e.vertex_count == 5 + 1 + 2
    assert len(find_digons(e)) == 3
    assert is_isomorphic(digon_free_kernel(e), circulant_z(5))
    with pytest.raises(TransformError):
        add_digon_path(s, v1, v2, 0)
    with pytest.raises(TransformError):
        add_digon_path(s, 1, v2, 1)


def test_expand_examples():
    z5 = circulant_z(5)
    specs = [SplitSpec(v, next(p for p in (0, 1) if is_admissible_splitting(z5, v, p))) for v in range(5)]
    assert is_isomorphic(expand_obstruction(z5, specs), mobius_ladder_plus(5))
    assert expand_obstruction(z5, []) == z5
    full = {canonical_form(expand_obstruction(doubled_cycle(3), [SplitSpec(v, p) for v, p in zip(range(3), ps)]))
            for ps in product((0, 1), repeat=3)}
    assert full == {canonical_form(mobius3_plus()), canonical_form(prism3_plus())}


def test_expand_rejects():
    z5 = circulant_z(5)
    bad = next(p for p in (0, 1) if not is_admissible_splitting(z5, 0, p))
    with pytest.raises(TransformError):
        expand_obstruction(z5, [SplitSpec(0, bad)])
    with pytest.raises(TransformError):
        expand_obstruction(z5, [SplitSpec(0, 0), SplitSpec(0, 1)])


def test_split_spec_parse():
    assert SplitSpec.parse("2:1") == SplitSpec(2, 1, 1)
    assert SplitSpec.parse("0:0:3") == SplitSpec(0, 0, 3)
    assert str(SplitSpec(1, 0, 2)) == "1:0:2"
    for bad in ("1", "1:2", "a:0", "1:0:0", "1:0:1:1"):
        with pytest.raises(TransformError):
            SplitSpec.parse(bad)


def test_lemma3_contraction_preserves_obstruction(obstruction_corpus):
    for name, g in obstruction_corpus:
        for d in find_digons(g):
            assert is_obstruction(contract_digon(g, d)).verdict, name


def test_lemma3_digon_criterion():
    # an expansion g of h is an obstruction iff g minus the digon's arcs is diplanar
    for h in (doubled_cycle(3), doubled_cycle(4), circulant_z(5), n_chain(2)):
        for v, p in product(range(h.vertex_count), (0, 1)):
            s, v1, v2 = split_vertex(h, v, p)
            g = add_digon_path(s, v1, v2, 1)
            d = find_digons(g)[-1]
            rest = normalize(delete_arcs(g, [d.arc_uv, d.arc_vu]))
            assert is_obstruction(g).verdict == is_diplanar(rest)[0]


def test_theorem4_multi_split():
    for h in (doubled_cycle(3), circulant_z(5)):
        admissible = [(v, p) for v in range(h.vertex_count) for p in (0, 1) if is_admissible_splitting(h, v, p)]
        for k in (1, 2):
            for combo in combinations(admissible, k):
                if len({v for v, _ in combo}) < k:
                    continue
                g = expand_obstruction(h, [SplitSpec(v, p, 1) for v, p in combo])
                assert is_obstruction(g).verdict
