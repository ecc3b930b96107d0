import pytest
from hypothesis import given

from conftest import eulerian_graphs, family_obstructions
from diplanar.embedding import certificate_for, rotation_systems, search_embedding
from diplanar.families import circulant_z, doubled_cycle, oriented_k222
from diplanar.io import (
    FormatError,
    certificate_text,
    check_certificate,
    check_report,
    format_certificate,
    format_graph,
    format_report,
    parse_certificate,
    parse_graph,
)
from diplanar.graph import MultiDigraph
from diplanar.obstruction import is_obstruction


@given(eulerian_graphs())
def test_graph_roundtrip(g):
    assert parse_graph(format_graph(g, ["comment"])) == g


def test_corpus_roundtrip():
    for _, g in family_obstructions():
        assert parse_graph(format_graph(g)) == g


def test_exact_text():
    text = format_graph(MultiDigraph(2, [(0, 1), (1, 0)]), ["digon"])
    assert text == "# digon\nqed 1\nn 2\narc 0 1\narc 1 0\n"


@pytest.mark.parametrize("text, line", [
    ("n 2\n", 1),
    ("qed 1\nn 2\narc 0 2\n", 3),
    ("qed 1\narc 0 1\n", 2),
    ("qed 1\nn 2\nn 3\n", 3),
    ("# c\nqed 1\nn 2\nedge 0 1\n", 4),
    ("qed 1\nn x\n", 2),
    ("qed 1\nn 2\narc 0\n", 3),
    ("qed 1\nn -1\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(FormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_missing_parts():
    with pytest.raises(FormatError):
        parse_graph("")
    with pytest.raises(FormatError):
        parse_graph("qed 1\n")


def test_certificate_roundtrip_and_check():
    for g in (doubled_cycle(3), circulant_z(5), oriented_k222()):
        for rho in list(rotation_systems(g))[:6]:
            cert = certificate_for(g, rho)
            text = certificate_text(cert)
            parsed = parse_certificate(text)
            assert tuple(parsed.rotation[v] for v in range(g.vertex_count)) == cert.rotation
            assert check_certificate(g, parsed) == []


def test_certificate_tampering_detected():
    g = circulant_z(5)
    res = search_embedding(g)
    faces = certificate_for(g, res.rotation).faces
    good = format_certificate(res.rotation, faces, res.component_genera)
    assert check_certificate(g, parse_certificate(good)) == []
    wrong_genus = good.replace(f"genus 0: {res.min_genus}", "genus 0: 0")
    assert check_certificate(g, parse_certificate(wrong_genus))
    wrong_verdict = good.replace("diplanar no", "diplanar yes")
    assert check_certificate(g, parse_certificate(wrong_verdict))
    dropped_face = "\n".join(ln for i, ln in enumerate(good.splitlines()) if ln != good.splitlines()[5]) + "\n"
    assert check_certificate(g, parse_certificate(dropped_face))
    swapped = good.replace("rot 0: ", "rot 0: ", 1).splitlines()
    toks = swapped[0].split()
    toks[2], toks[3] = toks[3], toks[2]
    swapped[0] = " ".join(toks)
    assert check_certificate(g, parse_certificate("\n".join(swapped) + "\n"))


def test_certificate_parse_errors():
    for bad in ("rot 0 +1 -2\ndiplanar yes\n", "rot 0: *1\ndiplanar yes\n",
                "genus 0: 0\n", "diplanar maybe\n", "diplanar yes\nface: 1\n", "wat\n"):
        with pytest.raises(FormatError):
            parse_certificate(bad)


def test_report_recheck():
    for g in (circulant_z(5), oriented_k222(), doubled_cycle(4)):
        text = format_report(is_obstruction(g), witnesses=True)
        assert text.startswith("obstruction yes\n")
        assert check_report(g, text) == []


def test_report_tampering_detected():
    g = circulant_z(5)
    text = format_report(is_obstruction(g), witnesses=True)
    lines = text.splitlines()
    first_cycle = next(i for i, ln in enumerate(lines) if ln.startswith("cycle:"))
    assert check_report(g, "\n".join(lines[:first_cycle] + lines[first_cycle + 1:]))
    broken = text.replace("genus 0: 0", "genus 0: 1", 1)
    assert check_report(g, broken)


def test_report_without_witnesses():
    text = format_report(is_obstruction(doubled_cycle(3)))
    assert "begin-witness" not in text
    assert "sanity edge-connectivity yes" in text
