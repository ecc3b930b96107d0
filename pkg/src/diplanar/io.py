"""Text formats: graph files, embedding certificates and obstruction reports.

Graph file::

    # optional comments
    qed 1
    n 3
    arc 0 1
    arc 1 2

Arc ids follow file order.  Blank lines are ignored; any other unrecognised
line is an error reported with its 1-based line number.

Certificate::

    rot 0: +0 -1 +2 -3
    face: 0 1 2
    genus 0: 0
    diplanar yes

Darts are ``+a`` (out-dart of arc a) and ``-a`` (in-dart).  Faces list the
directed faces only (arc ids in arc direction); the checker re-traces both
orientation classes from the rotations to recompute genus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cycles import CycleError, check_cycle, iter_directed_cycles, remove_cycle
from .embedding import (
    EmbeddingCertificate,
    RotationError,
    RotationSystem,
    dart_arc,
    genus,
    in_dart,
    is_out_dart,
    out_dart,
    trace_faces,
)
from .graph import MultiDigraph
from .obstruction import ObstructionReport

HEADER = "qed 1"


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield no, stripped.split()


def _int(tok: str, no: int, what: str) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", no) from None
    if value < 0:
        raise FormatError(f"{what} must be non-negative", no)
    return value


def parse_graph(text: str) -> MultiDigraph:
    n = None
    seen_header = False
    arcs: list[tuple[int, int]] = []
    for no, toks in _lines(text):
        if not seen_header:
            if toks != HEADER.split():
                raise FormatError(f"expected header {HEADER!r}", no)
            seen_header = True
            continue
        key = toks[0]
        if key == "n":
            if n is not None:
                raise FormatError("duplicate vertex count", no)
            if len(toks) != 2:
                raise FormatError("expected 'n <vertex_count>'", no)
            n = _int(toks[1], no, "vertex count")
        elif key == "arc":
            if n is None:
                raise FormatError("arc before vertex count", no)
            if len(toks) != 3:
                raise FormatError("expected 'arc <tail> <head>'", no)
            t, h = _int(toks[1], no, "tail"), _int(toks[2], no, "head")
            if t >= n or h >= n:
                raise FormatError(f"arc endpoint out of range 0..{n - 1}", no)
            arcs.append((t, h))
        else:
            raise FormatError(f"unknown line {' '.join(toks)!r}", no)
    if not seen_header:
        raise FormatError(f"missing header {HEADER!r}")
    if n is None:
        raise FormatError("missing vertex count line 'n <count>'")
    return MultiDigraph(n, arcs)


def format_graph(g: MultiDigraph, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(HEADER)
    out.append(f"n {g.vertex_count}")
    out += [f"arc {t} {h}" for t, h in g.arcs]
    return "\n".join(out) + "\n"


def format_dart(d: int) -> str:
    return f"{'+' if is_out_dart(d) else '-'}{dart_arc(d)}"


def parse_dart(tok: str, no: int | None = None) -> int:
    if len(tok) < 2 or tok[0] not in "+-":
        raise FormatError(f"bad dart {tok!r}", no)
    a = _int(tok[1:], no, "dart arc")
    return out_dart(a) if tok[0] == "+" else in_dart(a)


@dataclass
class CertificateText:
    """A parsed certificate, not yet checked against any graph."""

    rotation: dict[int, tuple[int, ...]] = field(default_factory=dict)
    faces: list[tuple[int, ...]] = field(default_factory=list)
    genera: dict[int, int] = field(default_factory=dict)
    diplanar: bool | None = None


def format_certificate(rotation: RotationSystem, faces: Sequence[Sequence[int]],
                       genera: Sequence[int]) -> str:
    out = []
    for v, rot in enumerate(rotation):
        out.append(f"rot {v}:" + "".join(f" {format_dart(d)}" for d in rot))
    for f in faces:
        out.append("face:" + "".join(f" {a}" for a in f))
    for c, gc in enumerate(genera):
        out.append(f"genus {c}: {gc}")
    out.append(f"diplanar {'yes' if all(x == 0 for x in genera) else 'no'}")
    return "\n".join(out) + "\n"


def certificate_text(cert: EmbeddingCertificate) -> str:
    return format_certificate(cert.rotation, cert.faces, cert.genera)


def _indexed(toks: list[str], no: int, word: str) -> int:
    if len(toks) < 2 or not toks[1].endswith(":"):
        raise FormatError(f"expected '{word} <index>:'", no)
    return _int(toks[1][:-1], no, f"{word} index")


def parse_certificate(text: str) -> CertificateText:
    cert = CertificateText()
    for no, toks in _lines(text):
        if cert.diplanar is not None:
            raise FormatError("content after the final 'diplanar' line", no)
        key = toks[0]
        if key == "rot":
            v = _indexed(toks, no, "rot")
            if v in cert.rotation:
                raise FormatError(f"duplicate rotation for vertex {v}", no)
            cert.rotation[v] = tuple(parse_dart(t, no) for t in toks[2:])
        elif key == "face:":
            cert.faces.append(tuple(_int(t, no, "face arc") for t in toks[1:]))
        elif key == "genus":
            c = _indexed(toks, no, "genus")
            if len(toks) != 3:
                raise FormatError("expected 'genus <component>: <g>'", no)
            if c in cert.genera:
                raise FormatError(f"duplicate genus for component {c}", no)
            cert.genera[c] = _int(toks[2], no, "genus")
        elif key == "diplanar":
            if len(toks) != 2 or toks[1] not in ("yes", "no"):
                raise FormatError("expected 'diplanar yes|no'", no)
            cert.diplanar = toks[1] == "yes"
        else:
            raise FormatError(f"unknown line {' '.join(toks)!r}", no)
    if cert.diplanar is None:
        raise FormatError("missing final 'diplanar yes|no' line")
    return cert


def _cyclic_key(seq: Sequence[int]) -> tuple[int, ...]:
    if not seq:
        return ()
    k = min(range(len(seq)), key=lambda i: seq[i])
    return tuple(seq[k:]) + tuple(seq[:k])


def check_certificate(g: MultiDigraph, cert: CertificateText) -> list[str]:
    """Re-trace faces from the rotations and compare every stated line.

    Returns a list of problems; empty means the certificate is valid.
    """
    problems = []
    extra = sorted(v for v in cert.rotation if v >= g.vertex_count)
    if extra:
        return [f"rotation given for nonexistent vertex {extra[0]}"]
    rho = tuple(cert.rotation.get(v, ()) for v in range(g.vertex_count))
    try:
        faces = trace_faces(g, rho)
        genera = genus(g, rho)
    except (RotationError, IndexError) as exc:
        return [f"invalid rotation system: {exc}"]
    stated = sorted(_cyclic_key(f) for f in cert.faces)
    actual = sorted(_cyclic_key(f) for f in faces)
    if stated != actual:
        problems.append(f"face list does not match the rotations ({len(stated)} stated, {len(actual)} traced)")
    if sorted(cert.genera) != list(range(len(genera))):
        problems.append(f"expected genus lines for components 0..{len(genera) - 1}")
    else:
        for c, gc in enumerate(genera):
            if cert.genera[c] != gc:
                problems.append(f"component {c}: stated genus {cert.genera[c]}, traced {gc}")
    if cert.diplanar != all(x == 0 for x in genera):
        problems.append("final verdict disagrees with the component genera")
    return problems


def format_report(report: ObstructionReport, witnesses: bool = False) -> str:
    out = [
        f"obstruction {'yes' if report.verdict else 'no'}",
        f"graph-diplanar {'yes' if report.graph_diplanar else 'no'}",
        f"min-genus {report.min_genus}",
        f"systems-examined {report.systems_examined}",
        f"cycles {len(report.witnesses)}",
    ]
    for w in report.witnesses:
        out.append("cycle:" + "".join(f" {a}" for a in w.cycle)
                   + f" -> {'diplanar' if w.diplanar else 'non-diplanar'}")
        if witnesses and w.certificate is not None:
            out.append("begin-witness")
            out += format_graph(w.predecessor).splitlines()
            out += certificate_text(w.certificate).splitlines()
            out.append("end-witness")
    for label, ok in report.sanity.items():
        out.append(f"sanity {label} {'yes' if ok else 'no'}")
    return "\n".join(out) + "\n"


def check_report(g: MultiDigraph, text: str) -> list[str]:
    """Re-verify a report written with witnesses, using only cycle removal and face tracing.

    Checks that the listed cycles are exactly the directed cycles of g, that
    each witness graph equals the cycle's predecessor, and that its
    certificate is a valid genus-0 embedding.  Non-diplanarity of g itself
    is not re-derived here.
    """
    problems: list[str] = []
    lines = text.splitlines()
    verdict = None
    cycles: list[tuple[int, ...]] = []
    blocks: dict[int, tuple[str, str]] = {}
    i = 0
    while i < len(lines):
        toks = lines[i].split()
        if toks and toks[0] == "obstruction":
            verdict = toks[1:] == ["yes"]
        elif toks and toks[0] == "cycle:":
            cycles.append(tuple(int(t) for t in toks[1:toks.index("->")]))
        elif toks == ["begin-witness"]:
            j = lines.index("end-witness", i)
            body = lines[i + 1:j]
            k = next((m for m, ln in enumerate(body) if ln.startswith("rot ") or ln.startswith("face:")
                      or ln.startswith("genus ") or ln.startswith("diplanar")), len(body))
            blocks[len(cycles) - 1] = ("\n".join(body[:k]), "\n".join(body[k:]))
            i = j
        i += 1
    if verdict is None:
        return ["missing 'obstruction yes|no' line"]
    expected = sorted(frozenset(c) for c in iter_directed_cycles(g))
    if sorted(frozenset(c) for c in cycles) != expected:
        problems.append("listed cycles are not exactly the directed cycles of the graph")
    if not verdict:
        return problems
    for idx, c in enumerate(cycles):
        if idx not in blocks:
            problems.append(f"cycle {idx} has no witness")
            continue
        try:
            check_cycle(g, c)
        except CycleError as exc:
            problems.append(f"cycle {idx}: {exc}")
            continue
        graph_text, cert_text = blocks[idx]
        try:
            h = parse_graph(graph_text)
            cert = parse_certificate(cert_text)
        except FormatError as exc:
            problems.append(f"cycle {idx}: {exc}")
            continue
        if h != remove_cycle(g, c):
            problems.append(f"cycle {idx}: witness graph is not the predecessor")
            continue
        bad = check_certificate(h, cert)
        if not bad and not cert.diplanar:
            bad = ["witness is not a genus-0 embedding"]
        problems += [f"cycle {idx}: {p}" for p in bad]
    return problems
