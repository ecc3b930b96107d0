"""Command-line interface.

Exit codes: 0 for a "yes" answer or plain success, 2 for a "no" answer,
1 for any error (bad input, usage, failed verification).  ``--quiet``
suppresses standard output so only the exit code is left.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .canon import canonical_form, canonical_graph, is_isomorphic
from .cycles import iter_directed_cycles
from .embedding import certificate_for, search_embedding
from .families import GENERATOR_NAMES, generate
from .io import (
    FormatError,
    check_certificate,
    check_report,
    format_certificate,
    format_graph,
    format_report,
    parse_certificate,
    parse_graph,
)
from .obstruction import is_obstruction
from .search import CensusConfig, Constraints, census_table, obstruction_census, verify_theorem5
from .transform import SplitSpec, TransformError, contract_digons, digon_free_kernel, expand_obstruction

YES, ERROR, NO = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _graph(path: str):
    try:
        return parse_graph(_read(path))
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _answer(flag: bool) -> int:
    return YES if flag else NO


def cmd_check(args, out) -> int:
    g = _graph(args.file)
    result = search_embedding(g)
    out.write(format_certificate(result.rotation, certificate_for(g, result.rotation).faces,
                                 result.component_genera))
    return _answer(result.diplanar)


def cmd_genus(args, out) -> int:
    g = _graph(args.file)
    result = search_embedding(g)
    for c, gc in enumerate(result.component_genera):
        out.write(f"genus {c}: {gc}\n")
    out.write(f"min-genus {result.min_genus}\n")
    out.write(f"systems-examined {result.systems_examined}\n")
    return YES


def cmd_obstruction(args, out) -> int:
    g = _graph(args.file)
    report = is_obstruction(g)
    out.write(format_report(report, witnesses=args.witnesses))
    return _answer(report.verdict)


def cmd_cycles(args, out) -> int:
    g = _graph(args.file)
    count = 0
    for c in iter_directed_cycles(g):
        count += 1
        out.write("cycle:" + "".join(f" {a}" for a in c) + "\n")
    out.write(f"cycles {count}\n")
    return YES


def cmd_iso(args, out) -> int:
    same = is_isomorphic(_graph(args.first), _graph(args.second))
    out.write(f"isomorphic {'yes' if same else 'no'}\n")
    return _answer(same)


def cmd_canon(args, out) -> int:
    g = _graph(args.file)
    if args.graph:
        out.write(format_graph(canonical_graph(g), [canonical_form(g).hex()]))
    else:
        out.write(canonical_form(g).hex() + "\n")
    return YES


def _params(tokens: Sequence[str]) -> list[int]:
    values = []
    for tok in tokens:
        for part in tok.split(","):
            if part:
                try:
                    values.append(int(part))
                except ValueError:
                    raise UsageError(f"family parameters must be integers, got {part!r}") from None
    return values


def cmd_gen(args, out) -> int:
    params = _params(args.params)
    try:
        g = generate(args.family, params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    label = f"{args.family} {','.join(map(str, params))}".strip()
    out.write(format_graph(g, [label]))
    return YES


def cmd_transform(args, out) -> int:
    g = _graph(args.file)
    if args.op == "contract-digons":
        if args.specs:
            raise UsageError("contract-digons takes no arguments")
        h = contract_digons(g)
    elif args.op == "kernel":
        if args.specs:
            raise UsageError("kernel takes no arguments")
        h = digon_free_kernel(g)
    else:
        if not args.specs:
            raise UsageError("split needs at least one v:pairing[:p] spec")
        specs = [SplitSpec.parse(s) for s in args.specs]
        for s in specs:
            if not 0 <= s.vertex < g.vertex_count:
                raise TransformError(f"vertex {s.vertex} out of range")
        h = expand_obstruction(g, specs, check_admissible=not args.force)
    out.write(format_graph(h))
    return YES


def cmd_census(args, out) -> int:
    constraints = Constraints(loop_free=not args.allow_loops,
                              max_multiplicity=None if args.any_multiplicity else 2,
                              connected=not args.allow_disconnected)
    config = CensusConfig(n_max=args.max_n, n_min=args.min_n, constraints=constraints,
                          lemma2_prune=not args.no_prune, include_all=args.all, jobs=args.jobs)
    entries = obstruction_census(config)
    out.write(census_table(entries))
    if args.verify_theorem5:
        report = verify_theorem5(entries)
        out.write("\n".join(report.lines()) + "\n")
        return _answer(report.ok)
    return YES


def cmd_verify_cert(args, out) -> int:
    g = _graph(args.graph)
    text = _read(args.certificate)
    if args.report:
        problems = check_report(g, text)
    else:
        problems = check_certificate(g, parse_certificate(text))
    for p in problems:
        out.write(f"problem: {p}\n")
    out.write(f"certificate {'valid' if not problems else 'invalid'}\n")
    return YES if not problems else ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diplanar",
        description="Alternating plane embeddings of quartic Eulerian digraphs.",
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="print nothing; report by exit code only")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide diplanarity; prints a certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("genus", help="minimum alternating genus per component")
    p.add_argument("file")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("obstruction", help="decide minimal non-diplanarity")
    p.add_argument("file")
    p.add_argument("--witnesses", action="store_true",
                   help="embed each predecessor graph and its certificate in the report")
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("cycles", help="list directed cycles as arc ids")
    p.add_argument("file")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("iso", help="isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("canon", help="canonical form (hex)")
    p.add_argument("file")
    p.add_argument("--graph", action="store_true", help="print the canonically relabelled graph instead")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("gen", help="generate a family member",
                       description=f"families: {', '.join(GENERATOR_NAMES)}")
    p.add_argument("family", choices=GENERATOR_NAMES)
    p.add_argument("params", nargs="*", help="integers, space or comma separated")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", help="digon contraction and vertex splitting")
    p.add_argument("file")
    p.add_argument("op", choices=("contract-digons", "kernel", "split"))
    p.add_argument("specs", nargs="*", help="split specs v:pairing[:p]")
    p.add_argument("--force", action="store_true", help="skip the admissibility check for splits")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("census", help="exhaustive obstruction census")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--all", action="store_true", help="list non-obstructions too")
    p.add_argument("--verify-theorem5", action="store_true",
                   help="append the classification of digon-free obstructions with an anti-digon")
    p.add_argument("--no-prune", action="store_true", help="do not skip graphs failing the structural checks")
    p.add_argument("--allow-loops", action="store_true")
    p.add_argument("--any-multiplicity", action="store_true")
    p.add_argument("--allow-disconnected", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify-cert", help="re-verify a certificate or witness report")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--report", action="store_true", help="the file is an obstruction report with witnesses")
    p.set_defaults(func=cmd_verify_cert)
    return parser


class _Null:
    def write(self, _text):
        return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else YES
    out = _Null() if args.quiet else sys.stdout
    try:
        return args.func(args, out)
    except (FormatError, TransformError, UsageError, ValueError, OSError) as exc:
        print(f"diplanar: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
