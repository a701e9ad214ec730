"""Command line interface.

Every subcommand reads a complex from ``--complex PATH`` or builds one with
``--fixture NAME[:N]`` and prints ``KEY: value`` lines.  Exit status is 0
on success, 1 when a verification fails and 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .complex import SimplicialComplex
from .cplx import ComplexDocument, read_complex, serialize_complex
from .curvature import certify_cat0_necessary
from .disks import minimal_spanning_disk
from .errors import Cat0Error
from .fixtures import fixture_names, parse_fixture_spec
from .gs import check_fellow_travel, geodesic_system, gs_geodesics, gs_system, resolve_bad_pairs
from .paths import combinatorial_distance, enumerate_geodesics

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _load(args) -> ComplexDocument:
    if bool(args.complex) == bool(args.fixture):
        raise _UsageError("give exactly one of --complex or --fixture")
    if args.complex:
        return read_complex(args.complex)
    f = parse_fixture_spec(args.fixture)
    return ComplexDocument(f.complex, f.declared_cat0, f.complex.dim + 1 > 5)


def _show(K: SimplicialComplex, path) -> str:
    return " ".join(K.path_names(path))


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def cmd_validate(args, doc: ComplexDocument) -> int:
    K = doc.complex
    print(f"VERTICES: {len(K.vertices)}")
    print(f"DIMENSION: {K.dim}")
    print(f"MAXIMAL_SIMPLICES: {len(K.maximal)}")
    print(f"F_VECTOR: {' '.join(map(str, K.f_vector()))}")
    print(f"DECLARED_CAT0: {'true' if doc.declared_cat0 else 'false'}")
    print("RESULT: pass")
    return EXIT_OK


def cmd_curvature(args, doc: ComplexDocument) -> int:
    K = doc.complex
    rep = certify_cat0_necessary(K)
    print(f"FLAG: {'yes' if rep.flag else 'no'}")
    if rep.flag_witness:
        print(f"FLAG_WITNESS: {_show(K, rep.flag_witness)}")
    for n, cyc in rep.empty_ngon_witnesses.items():
        print(f"EMPTY_{n}GON: {_show(K, cyc) if cyc else 'none'}")
    print(f"SYSTOLIC: {'yes' if rep.systolic else 'no'}")
    for fail in rep.systolic_failures[:5]:
        where = _show(K, fail.simplex) if fail.simplex else "(whole complex)"
        print(f"SYSTOLIC_FAILURE: link of {where}: {fail.reason}: {_show(K, fail.cycle)}")
    if rep.edge_links is None:
        print("EDGE_LINKS: skipped (dimension > 3)")
    else:
        el = rep.edge_links
        print(f"EDGE_LINKS: {'ok' if el.ok else 'short cycle'}")
        if el.worst_edge is not None:
            print(f"EDGE_LINK_WORST: {_show(K, el.worst_edge)} girth {el.worst_girth} length {el.worst_length:.6f}")
    print(f"RESULT: {_verdict(rep.passes)}")
    return EXIT_OK if rep.passes else EXIT_FAIL


def cmd_distance(args, doc: ComplexDocument) -> int:
    K = doc.complex
    u, w = K.vertex(args.u), K.vertex(args.w)
    print(f"DISTANCE: {combinatorial_distance(K, u, w)}")
    return EXIT_OK


def cmd_geodesics(args, doc: ComplexDocument) -> int:
    K = doc.complex
    u, w = K.vertex(args.u), K.vertex(args.w)
    geos = enumerate_geodesics(K, u, w)
    print(f"COUNT: {len(geos)}")
    for g in geos:
        print(_show(K, g))
    return EXIT_OK


def _path_arg(K: SimplicialComplex, names: Sequence[str]) -> tuple[int, ...]:
    return tuple(K.vertex(n) for n in names)


def cmd_span_disk(args, doc: ComplexDocument) -> int:
    K = doc.complex
    loop = _path_arg(K, args.path)
    if loop[0] != loop[-1]:
        loop = loop + loop[:1]
    disks = minimal_spanning_disk(K, loop, args.max_area, declared_cat0=doc.declared_cat0)
    print(f"AREA: {disks[0].area}")
    print(f"COUNT: {len(disks)}")
    for i, D in enumerate(disks):
        inner = ", ".join(f"{K.name(D.labels[v])}:{D.degree(v)}" for v in D.interior_vertices) or "none"
        print(f"DISK {i}: interior {inner}")
        if args.verbose:
            print(D.to_text(K), end="")
    return EXIT_OK


def cmd_straighten(args, doc: ComplexDocument) -> int:
    from .moves import straighten

    K = doc.complex
    alpha = _path_arg(K, args.path)
    beta = _path_arg(K, args.target) if args.target else None
    final, moves = straighten(K, alpha, beta)
    for m in moves:
        print(m.format(K))
    print(f"MOVES: {len(moves)}")
    print(f"FINAL: {_show(K, final)}")
    return EXIT_OK


def cmd_gs_geodesic(args, doc: ComplexDocument) -> int:
    K = doc.complex
    u, w = K.vertex(args.u), K.vertex(args.w)
    start = enumerate_geodesics(K, u, w)[0]
    final, moves = resolve_bad_pairs(K, start)
    print(f"START: {_show(K, start)}")
    for m in moves:
        print(m.format(K))
    print(f"GS_GEODESIC: {_show(K, final)}")
    return EXIT_OK


def cmd_verify_gs(args, doc: ComplexDocument) -> int:
    K = doc.complex
    failures = []
    total = 0
    for u in K.vertices:
        for w in K.vertices:
            found = gs_geodesics(K, u, w)
            total += len(found)
            if not found:
                failures.append((u, w))
    print(f"PAIRS: {len(K.vertices) ** 2}")
    print(f"GS_GEODESICS: {total}")
    for u, w in failures[:10]:
        print(f"NO_GS_GEODESIC: {K.name(u)} {K.name(w)}")
    print(f"RESULT: {_verdict(not failures)}")
    return EXIT_OK if not failures else EXIT_FAIL


def _system(K: SimplicialComplex, which: str):
    return gs_system(K) if which == "gs" else geodesic_system(K)


def cmd_fellow_travel(args, doc: ComplexDocument) -> int:
    K = doc.complex
    S = _system(K, args.system)
    res = check_fellow_travel(K, S, args.k, args.l)
    print(f"SYSTEM: {args.system} ({len(S)} paths)")
    print(f"MAX_DISTANCE: {res.worst:g}")
    if res.pair is not None:
        a, b = res.pair
        print(f"WORST_PAIR: {_show(K, a)} | {_show(K, b)}")
    print(f"RESULT: {_verdict(res.ok)}")
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_fsa(args, doc: ComplexDocument) -> int:
    from .automata import build_gs_fsa, geodesic_fsa

    K = doc.complex
    if args.system == "gs":
        built = build_gs_fsa(K)
        M = built.fsa
        for win in built.windows:
            print(f"FORBIDDEN: {_show(K, win)}")
    else:
        M = geodesic_fsa(K)
    print(f"STATES: {M.n_states}")
    text = M.to_dot() if args.format == "dot" else M.to_text()
    print(text, end="")
    return EXIT_OK


def cmd_export_svg(args, doc: ComplexDocument) -> int:
    from .svg import export_disk_svg

    K = doc.complex
    loop = _path_arg(K, args.path)
    if loop[0] != loop[-1]:
        loop = loop + loop[:1]
    disks = minimal_spanning_disk(K, loop)
    svg = export_disk_svg(disks[args.index], K.name)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"WROTE: {args.output}")
    else:
        print(svg, end="")
    return EXIT_OK


def cmd_generate(args, doc: ComplexDocument | None) -> int:
    f = parse_fixture_spec(args.name)
    print(serialize_complex(f.complex, declared_cat0=f.declared_cat0), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cat0kit", description="Combinatorial tools for CAT(0) simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, needs_complex: bool = True):
        p = sub.add_parser(name, help=help_text)
        if needs_complex:
            p.add_argument("--complex", metavar="PATH")
            p.add_argument("--fixture", metavar="NAME[:N]", help=f"one of {', '.join(fixture_names())}")
        p.set_defaults(func=func, needs_complex=needs_complex)
        return p

    add("validate", cmd_validate, "parse a complex and print its shape")
    add("curvature", cmd_curvature, "run the CAT(0) necessary-condition checks")
    p = add("distance", cmd_distance, "combinatorial distance between two vertices")
    p.add_argument("u")
    p.add_argument("w")
    p = add("geodesics", cmd_geodesics, "list all geodesics between two vertices")
    p.add_argument("u")
    p.add_argument("w")
    p = add("span-disk", cmd_span_disk, "minimal spanning disks of a closed path")
    p.add_argument("path", nargs="+")
    p.add_argument("--max-area", type=int, default=None)
    p.add_argument("--verbose", action="store_true")
    p = add("straighten", cmd_straighten, "straighten a path by basic moves")
    p.add_argument("path", nargs="+")
    p.add_argument("--target", nargs="+", default=None)
    p = add("gs-geodesic", cmd_gs_geodesic, "a GS-geodesic between two vertices")
    p.add_argument("u")
    p.add_argument("w")
    add("verify-gs", cmd_verify_gs, "check every vertex pair has a GS-geodesic")
    p = add("fellow-travel", cmd_fellow_travel, "check the (k, l) fellow traveller property")
    p.add_argument("k", type=float)
    p.add_argument("l", type=int)
    p.add_argument("--system", choices=("gs", "geodesic"), default="gs")
    p = add("fsa", cmd_fsa, "print the geodesic or GS automaton")
    p.add_argument("--system", choices=("gs", "geodesic"), default="gs")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p = add("export-svg", cmd_export_svg, "draw a minimal spanning disk as SVG")
    p.add_argument("path", nargs="+")
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--output", "-o", default=None)
    p = add("generate", cmd_generate, "print a fixture in .cplx format", needs_complex=False)
    p.add_argument("name", metavar="NAME[:N]")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        doc = _load(args) if args.needs_complex else None
        return args.func(args, doc)
    except (_UsageError, Cat0Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


cli_main = main


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
