"""Command line interface.

Results go to stdout as JSON (or DOT where asked); failures print a JSON
object ``{"error": ..., "message": ...}`` on stderr and exit with status 1.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dot, io
from .checks import run_checks
from .coloring import PairPartition, enumerate_colorings_bruteforce, four_coloring_from_pair, wh_from_coloring
from .corpus import standard_corpus
from .errors import BadParameter, WeakHamError
from .factors import enumerate_weak_hamiltonians
from .generators import GENERATOR_NAMES, generate
from .maps import dual_adjacency, is_cubic
from .moduli import build_chromatic_graph, build_wh_graph, clique_to_coloring, find_chromatic_cliques
from .mutation import mutate
from .resolution import resolve


def _write(text: str, path: str | None = None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _pick_wh(m, index, jobs):
    whs = enumerate_weak_hamiltonians(m, jobs=jobs)
    if not 0 <= index < len(whs):
        raise BadParameter(f"weak Hamiltonian index {index} out of range (map has {len(whs)})")
    return whs, whs[index]


def cmd_validate(args):
    m = io.read_map(args.file)
    degrees = [m.degree(v) for v in range(m.num_vertices)]
    _write(io.dumps({"valid": True, "vertices": m.num_vertices, "edges": m.num_edges,
                     "faces": m.num_faces, "cubic": is_cubic(m),
                     "min_degree": min(degrees), "max_degree": max(degrees)}))


def cmd_faces(args):
    m = io.read_map(args.file)
    fs = m.face_set
    _write(io.dumps({"faces": [list(f) for f in fs.faces], "face_of": list(fs.face_of),
                     "dual_adjacency": [list(p) for p in dual_adjacency(m)]}))


def cmd_resolve(args):
    m = io.read_map(args.file)
    r, corr = resolve(m)
    _write(io.emit_map_document(r), args.output)
    _write(io.dumps(io.correspondence_record(corr)))


def cmd_wh(args):
    m = io.read_map(args.file)
    whs = enumerate_weak_hamiltonians(m, jobs=args.jobs)
    if args.dot:
        _write("".join(dot.map_dot(m, h, name=f"wh{i}") for i, h in enumerate(whs)))
    else:
        _write(io.weak_hamiltonians_json(whs))


def cmd_mutate(args):
    m = io.read_map(args.file)
    whs, h = _pick_wh(m, args.wh, args.jobs)
    mu = mutate(m, h, args.selection)
    index = next(i for i, x in enumerate(whs) if x.edges == mu.edges)
    record = io.wh_record(index, mu)
    record.update({"source": args.wh, "selection": args.selection})
    _write(io.dumps(record))


def cmd_moduli(args):
    m = io.read_map(args.file)
    g = build_wh_graph(m, jobs=args.jobs)
    cliques = find_chromatic_cliques(g)
    record = io.wh_graph_record(g, cliques)
    if args.with_cliques:
        record["clique_colorings"] = [list(clique_to_coloring(m, g, c).colors) for c in cliques]
    else:
        for key in ("cliques", "clique_of_edge", "num_cliques"):
            record.pop(key)
    if args.dot:
        _write(dot.wh_graph_dot(g, cliques if args.with_cliques else ()), args.dot)
    _write(io.dumps(record))


def cmd_chromatic(args):
    m = io.read_map(args.file)
    g = build_wh_graph(m, jobs=args.jobs)
    x = build_chromatic_graph(g, find_chromatic_cliques(g), multigraph=args.multigraph)
    if args.dot:
        _write(dot.chromatic_dot(x), args.dot)
    _write(io.dumps(io.chromatic_record(x)))


def cmd_color(args):
    m = io.read_map(args.file)
    _, h = _pick_wh(m, args.wh, args.jobs)
    phi = four_coloring_from_pair(m, h, mutate(m, h, args.selection))
    if args.dot:
        _write(dot.map_dot(m, coloring=phi), args.dot)
    _write(io.dumps(io.coloring_record(phi)))


def cmd_from_coloring(args):
    m = io.read_map(args.file)
    with open(args.coloring, encoding="utf-8") as fh:
        phi = io.parse_coloring(fh.read(), args.index)
    h = wh_from_coloring(m, phi, PairPartition(args.partition))
    whs = enumerate_weak_hamiltonians(m, jobs=args.jobs)
    index = next((i for i, x in enumerate(whs) if x.edges == h.edges), None)
    record = io.wh_record(index, h)
    record["partition"] = args.partition
    _write(io.dumps(record))


def cmd_oracle(args):
    m = io.read_map(args.file)
    found = enumerate_colorings_bruteforce(m, args.colors, canonical=args.canonical, jobs=args.jobs)
    _write(io.dumps({"palette_size": args.colors, "canonical": args.canonical, "count": len(found),
                     "colorings": [list(c.colors) for c in found]}))


def cmd_check(args):
    m = io.read_map(args.file)
    report = run_checks(m)
    _write(io.dumps(report.as_dict()))
    return 0 if report.passed else 1


def cmd_gen(args):
    m = generate(args.name, args.n)
    label = args.name if args.n is None else f"{args.name} {args.n}"
    _write(io.emit_map_document(m, name=label), args.output)


def cmd_corpus(args):
    data = io.emit_planar_code(standard_corpus(args.extra))
    if args.output in (None, "-"):
        sys.stdout.buffer.write(data)
    else:
        with open(args.output, "wb") as fh:
            fh.write(data)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakham", description=__doc__.splitlines()[0])
    p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, fn, file=True, **kw):
        sp = sub.add_parser(name, **kw)
        if file:
            sp.add_argument("file")
        sp.set_defaults(func=fn)
        return sp

    command("validate", cmd_validate, help="validate a map document")
    command("faces", cmd_faces, help="list faces and the dual adjacency")
    sp = command("resolve", cmd_resolve, help="blow up vertices of degree >= 4")
    sp.add_argument("-o", "--output", required=True)
    sp = command("wh", cmd_wh, help="enumerate weak Hamiltonians")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--dot", action="store_true")
    for name, fn, hlp in (("mutate", cmd_mutate, "mutate one weak Hamiltonian"),
                          ("color", cmd_color, "4-coloring from a weak Hamiltonian and its mutation")):
        sp = command(name, fn, help=hlp)
        sp.add_argument("--wh", type=int, required=True)
        sp.add_argument("--selection", type=lambda s: int(s, 0), required=True,
                        help="bit i picks the matching of cycle i (0b/0x prefixes accepted)")
        if name == "color":
            sp.add_argument("--dot")
    sp = command("moduli", cmd_moduli, help="weak Hamiltonian graph")
    sp.add_argument("--dot")
    sp.add_argument("--with-cliques", action="store_true")
    sp = command("chromatic", cmd_chromatic, help="chromatic graph")
    sp.add_argument("--multigraph", action="store_true")
    sp.add_argument("--dot")
    sp = command("from-coloring", cmd_from_coloring, help="weak Hamiltonian from a 4-coloring")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--partition", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--index", type=int, default=0, help="which coloring to use when given oracle output")
    sp = command("oracle", cmd_oracle, help="brute-force face colorings")
    sp.add_argument("--colors", type=int, default=4)
    sp.add_argument("--canonical", action="store_true")
    command("check", cmd_check, help="run the invariant suite; exit 0 iff all pass")
    sp = command("gen", cmd_gen, file=False, help=f"generate a map ({', '.join(GENERATOR_NAMES)})")
    sp.add_argument("name")
    sp.add_argument("n", nargs="?", type=int)
    sp.add_argument("-o", "--output")
    sp = command("corpus", cmd_corpus, file=False, help="write the cubic test corpus as planar code")
    sp.add_argument("-o", "--output")
    sp.add_argument("--extra", type=int, default=20, help="number of 14-vertex maps")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except (WeakHamError, OSError, ValueError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
