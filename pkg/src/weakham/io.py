"""Map documents, planar code, and JSON exports."""

from __future__ import annotations

import json
from itertools import product
from typing import Iterable, Sequence

from .coloring import FaceColoring
from .errors import BadHeader, MapError, NonSphere, ParseError, TruncatedRecord
from .factors import WeakHamiltonian
from .maps import PlanarMap, build_map
from .moduli import ChromaticClique, ChromaticGraph, WeakHamiltonianGraph
from .resolution import FaceCorrespondence

PLANAR_CODE_HEADER = b">>planar_code<<"
_HEADER_VARIANTS = (b">>planar_code<<", b">>planar_code le<<", b">>planar_code be<<")


def dumps(obj) -> str:
    """Byte-stable JSON text used by every export."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# map documents

def emit_map_document(m: PlanarMap, name: str | None = None) -> str:
    doc = {"num_darts": m.num_darts, "vertex_rotations": [list(r) for r in m.rotations]}
    if name is not None:
        doc["name"] = name
    return dumps(doc)


def parse_map_document(text: str) -> PlanarMap:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("map document must be a JSON object")
    for key in ("num_darts", "vertex_rotations"):
        if key not in doc:
            raise ParseError("missing field", field=key)
    n = doc["num_darts"]
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0 or n % 2:
        raise ParseError(f"num_darts must be a positive even integer, got {n!r}", field="num_darts")
    rots = doc["vertex_rotations"]
    if not isinstance(rots, list) or not all(isinstance(r, list) for r in rots):
        raise ParseError("vertex_rotations must be a list of lists", field="vertex_rotations")
    if "name" in doc and not isinstance(doc["name"], str):
        raise ParseError("name must be a string", field="name")
    seen = set()
    for v, rot in enumerate(rots):
        for d in rot:
            if not isinstance(d, int) or isinstance(d, bool) or not 0 <= d < n:
                raise ParseError(f"vertex {v}: bad dart {d!r}", field="vertex_rotations")
            if d in seen:
                raise ParseError(f"vertex {v}: dart {d} is duplicated", field="vertex_rotations")
            seen.add(d)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise ParseError(f"dart {missing} does not appear", field="vertex_rotations")
    return build_map(rots)


def read_map(path) -> PlanarMap:
    with open(path, encoding="utf-8") as fh:
        return parse_map_document(fh.read())


# planar code

def parse_planar_code(data: bytes) -> list[PlanarMap]:
    """Decode a planar-code stream into maps.

    Planar code lists neighbours clockwise; rotations here are
    counterclockwise, so every list is reversed.  Parallel edges are paired
    by occurrence order: the ``k``-th copy of ``w`` around ``v`` goes with
    the ``k``-th copy of ``v`` around ``w`` counted in the reverse
    direction, rotated as needed to give a sphere.
    """
    return [m for m, err in iter_planar_code(data) if _raise(err)]


def _raise(err):
    if err is not None:
        raise err
    return True


def iter_planar_code(data: bytes):
    """Yield ``(map, None)`` or ``(None, error)`` per record."""
    header = next((h for h in _HEADER_VARIANTS if data.startswith(h)), None)
    if header is None:
        raise BadHeader(f"stream does not start with {PLANAR_CODE_HEADER!r}")
    big = header == b">>planar_code be<<"
    pos = len(header)
    while pos < len(data):
        if data[pos] == 0:
            width = 2
            pos += 1
        else:
            width = 1

        def read():
            nonlocal pos
            if pos + width > len(data):
                raise TruncatedRecord(f"record ends at byte {len(data)}")
            chunk = data[pos:pos + width]
            pos += width
            return int.from_bytes(chunk, "big" if big else "little")

        n = read()
        neighbours = []
        for _ in range(n):
            lst = []
            while (w := read()) != 0:
                if w > n:
                    raise TruncatedRecord(f"neighbour {w} exceeds vertex count {n}")
                lst.append(w - 1)
            neighbours.append(lst)
        try:
            yield _from_neighbour_lists([lst[::-1] for lst in neighbours]), None
        except MapError as exc:
            yield None, exc


def _from_neighbour_lists(ccw: Sequence[Sequence[int]]) -> PlanarMap:
    slots = {}
    for v, lst in enumerate(ccw):
        for i, w in enumerate(lst):
            if w == v:
                raise MapError(f"loop at vertex {v}")
            slots.setdefault((v, w), []).append(i)
    for (v, w), pos in slots.items():
        if len(pos) != len(slots.get((w, v), ())):
            raise MapError(f"edge multiplicity between {v} and {w} is not symmetric")
    groups = sorted(g for g in slots if g[0] < g[1])
    # shift k-1 pairs the i-th copy at v with the i-th copy at w counted backwards
    shift_orders = [[(len(slots[g]) - 1 - t) % len(slots[g]) for t in range(len(slots[g]))]
                    for g in groups]

    last_error = None
    for shifts in product(*shift_orders):
        partner = {}
        for (v, w), s in zip(groups, shifts):
            a, b = slots[(v, w)], slots[(w, v)]
            for i in range(len(a)):
                j = b[(s - i) % len(a)]
                partner[(v, a[i])] = (w, j)
                partner[(w, j)] = (v, a[i])
        darts = [[-1] * len(lst) for lst in ccw]
        edge = 0
        for v, lst in enumerate(ccw):
            for i in range(len(lst)):
                if darts[v][i] == -1:
                    u, j = partner[(v, i)]
                    darts[v][i], darts[u][j] = 2 * edge, 2 * edge + 1
                    edge += 1
        try:
            return build_map(darts)
        except NonSphere as exc:
            last_error = exc
    raise last_error


def emit_planar_code(maps: Iterable[PlanarMap]) -> bytes:
    """Encode maps as planar code (clockwise neighbour lists, 1-based)."""
    out = bytearray(PLANAR_CODE_HEADER)
    for m in maps:
        n = m.num_vertices
        if n > 255:
            raise ValueError("only maps with at most 255 vertices are supported")
        out.append(n)
        for rot in m.rotations:
            out.extend(m.vertex_of[d ^ 1] + 1 for d in reversed(rot))
            out.append(0)
    return bytes(out)


# JSON exports

def wh_record(index: int, h: WeakHamiltonian) -> dict:
    return {"index": index, "edges": h.edges.edges(),
            "cycles": [list(c) for c in h.cycles], "cycle_lengths": list(h.cycle_lengths)}


def weak_hamiltonians_json(whs: Sequence[WeakHamiltonian]) -> str:
    return dumps([wh_record(i, h) for i, h in enumerate(whs)])


def coloring_record(c: FaceColoring) -> dict:
    return {"palette_size": c.palette_size, "colors": list(c.colors)}


def parse_coloring(text: str, index: int = 0) -> FaceColoring:
    """Read a coloring file: a coloring object, a bare array of colors, or
    oracle output (``index`` picks one of its colorings)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if isinstance(doc, list):
        colors, palette = doc, 4
    elif isinstance(doc, dict) and "colors" in doc:
        colors, palette = doc["colors"], doc.get("palette_size", 4)
    elif isinstance(doc, dict) and isinstance(doc.get("colorings"), list):
        if not 0 <= index < len(doc["colorings"]):
            raise ParseError(f"coloring index {index} out of range", field="colorings")
        colors, palette = doc["colorings"][index], doc.get("palette_size", 4)
    else:
        raise ParseError("expected a color array or an object with 'colors'", field="colors")
    if not isinstance(colors, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in colors):
        raise ParseError("colors must be integers", field="colors")
    try:
        return FaceColoring(palette, tuple(colors))
    except ValueError as exc:
        raise ParseError(str(exc), field="colors") from None


def correspondence_record(corr: FaceCorrespondence) -> dict:
    return {"forward": [[f, g] for f, g in enumerate(corr.forward)], "new_faces": list(corr.new_faces)}


def wh_graph_record(g: WeakHamiltonianGraph, cliques: Sequence[ChromaticClique]) -> dict:
    edge_clique = {}
    for n, c in enumerate(cliques):
        a, b, k = c.members
        for e in ((a, b), (a, k), (b, k)):
            edge_clique[e] = n
    return {
        "vertices": [h.edges.edges() for h in g.vertices],
        "num_cycles": [h.num_cycles for h in g.vertices],
        "edges": [list(e) for e in g.edges],
        "cliques": [list(c.members) for c in cliques],
        "clique_of_edge": [edge_clique.get(e) for e in g.edges],
        "num_cliques": len(cliques),
    }


def chromatic_record(x: ChromaticGraph) -> dict:
    return {
        "vertices": list(range(x.num_vertices)),
        "edges": [list(e) for e in x.edges],
        "shared_wh": list(x.shared_wh),
        "witnesses": {str(v): list(ids) for v, ids in x.witnesses.items()},
        "multigraph": x.multigraph,
    }
