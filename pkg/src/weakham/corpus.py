"""Test corpora: bridgeless cubic planar maps and maps needing resolution.

Cubic maps are grown from the theta map by edge insertion: subdivide two
edges (or one edge twice) and join the new vertices.  Insertion keeps maps
bridgeless and cubic; each result is kept once per canonical code.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import generators
from .errors import MapError
from .maps import PlanarMap, build_map, canonical_code


@dataclass(frozen=True)
class CorpusEntry:
    source: str
    map: PlanarMap | None
    provenance: str
    error: str | None = None


def _insertions(m: PlanarMap):
    V, E = m.num_vertices, m.num_edges
    base = [list(r) for r in m.rotations]
    split1, split2, chord = E, E + 1, E + 2
    for e1 in range(E):
        for e2 in range(e1, E):
            for flip_a in (False, True):
                for flip_b in (False, True):
                    rot = [list(r) for r in base]
                    far1 = m.vertex_of[2 * e1 + 1]
                    if e1 != e2:
                        far2 = m.vertex_of[2 * e2 + 1]
                        rot[far1][rot[far1].index(2 * e1 + 1)] = 2 * split1 + 1
                        rot[far2][rot[far2].index(2 * e2 + 1)] = 2 * split2 + 1
                        a = [2 * e1 + 1, 2 * split1, 2 * chord]
                        b = [2 * e2 + 1, 2 * split2, 2 * chord + 1]
                    else:
                        rot[far1][rot[far1].index(2 * e1 + 1)] = 2 * split2 + 1
                        a = [2 * e1 + 1, 2 * split1, 2 * chord]
                        b = [2 * split1 + 1, 2 * split2, 2 * chord + 1]
                    if flip_a:
                        a = [a[0], a[2], a[1]]
                    if flip_b:
                        b = [b[0], b[2], b[1]]
                    try:
                        yield build_map(rot + [a, b])
                    except MapError:
                        continue


def cubic_maps(max_vertices: int, simple_only: bool = False) -> dict[int, list[PlanarMap]]:
    """Bridgeless cubic planar maps by vertex count, up to orientation-preserving
    isomorphism, reachable from the theta map by edge insertions.

    ``simple_only`` drops maps with parallel edges from the output (they are
    still used as intermediate steps).
    """
    levels = {2: [generators.theta()]}
    for n in range(4, max_vertices + 1, 2):
        seen = {}
        for m in levels[n - 2]:
            for child in _insertions(m):
                code = canonical_code(child)
                if code not in seen:
                    seen[code] = child
        levels[n] = [seen[c] for c in sorted(seen)]
    if simple_only:
        return {n: [m for m in ms if is_simple(m)] for n, ms in levels.items()}
    return levels


def is_simple(m: PlanarMap) -> bool:
    pairs = [tuple(sorted(m.endpoints(e))) for e in range(m.num_edges)]
    return len(set(pairs)) == len(pairs)


def dual(m: PlanarMap) -> PlanarMap:
    """Dual map: faces become vertices, darts keep their ids."""
    return build_map(m.face_set.faces)


def resolution_maps() -> list[tuple[str, PlanarMap]]:
    """Maps with at least one vertex of degree 4 or more and none below 3."""
    out = [("octahedron", generators.octahedron())]
    out += [(f"wheel {n}", generators.wheel(n)) for n in range(4, 10)]
    out += [(f"antiprism {n}", generators.antiprism(n)) for n in range(3, 7)]
    for n, ms in sorted(cubic_maps(10, simple_only=True).items()):
        for k, m in enumerate(ms):
            if any(len(f) < 3 for f in m.face_set.faces):
                continue
            d = dual(m)
            if max(len(r) for r in d.rotations) >= 4:
                out.append((f"dual of cubic map {n}.{k}", d))
    return out


def standard_corpus(extra_14: int = 20) -> list[PlanarMap]:
    """Fixture corpus: every map up to 10 vertices, the simple 12-vertex
    maps, and the first ``extra_14`` simple 14-vertex maps grown from them."""
    levels = cubic_maps(12)
    out = [m for n in sorted(levels) if n <= 10 for m in levels[n]]
    simple12 = [m for m in levels[12] if is_simple(m)]
    out += simple12
    seen = {}
    for m in simple12:
        for child in _insertions(m):
            if is_simple(child):
                seen.setdefault(canonical_code(child), child)
    out += [seen[c] for c in sorted(seen)[:extra_14]]
    return out
