"""Named planar maps built from straight-line drawings."""

from __future__ import annotations

import math
from typing import Sequence

from .errors import BadParameter, UnknownGenerator
from .maps import PlanarMap, build_map


def map_from_drawing(coords: Sequence[tuple[float, float]],
                     edges: Sequence[tuple[int, int]]) -> PlanarMap:
    """Rotation system of a straight-line plane drawing of a simple graph.

    Edge ``k`` of ``edges`` gets darts ``2k`` (at its first endpoint) and
    ``2k+1``; neighbours are ordered counterclockwise by angle.
    """
    incident = [[] for _ in coords]
    for k, (u, v) in enumerate(edges):
        incident[u].append((2 * k, v))
        incident[v].append((2 * k + 1, u))

    def angle(u, w):
        (x0, y0), (x1, y1) = coords[u], coords[w]
        return math.atan2(y1 - y0, x1 - x0)

    rotations = []
    for u, darts in enumerate(incident):
        darts.sort(key=lambda dw: angle(u, dw[1]))
        rotations.append([d for d, _ in darts])
    return build_map(rotations)


def _circle(n, radius, phase=0.0):
    return [(radius * math.cos(phase + 2 * math.pi * i / n),
             radius * math.sin(phase + 2 * math.pi * i / n)) for i in range(n)]


def tetrahedron() -> PlanarMap:
    coords = _circle(3, 2.0) + [(0.0, 0.0)]
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]
    return map_from_drawing(coords, edges)


def prism(n: int) -> PlanarMap:
    """Circular ladder: outer cycle ``0..n-1``, inner cycle ``n..2n-1``."""
    if n < 3:
        raise BadParameter(f"prism needs n >= 3, got {n}")
    coords = _circle(n, 2.0) + _circle(n, 1.0)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return map_from_drawing(coords, edges)


def k23() -> PlanarMap:
    coords = [(0.0, 2.0), (0.0, -2.0), (-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]
    edges = [(a, m) for m in (2, 3, 4) for a in (0, 1)]
    return map_from_drawing(coords, edges)


def theta() -> PlanarMap:
    """Two vertices joined by three parallel edges."""
    return build_map([[0, 2, 4], [5, 3, 1]])


def octahedron() -> PlanarMap:
    coords = _circle(3, 3.0) + _circle(3, 1.0, math.pi / 3)
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    # inner vertex 3 sits between outer 0 and 1, and so on
    edges += [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]
    return map_from_drawing(coords, edges)


def wheel(n: int) -> PlanarMap:
    """Hub of degree ``n`` joined to an ``n``-cycle rim."""
    if n < 3:
        raise BadParameter(f"wheel needs n >= 3, got {n}")
    coords = _circle(n, 2.0) + [(0.0, 0.0)]
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return map_from_drawing(coords, edges)


def antiprism(n: int) -> PlanarMap:
    if n < 3:
        raise BadParameter(f"antiprism needs n >= 3, got {n}")
    coords = _circle(n, 3.0) + _circle(n, 1.0, math.pi / n)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)] + [((i + 1) % n, n + i) for i in range(n)]
    return map_from_drawing(coords, edges)


_GENERATORS = {
    "tetrahedron": (tetrahedron, False),
    "prism": (prism, True),
    "k23": (k23, False),
    "theta": (theta, False),
    "octahedron": (octahedron, False),
    "wheel": (wheel, True),
    "antiprism": (antiprism, True),
}

GENERATOR_NAMES = tuple(_GENERATORS)


def generate(name: str, n: int | None = None) -> PlanarMap:
    try:
        fn, takes_n = _GENERATORS[name]
    except KeyError:
        raise UnknownGenerator(f"unknown generator {name!r}; choose from {', '.join(_GENERATORS)}") from None
    if takes_n:
        if n is None:
            raise BadParameter(f"generator {name!r} needs a size parameter")
        return fn(int(n))
    if n is not None:
        raise BadParameter(f"generator {name!r} takes no size parameter")
    return fn()
