"""Face colorings and their correspondence with weak Hamiltonians.

Colors live in ``{1, ..., k}``.  Two weak Hamiltonians that cover every edge
give two 2-colorings of the faces, and the pair of them is a proper
4-coloring.  Conversely each of the three ways to split four colors into
two pairs turns a proper 4-coloring back into a weak Hamiltonian.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .errors import ImproperColoring, NotCoveringPair, NotCubic, ParityInconsistency
from .factors import EdgeSubset, WeakHamiltonian
from .maps import PlanarMap, dual_adjacency, face_neighbors, is_cubic


@dataclass(frozen=True)
class FaceColoring:
    palette_size: int
    colors: tuple[int, ...]

    def __post_init__(self):
        bad = [c for c in self.colors if not 1 <= c <= self.palette_size]
        if bad:
            raise ValueError(f"color {bad[0]} outside 1..{self.palette_size}")

    def color_of(self, face: int) -> int:
        return self.colors[face]

    def __len__(self):
        return len(self.colors)


class PairPartition(Enum):
    """The three splittings of ``{1,2,3,4}`` into two pairs."""

    P12_34 = 1
    P13_24 = 2
    P14_23 = 3

    @property
    def pairs(self) -> tuple[frozenset, frozenset]:
        partner = {1: 2, 2: 3, 3: 4}[self.value]
        first = frozenset({1, partner})
        return first, frozenset({1, 2, 3, 4}) - first

    def side(self, color: int) -> int:
        """1 for colors in the pair containing color 1, else 2."""
        return 1 if color in self.pairs[0] else 2


# (phi1, phi2) -> color
GAMMA = {(1, 1): 1, (1, 2): 2, (2, 1): 3, (2, 2): 4}


def is_proper(m: PlanarMap, coloring: FaceColoring) -> bool:
    if len(coloring.colors) != m.num_faces:
        return False
    c = coloring.colors
    return all(c[f] != c[g] for f, g in dual_adjacency(m))


def two_coloring_from_wh(m: PlanarMap, h: WeakHamiltonian | EdgeSubset,
                         base_color: int = 1) -> FaceColoring:
    """2-coloring of the faces that changes exactly across the edges of ``h``.

    Colors are propagated from face 0 (which gets ``base_color``) along a
    breadth-first search of the dual graph, and every other dual edge is
    checked for consistency.
    """
    s = h.edges if isinstance(h, WeakHamiltonian) else h
    F = m.num_faces
    across = [[] for _ in range(F)]
    for e, (f, g) in enumerate(dual_adjacency(m)):
        flip = 1 if e in s else 0
        across[f].append((g, flip))
        across[g].append((f, flip))
    parity = [-1] * F
    parity[0] = 0
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for g, flip in across[f]:
            want = parity[f] ^ flip
            if parity[g] == -1:
                parity[g] = want
                queue.append(g)
            elif parity[g] != want:
                raise ParityInconsistency(f"faces {f} and {g} disagree; edge set is not a dual cut")
    other = 3 - base_color
    return FaceColoring(2, tuple(base_color if p == 0 else other for p in parity))


def four_coloring_from_pair(m: PlanarMap, h1: WeakHamiltonian, h2: WeakHamiltonian) -> FaceColoring:
    if (h1.edges | h2.edges) != EdgeSubset.full(m.num_edges):
        raise NotCoveringPair("the two weak Hamiltonians do not cover every edge")
    phi1 = two_coloring_from_wh(m, h1).colors
    phi2 = two_coloring_from_wh(m, h2).colors
    return FaceColoring(4, tuple(GAMMA[a, b] for a, b in zip(phi1, phi2)))


def _require_proper4(m: PlanarMap, coloring: FaceColoring):
    if coloring.palette_size != 4 or not is_proper(m, coloring):
        raise ImproperColoring("expected a proper 4-coloring of the map's faces")


def wh_from_coloring(m: PlanarMap, coloring: FaceColoring,
                     partition: PairPartition | int) -> WeakHamiltonian:
    """Edges separating the two color pairs of ``partition``."""
    if not is_cubic(m):
        raise NotCubic("weak Hamiltonians from colorings need a cubic map")
    _require_proper4(m, coloring)
    p = PairPartition(partition)
    c = coloring.colors
    s = EdgeSubset.from_edges(
        (e for e, (f, g) in enumerate(dual_adjacency(m)) if p.side(c[f]) != p.side(c[g])),
        m.num_edges)
    return WeakHamiltonian.from_subset(m, s)


def wh_triple_from_coloring(m: PlanarMap, coloring: FaceColoring) -> tuple[WeakHamiltonian, ...]:
    return tuple(wh_from_coloring(m, coloring, p) for p in PairPartition)


def canonical_coloring(coloring: FaceColoring) -> FaceColoring:
    """Relabel colors in order of first appearance over face ids."""
    relabel = {}
    for c in coloring.colors:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
    return FaceColoring(coloring.palette_size, tuple(relabel[c] for c in coloring.colors))


def _color_faces(nbrs, k, canonical, colors, start, out):
    F = len(nbrs)
    f = start
    if f == F:
        out.append(tuple(colors))
        return
    top = k
    if canonical:
        top = min(k, max(colors[:f], default=0) + 1)
    for c in range(1, top + 1):
        if all(colors[g] != c for g in nbrs[f] if g < f):
            colors[f] = c
            _color_faces(nbrs, k, canonical, colors, f + 1, out)
    colors[f] = 0


def _oracle_task(args):
    nbrs, k, first = args
    colors = [0] * len(nbrs)
    colors[0] = first
    out = []
    _color_faces(nbrs, k, False, colors, 1, out)
    return out


def enumerate_colorings_bruteforce(m: PlanarMap, k: int = 4, canonical: bool = False,
                                   jobs: int = 1) -> list[FaceColoring]:
    """Every proper face coloring with colors ``1..k``, by backtracking.

    Faces are colored in id order, so the output is lexicographically
    sorted.  ``canonical=True`` only lets a face open the next unused color,
    which yields one coloring per relabeling orbit.
    """
    nbrs = face_neighbors(m)
    if any(f in nb for f, nb in enumerate(nbrs)):
        return []
    if jobs > 1 and not canonical:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_oracle_task, [(nbrs, k, c) for c in range(1, k + 1)])
            found = [t for part in parts for t in part]
    else:
        found = []
        _color_faces(nbrs, k, canonical, [0] * len(nbrs), 0, found)
    return [FaceColoring(k, t) for t in found]

