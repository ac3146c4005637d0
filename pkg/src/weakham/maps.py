"""Planar maps given as rotation systems.

Darts (half-edges) are numbered ``0 .. 2E-1``.  The two darts of edge ``e``
are ``2e`` and ``2e+1``, so the edge involution is ``d ^ 1`` and the edge of
a dart is ``d >> 1``.  Each vertex lists its darts in counterclockwise
order; ``sigma`` sends a dart to the next one around its vertex.  Faces are
the orbits of ``phi(d) = sigma(d ^ 1)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import Bridge, DanglingDart, Disconnected, Loop, MapError, NonSphere


@dataclass(frozen=True)
class FaceSet:
    """Face cycles of a map, sorted by their smallest dart."""

    faces: tuple[tuple[int, ...], ...]
    face_of: tuple[int, ...]

    def __len__(self):
        return len(self.faces)


@dataclass(frozen=True)
class PlanarMap:
    rotations: tuple[tuple[int, ...], ...]
    sigma: tuple[int, ...]
    vertex_of: tuple[int, ...]

    @property
    def num_darts(self) -> int:
        return len(self.sigma)

    @property
    def num_edges(self) -> int:
        return len(self.sigma) // 2

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_faces(self) -> int:
        return len(self.face_set)

    @staticmethod
    def alpha(d: int) -> int:
        return d ^ 1

    def phi(self, d: int) -> int:
        return self.sigma[d ^ 1]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.vertex_of[2 * e], self.vertex_of[2 * e + 1]

    def edges_at(self, v: int) -> list[int]:
        return [d >> 1 for d in self.rotations[v]]

    @cached_property
    def face_set(self) -> FaceSet:
        return _trace_faces(self.sigma)

    def __repr__(self):
        return (f"PlanarMap(V={self.num_vertices}, E={self.num_edges}, "
                f"rotations={[list(r) for r in self.rotations]})")


def _trace_faces(sigma: Sequence[int]) -> FaceSet:
    n = len(sigma)
    face_of = [-1] * n
    faces = []
    for start in range(n):
        if face_of[start] != -1:
            continue
        fid = len(faces)
        cycle = []
        d = start
        while face_of[d] == -1:
            face_of[d] = fid
            cycle.append(d)
            d = sigma[d ^ 1]
        faces.append(tuple(cycle))
    return FaceSet(tuple(faces), tuple(face_of))


def build_map(rotations: Sequence[Sequence[int]]) -> PlanarMap:
    """Validate a rotation system and return the corresponding map.

    ``rotations[v]`` lists the darts at vertex ``v`` counterclockwise.
    Raises a :class:`~weakham.errors.MapError` subclass when the darts are
    not a permutation of ``0..2E-1``, the map is disconnected, has a loop or
    a bridge, or does not live on the sphere.
    """
    rotations = tuple(tuple(int(d) for d in rot) for rot in rotations)
    if not rotations:
        raise MapError("map has no vertices")
    num_darts = sum(len(r) for r in rotations)
    if num_darts == 0 or num_darts % 2:
        raise DanglingDart(f"expected an even positive number of darts, got {num_darts}")

    vertex_of = [-1] * num_darts
    sigma = [-1] * num_darts
    for v, rot in enumerate(rotations):
        if not rot:
            raise Disconnected(f"vertex {v} has no incident darts")
        for i, d in enumerate(rot):
            if not 0 <= d < num_darts:
                raise DanglingDart(f"dart {d} at vertex {v} is out of range 0..{num_darts - 1}")
            if vertex_of[d] != -1:
                raise DanglingDart(f"dart {d} appears twice (vertices {vertex_of[d]} and {v})")
            vertex_of[d] = v
            sigma[d] = rot[(i + 1) % len(rot)]

    for e in range(num_darts // 2):
        if vertex_of[2 * e] == vertex_of[2 * e + 1]:
            raise Loop(f"edge {e} is a loop at vertex {vertex_of[2 * e]}")

    seen = [False] * len(rotations)
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for d in rotations[v]:
            w = vertex_of[d ^ 1]
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    if not all(seen):
        raise Disconnected(f"vertex {seen.index(False)} is unreachable from vertex 0")

    m = PlanarMap(rotations, tuple(sigma), tuple(vertex_of))
    fs = m.face_set
    v, e, f = m.num_vertices, m.num_edges, len(fs)
    if v - e + f != 2:
        raise NonSphere(f"Euler characteristic V - E + F = {v} - {e} + {f} = {v - e + f}, expected 2")
    for e in range(m.num_edges):
        if fs.face_of[2 * e] == fs.face_of[2 * e + 1]:
            raise Bridge(f"edge {e} has face {fs.face_of[2 * e]} on both sides")
    return m


def faces(m: PlanarMap) -> FaceSet:
    return m.face_set


def is_cubic(m: PlanarMap) -> bool:
    return all(len(r) == 3 for r in m.rotations)


def dual_adjacency(m: PlanarMap) -> tuple[tuple[int, int], ...]:
    """For each edge id, the faces on the sides of its two darts.

    Parallel adjacencies are kept: two faces sharing ``k`` edges appear in
    ``k`` records.
    """
    fo = m.face_set.face_of
    return tuple((fo[2 * e], fo[2 * e + 1]) for e in range(m.num_edges))


def face_neighbors(m: PlanarMap) -> list[list[int]]:
    """Sorted, deduplicated neighbour lists of the dual graph."""
    nbrs = [set() for _ in range(m.num_faces)]
    for f, g in dual_adjacency(m):
        nbrs[f].add(g)
        nbrs[g].add(f)
    return [sorted(s) for s in nbrs]


def vertex_faces(m: PlanarMap, v: int) -> list[int]:
    """Faces around ``v`` in rotation order (one per incident dart)."""
    fo = m.face_set.face_of
    return [fo[d] for d in m.rotations[v]]


def canonical_code(m: PlanarMap) -> tuple[int, ...]:
    """Invariant of the map up to orientation-preserving isomorphism.

    For each root dart, darts are relabelled in breadth-first order along
    ``sigma`` and ``alpha``; the lexicographically smallest resulting
    permutation pair is returned.
    """
    n = m.num_darts
    sigma = m.sigma
    best = None
    for root in range(n):
        label = {root: 0}
        order = [root]
        code = []
        i = 0
        while i < len(order):
            d = order[i]
            for nxt in (sigma[d], d ^ 1):
                if nxt not in label:
                    label[nxt] = len(order)
                    order.append(nxt)
                code.append(label[nxt])
            i += 1
            if best is not None and code > best[:len(code)]:
                break
        else:
            if best is None or code < best:
                best = code
    return tuple(best)


def abstract_bridges(m: PlanarMap) -> list[int]:
    """Bridges of the underlying multigraph, ignoring the embedding.

    Iterative lowpoint search that skips only the tree edge's own id, so a
    doubled edge is never reported.
    """
    n = m.num_vertices
    disc = [-1] * n
    low = [0] * n
    bridges = []
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(m.rotations[root]))]
        while stack:
            v, via, it = stack[-1]
            for d in it:
                e = d >> 1
                if e == via:
                    continue
                w = m.vertex_of[d ^ 1]
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(m.rotations[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        bridges.append(via)
    return sorted(bridges)
