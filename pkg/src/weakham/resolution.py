"""Blowups and the resolution of a map to a cubic map."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import FaceColoring
from .errors import DegreeTooLow, IncompleteCorrespondence, NoSuchVertex
from .maps import PlanarMap, build_map


@dataclass(frozen=True)
class FaceCorrespondence:
    """``forward[f]`` is the resolved face carrying original face ``f``."""

    forward: tuple[int, ...]
    new_faces: tuple[int, ...]

    @classmethod
    def identity(cls, num_faces: int) -> FaceCorrespondence:
        return cls(tuple(range(num_faces)), ())

    def then(self, other: FaceCorrespondence) -> FaceCorrespondence:
        """Compose with a correspondence applied to the resolved map."""
        forward = tuple(other.forward[f] for f in self.forward)
        new = tuple(sorted([other.forward[f] for f in self.new_faces] + list(other.new_faces)))
        return FaceCorrespondence(forward, new)


def blowup(m: PlanarMap, v: int) -> tuple[PlanarMap, FaceCorrespondence]:
    """Replace vertex ``v`` of degree ``d`` by a cycle of ``d`` cubic vertices.

    The first new vertex keeps the id ``v``; the others and the ``d`` new
    cycle edges are appended.  New cycle edge ``E + i`` runs from the vertex
    holding the ``i``-th dart of ``v`` to the next one counterclockwise.
    """
    if not 0 <= v < m.num_vertices:
        raise NoSuchVertex(f"vertex {v} not in 0..{m.num_vertices - 1}")
    rot = m.rotations[v]
    d = len(rot)
    if d < 3:
        raise DegreeTooLow(f"vertex {v} has degree {d}; blowup needs at least 3")
    E, V = m.num_edges, m.num_vertices
    holder = [v] + [V + i for i in range(d - 1)]
    rotations = [list(r) for r in m.rotations] + [[] for _ in range(d - 1)]
    for i, dart in enumerate(rot):
        to_next = 2 * (E + i)
        from_prev = 2 * (E + (i - 1) % d) + 1
        rotations[holder[i]] = [dart, to_next, from_prev]
    new_map = build_map(rotations)

    old_faces = m.face_set.faces
    new_fo = new_map.face_set.face_of
    forward = tuple(new_fo[min(face)] for face in old_faces)
    new_faces = tuple(sorted(set(range(new_map.num_faces)) - set(forward)))
    return new_map, FaceCorrespondence(forward, new_faces)


def resolve(m: PlanarMap) -> tuple[PlanarMap, FaceCorrespondence]:
    """Blow up every vertex of degree 4 or more, lowest id first."""
    low = [v for v in range(m.num_vertices) if m.degree(v) < 3]
    if low:
        raise DegreeTooLow(f"vertex {low[0]} has degree {m.degree(low[0])}")
    corr = FaceCorrespondence.identity(m.num_faces)
    # blowups only append vertices, so the original high-degree ids stay valid
    for v in [v for v in range(m.num_vertices) if m.degree(v) >= 4]:
        m, step = blowup(m, v)
        corr = corr.then(step)
    return m, corr


def pull_back_coloring(coloring: FaceColoring, corr: FaceCorrespondence) -> FaceColoring:
    """Color each original face like its resolved counterpart."""
    n = len(coloring.colors)
    missing = [f for f in corr.forward if not 0 <= f < n]
    if missing:
        raise IncompleteCorrespondence(f"coloring has no entry for resolved face {missing[0]}")
    return FaceColoring(coloring.palette_size, tuple(coloring.colors[f] for f in corr.forward))
