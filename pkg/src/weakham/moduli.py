"""The weak Hamiltonian graph and the chromatic graph of a cubic map.

Vertices of the weak Hamiltonian graph are the weak Hamiltonians of the map
and edges join mutation pairs.  Every edge ``{h1, h2}`` lies in a unique
triangle ``{h1, h2, h1 ^ h2}``, a chromatic clique; cliques correspond to
4-colorings up to relabeling.  The chromatic graph has one vertex per
clique, and two cliques are adjacent when they share a weak Hamiltonian.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .coloring import FaceColoring, canonical_coloring, four_coloring_from_pair, wh_triple_from_coloring
from .errors import EdgeInTwoCliques, MissingThirdVertex, OverlapTooLarge, TooLarge, UnknownClique
from .factors import EdgeSubset, WeakHamiltonian, enumerate_weak_hamiltonians
from .maps import PlanarMap
from .mutation import mutate


@dataclass(frozen=True)
class WeakHamiltonianGraph:
    vertices: tuple[WeakHamiltonian, ...]
    edges: tuple[tuple[int, int], ...]
    clique_of_edge: dict = field(default_factory=dict, compare=False)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def index_of(self, s: EdgeSubset) -> int | None:
        return self._index.get(s.bits)

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {h.edges.bits: i for i, h in enumerate(self.vertices)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def neighbors(self) -> list[set[int]]:
        nb = [set() for _ in self.vertices]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return nb


@dataclass(frozen=True, order=True)
class ChromaticClique:
    members: tuple[int, int, int]


@dataclass(frozen=True)
class ChromaticGraph:
    """Cliques as vertices; ``shared_wh[k]`` witnesses edge ``edges[k]``.

    ``witnesses`` maps each weak Hamiltonian lying in two or more cliques to
    those clique ids.  With ``multigraph=True`` one edge is listed per
    (witness, clique pair), so repeated pairs would stay visible.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    shared_wh: tuple[int, ...]
    witnesses: dict
    multigraph: bool = False


def build_wh_graph(m: PlanarMap, jobs: int = 1) -> WeakHamiltonianGraph:
    whs = enumerate_weak_hamiltonians(m, jobs=jobs)
    index = {h.edges.bits: i for i, h in enumerate(whs)}
    edges = set()
    for i, h in enumerate(whs):
        for sel in range(1 << h.num_cycles):
            j = index[mutate(m, h, sel).edges.bits]
            edges.add((min(i, j), max(i, j)))
    return WeakHamiltonianGraph(tuple(whs), tuple(sorted(edges)))


def find_chromatic_cliques(g: WeakHamiltonianGraph) -> list[ChromaticClique]:
    """Complete every edge to its clique ``{h1, h2, h1 ^ h2}``.

    Fills ``g.clique_of_edge`` and returns cliques sorted by members.
    """
    edge_set = set(g.edges)
    triples = {}
    per_edge = {}
    for i, j in g.edges:
        k = g.index_of(g.vertices[i].edges ^ g.vertices[j].edges)
        if k is None:
            raise MissingThirdVertex(f"h{i} ^ h{j} is not a weak Hamiltonian")
        t = tuple(sorted((i, j, k)))
        for a, b in combinations(t, 2):
            if (a, b) not in edge_set:
                raise MissingThirdVertex(f"clique {t} misses edge {(a, b)}")
        triples[t] = None
        per_edge[(i, j)] = t
    cliques = sorted(ChromaticClique(t) for t in triples)
    cid = {c.members: n for n, c in enumerate(cliques)}
    owners = defaultdict(list)
    for n, c in enumerate(cliques):
        for a, b in combinations(c.members, 2):
            owners[(a, b)].append(n)
    for e, ids in owners.items():
        if len(ids) > 1:
            raise EdgeInTwoCliques(f"edge {e} lies in cliques {ids}")
    g.clique_of_edge.clear()
    g.clique_of_edge.update({e: cid[t] for e, t in per_edge.items()})
    return cliques


def build_chromatic_graph(g: WeakHamiltonianGraph, cliques: Sequence[ChromaticClique],
                          multigraph: bool = False) -> ChromaticGraph:
    containing = defaultdict(list)
    for n, c in enumerate(cliques):
        for v in c.members:
            containing[v].append(n)
    for a, b in combinations(range(len(cliques)), 2):
        shared = set(cliques[a].members) & set(cliques[b].members)
        if len(shared) >= 2:
            raise OverlapTooLarge(f"cliques {a} and {b} share {sorted(shared)}")
    witnesses = {v: tuple(ids) for v, ids in sorted(containing.items()) if len(ids) > 1}
    pairs = []
    for v, ids in witnesses.items():
        for a, b in combinations(ids, 2):
            pairs.append(((a, b), v))
    pairs.sort()
    if not multigraph:
        seen = {}
        for e, v in pairs:
            seen.setdefault(e, v)
        pairs = sorted(seen.items())
    return ChromaticGraph(len(cliques), tuple(e for e, _ in pairs), tuple(v for _, v in pairs),
                          witnesses, multigraph)


def clique_to_coloring(m: PlanarMap, g: WeakHamiltonianGraph, clique: ChromaticClique) -> FaceColoring:
    a, b, _ = clique.members
    return canonical_coloring(four_coloring_from_pair(m, g.vertices[a], g.vertices[b]))


def coloring_to_clique(m: PlanarMap, g: WeakHamiltonianGraph, cliques: Sequence[ChromaticClique],
                       coloring: FaceColoring) -> int:
    ids = []
    for h in wh_triple_from_coloring(m, coloring):
        i = g.index_of(h.edges)
        if i is None:
            raise UnknownClique("coloring yields a weak Hamiltonian missing from the graph")
        ids.append(i)
    target = ChromaticClique(tuple(sorted(ids)))
    for n, c in enumerate(cliques):
        if c == target:
            return n
    raise UnknownClique(f"no clique with members {target.members}")


@dataclass
class Check:
    name: str
    passed: bool
    counterexamples: list = field(default_factory=list)


@dataclass
class StructureReport:
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self):
        return {"passed": self.passed,
                "checks": [{"name": c.name, "passed": c.passed,
                            "counterexamples": c.counterexamples[:5]} for c in self.checks]}


def validate_structure(g: WeakHamiltonianGraph, cliques: Sequence[ChromaticClique]) -> StructureReport:
    """Check the structural laws of the weak Hamiltonian graph.

    Never raises; every failed law is reported with up to a handful of
    counterexamples.
    """
    checks = []
    nb = g.neighbors()
    deg = g.degrees()

    bad = [e for e in g.edges if e[0] >= e[1]]
    dup = len(set(g.edges)) != len(g.edges)
    checks.append(Check("simple graph", not bad and not dup, bad))

    bad = [(i, deg[i], 2 ** h.num_cycles) for i, h in enumerate(g.vertices) if deg[i] != 2 ** h.num_cycles]
    checks.append(Check("degree is 2^N", not bad, bad))

    bad = []
    for i, j in g.edges:
        k = g.index_of(g.vertices[i].edges ^ g.vertices[j].edges)
        if k is None or k not in nb[i] or k not in nb[j]:
            bad.append((i, j))
    checks.append(Check("h1 ^ h2 is a common neighbour", not bad, bad))

    bad = []
    for c in cliques:
        a, b, k = (g.vertices[i].edges for i in c.members)
        x, y, z = c.members
        if (a ^ b ^ k) or y not in nb[x] or z not in nb[x] or z not in nb[y]:
            bad.append(c.members)
    checks.append(Check("cliques are triangles summing to zero", not bad, bad))

    count = defaultdict(int)
    for c in cliques:
        for e in combinations(c.members, 2):
            count[e] += 1
    bad = [e for e in g.edges if count.get(e, 0) != 1]
    bad += [e for e in count if e not in set(g.edges)]
    checks.append(Check("every edge in exactly one clique", not bad, bad))

    member = defaultdict(int)
    for c in cliques:
        for v in c.members:
            member[v] += 1
    bad = [(i, member[i]) for i, h in enumerate(g.vertices) if member[i] != 2 ** (h.num_cycles - 1)]
    checks.append(Check("vertex lies in 2^(N-1) cliques", not bad, bad))

    bad = [(a.members, b.members) for a, b in combinations(cliques, 2)
           if len(set(a.members) & set(b.members)) > 1]
    checks.append(Check("cliques share at most one vertex", not bad, bad))
    return StructureReport(checks)


def _adjacency(g) -> list[set[int]]:
    if isinstance(g, tuple) and len(g) == 2 and isinstance(g[0], int):
        n, edges = g
    else:
        n, edges = g.num_vertices, g.edges
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def graph_iso_small(g1, g2, limit: int = 12) -> bool:
    """Exact isomorphism test for small simple graphs.

    Accepts graph objects with ``num_vertices`` and ``edges`` or plain
    ``(n, edges)`` tuples.  Vertices are only matched within equal
    (degree, sorted neighbour degrees) classes.
    """
    a1, a2 = _adjacency(g1), _adjacency(g2)
    n = len(a1)
    if n > limit or len(a2) > limit:
        raise TooLarge(f"graph_iso_small handles at most {limit} vertices")
    if n != len(a2) or sum(map(len, a1)) != sum(map(len, a2)):
        return False

    def signature(adj):
        return [(len(adj[v]), tuple(sorted(len(adj[w]) for w in adj[v]))) for v in range(len(adj))]

    s1, s2 = signature(a1), signature(a2)
    if sorted(s1) != sorted(s2):
        return False
    order = sorted(range(n), key=lambda v: (s1[v], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or s2[w] != s1[v]:
                continue
            if any((mapping[u] in a2[w]) != (u in a1[v]) for u in order[:k]):
                continue
            mapping[v] = w
            used[w] = True
            if extend(k + 1):
                return True
            used[w] = False
        mapping[v] = -1
        return False

    return extend(0)
