"""Invariant suite run by the ``check`` command.

Non-cubic maps are resolved first; the cubic suite then runs on the
resolution.  Every check records counterexamples instead of raising.
"""

from __future__ import annotations

from .coloring import (PairPartition, canonical_coloring, enumerate_colorings_bruteforce,
                       four_coloring_from_pair, is_proper, two_coloring_from_wh, wh_from_coloring)
from .factors import enumerate_weak_hamiltonians, is_weak_hamiltonian
from .maps import PlanarMap, abstract_bridges, dual_adjacency, is_cubic
from .moduli import (Check, StructureReport, build_wh_graph, clique_to_coloring, coloring_to_clique,
                     find_chromatic_cliques, validate_structure)
from .mutation import all_mutations, is_mutation_pair, mutate
from .resolution import pull_back_coloring, resolve


def map_checks(m: PlanarMap) -> list[Check]:
    fs = m.face_set
    checks = [Check("euler characteristic is 2",
                    m.num_vertices - m.num_edges + len(fs) == 2,
                    [] if m.num_vertices - m.num_edges + len(fs) == 2
                    else [(m.num_vertices, m.num_edges, len(fs))])]
    by_faces = [e for e, (f, g) in enumerate(dual_adjacency(m)) if f == g]
    by_graph = abstract_bridges(m)
    checks.append(Check("bridgeless (face test agrees with lowpoint search)",
                        not by_faces and not by_graph, by_faces + by_graph))
    again = PlanarMap(m.rotations, m.sigma, m.vertex_of).face_set
    checks.append(Check("faces are deterministic", again == fs))
    return checks


def resolution_checks(m: PlanarMap, max_colorings: int = 5000) -> tuple[list[Check], PlanarMap]:
    r, corr = resolve(m)
    high = [v for v in range(m.num_vertices) if m.degree(v) >= 4]
    dv = sum(m.degree(v) - 1 for v in high)
    de = sum(m.degree(v) for v in high)
    expect = (m.num_vertices + dv, m.num_edges + de, m.num_faces + len(high))
    got = (r.num_vertices, r.num_edges, r.num_faces)
    checks = [Check("resolution is cubic", is_cubic(r)),
              Check("blowup bookkeeping", got == expect, [] if got == expect else [got, expect])]
    bad = []
    colorings = enumerate_colorings_bruteforce(r, 4, canonical=True)[:max_colorings]
    for c in colorings:
        if not is_proper(m, pull_back_coloring(c, corr)):
            bad.append(list(c.colors))
    checks.append(Check("pulled back colorings are proper", bool(colorings) and not bad, bad))
    return checks, r


def cubic_checks(m: PlanarMap) -> list[Check]:
    checks = []
    whs = enumerate_weak_hamiltonians(m)
    E = m.num_edges

    bad = [i for i, h in enumerate(whs) if not is_weak_hamiltonian(m, h.edges)]
    keys = [h.sort_key() for h in whs]
    checks.append(Check("enumerated sets are weak Hamiltonians, sorted, distinct",
                        not bad and keys == sorted(set(keys)), bad))

    bad_count, bad_cover, bad_triple = [], [], []
    for i, h in enumerate(whs):
        muts = all_mutations(m, h)
        if len({x.edges for x in muts}) != 2 ** h.num_cycles:
            bad_count.append(i)
        full = (1 << h.num_cycles) - 1
        for sel in range(full + 1):
            mu = mutate(m, h, sel)
            if len(h.edges | mu.edges) != E:
                bad_cover.append((i, sel))
            if h.edges ^ mu.edges != mutate(m, h, full ^ sel).edges:
                bad_triple.append((i, sel))
    checks.append(Check("each weak Hamiltonian has 2^N distinct mutations", not bad_count, bad_count))
    checks.append(Check("h and any mutation cover every edge", not bad_cover, bad_cover))
    checks.append(Check("h ^ mutation = complementary mutation", not bad_triple, bad_triple))

    bad = []
    members = [{x.edges for x in all_mutations(m, h)} for h in whs]
    for i, h1 in enumerate(whs):
        for j, h2 in enumerate(whs):
            rel = is_mutation_pair(m, h1, h2)
            if rel != (h2.edges in members[i]) or rel != is_mutation_pair(m, h2, h1):
                bad.append((i, j))
    checks.append(Check("mutation relation is symmetric and matches the cover test", not bad, bad))

    g = build_wh_graph(m)
    cliques = find_chromatic_cliques(g)
    checks.extend(validate_structure(g, cliques).checks)

    labeled = enumerate_colorings_bruteforce(m, 4)
    canon = enumerate_colorings_bruteforce(m, 4, canonical=True)
    checks.append(Check("weak Hamiltonians exist iff a 4-coloring exists",
                        bool(whs) == bool(labeled), [] if bool(whs) == bool(labeled) else [len(whs), len(labeled)]))
    ok = len(labeled) == 24 * len(cliques) == 24 * len(canon)
    checks.append(Check("labeled colorings = 24 x cliques = 24 x canonical colorings", ok,
                        [] if ok else [len(labeled), len(cliques), len(canon)]))

    bad = []
    for n, c in enumerate(cliques):
        phi = clique_to_coloring(m, g, c)
        if coloring_to_clique(m, g, cliques, phi) != n:
            bad.append(n)
    from_colorings = sorted(coloring_to_clique(m, g, cliques, c) for c in canon)
    if from_colorings != list(range(len(cliques))):
        bad.append("colorings do not hit every clique exactly once")
    checks.append(Check("cliques and canonical colorings are in bijection", not bad, bad))

    bad = []
    for i, j in g.edges:
        h1, h2 = g.vertices[i], g.vertices[j]
        phi = four_coloring_from_pair(m, h1, h2)
        got = {wh_from_coloring(m, phi, p).edges for p in PairPartition}
        if not is_proper(m, phi) or got != {h1.edges, h2.edges, h1.edges ^ h2.edges}:
            bad.append((i, j))
    checks.append(Check("round trip: pair -> coloring -> three weak Hamiltonians", not bad, bad))

    bad = []
    for phi in canon:
        triple = [wh_from_coloring(m, phi, p) for p in PairPartition]
        for k in range(3):
            again = four_coloring_from_pair(m, triple[k], triple[(k + 1) % 3])
            if canonical_coloring(again) != canonical_coloring(phi):
                bad.append((list(phi.colors), k))
    checks.append(Check("round trip: coloring -> pair -> same coloring up to relabeling", not bad, bad))

    bad = []
    for i, h in enumerate(whs):
        two = two_coloring_from_wh(m, h).colors
        if any((two[f] != two[g]) != (e in h.edges) for e, (f, g) in enumerate(dual_adjacency(m))):
            bad.append(i)
    checks.append(Check("2-coloring changes exactly across weak Hamiltonian edges", not bad, bad))
    return checks


def run_checks(m: PlanarMap) -> StructureReport:
    checks = map_checks(m)
    if not is_cubic(m):
        more, m = resolution_checks(m)
        checks += more
    checks += cubic_checks(m)
    return StructureReport(checks)
