import pytest
from hypothesis import given, strategies as st

from weakham import generators
from weakham.errors import NotCubic, NotTwoRegular
from weakham.factors import (EdgeSubset, complement, cycle_decomposition, enumerate_weak_hamiltonians,
                             is_weak_hamiltonian, perfect_matchings)

from oracles import all_subsets_with_degree, weak_hamiltonians_bruteforce


def bits(subsets):
    return sorted(s.bits for s in subsets)


@pytest.mark.parametrize("name, n, expected", [
    ("tetrahedron", None, 3),
    ("prism", 3, 4),
    ("prism", 4, 9),
])
def test_perfect_matching_counts(name, n, expected):
    m = generators.generate(name, n)
    pms = perfect_matchings(m)
    assert len(pms) == expected
    assert bits(pms) == sorted(all_subsets_with_degree(m, 1))


def test_prism3_matchings_shape(prism3):
    # rungs are edges 6, 7, 8
    rungs = EdgeSubset.from_edges([6, 7, 8], 9)
    pms = perfect_matchings(prism3)
    assert rungs in pms
    assert sum(1 for p in pms if len(p & rungs) == 1) == 3


def test_matchings_sorted_lexicographically(prism4):
    pms = perfect_matchings(prism4)
    assert [p.vector() for p in pms] == sorted(p.vector() for p in pms)


def test_matchings_parallel_agrees(prism5):
    assert perfect_matchings(prism5, jobs=3) == perfect_matchings(prism5)


def test_matchings_need_cubic():
    with pytest.raises(NotCubic):
        perfect_matchings(generators.octahedron())


def test_edge_subset_algebra():
    a = EdgeSubset.from_edges([0, 2], 4)
    b = EdgeSubset.from_edges([2, 3], 4)
    assert (a ^ b).edges() == [0, 3]
    assert (a + b) == (a ^ b)
    assert (a | b).edges() == [0, 2, 3]
    assert (~a).edges() == [1, 3]
    assert len(a) == 2 and 2 in a and 1 not in a
    with pytest.raises(ValueError):
        a ^ EdgeSubset.from_edges([0], 5)


@given(st.integers(min_value=0, max_value=(1 << 12) - 1))
def test_complement_is_an_involution(b):
    m = generators.prism(4)
    s = EdgeSubset(b, 12)
    assert complement(m, complement(m, s)) == s
    assert (s ^ complement(m, s)) == EdgeSubset.full(12)


def test_k4_complements_of_hamilton_cycles(k4):
    whs = enumerate_weak_hamiltonians(k4)
    matchings = set(all_subsets_with_degree(k4, 1))
    assert {complement(k4, h.edges).bits for h in whs} == matchings


def test_cycle_decomposition_prism4_squares(prism4):
    squares = EdgeSubset.from_edges(range(8), 12)
    cycles = cycle_decomposition(prism4, squares)
    assert cycles == [(0, 1, 2, 3), (4, 5, 6, 7)]


def test_cycle_decomposition_prism3_triangles(prism3):
    cycles = cycle_decomposition(prism3, EdgeSubset.from_edges(range(6), 9))
    assert [len(c) for c in cycles] == [3, 3]


def test_cycle_decomposition_hamilton(prism4):
    for h in enumerate_weak_hamiltonians(prism4):
        if h.num_cycles == 1:
            assert h.cycle_lengths == (8,)
            assert h.cycles[0][0] == min(h.edges.edges())


def test_cycle_decomposition_rejects_non_two_regular(k4):
    with pytest.raises(NotTwoRegular):
        cycle_decomposition(k4, EdgeSubset.from_edges([0, 1, 3], 6))


def test_is_weak_hamiltonian_examples(prism3, prism4, k4):
    assert is_weak_hamiltonian(prism4, EdgeSubset.from_edges(range(8), 12))
    assert not is_weak_hamiltonian(prism3, EdgeSubset.from_edges(range(6), 9))
    assert not is_weak_hamiltonian(k4, EdgeSubset.empty(6))


@pytest.mark.parametrize("name, n, expected", [
    ("tetrahedron", None, 3),
    ("prism", 3, 3),
    ("prism", 4, 9),
    ("prism", 5, 10),
])
def test_weak_hamiltonian_counts(name, n, expected):
    m = generators.generate(name, n)
    whs = enumerate_weak_hamiltonians(m)
    assert len(whs) == expected
    assert sorted(h.edges.bits for h in whs) == weak_hamiltonians_bruteforce(m)


def test_prism4_weak_hamiltonian_shapes(prism4):
    lengths = sorted(h.cycle_lengths for h in enumerate_weak_hamiltonians(prism4))
    assert lengths == [(4, 4)] * 3 + [(8,)] * 6


def test_prism5_excludes_two_pentagons(prism5):
    pentagons = EdgeSubset.from_edges(range(10), 15)
    whs = enumerate_weak_hamiltonians(prism5)
    assert pentagons not in {h.edges for h in whs}
    assert complement(prism5, pentagons) in perfect_matchings(prism5)


def test_odd_vertex_count_gives_nothing():
    assert enumerate_weak_hamiltonians(generators.k23()) == []
    assert enumerate_weak_hamiltonians(generators.wheel(4)) == []


def test_bipartite_cube_every_two_factor_is_weak(prism4):
    two_factors = all_subsets_with_degree(prism4, 2)
    assert sorted(h.edges.bits for h in enumerate_weak_hamiltonians(prism4)) == sorted(two_factors)


def test_enumeration_matches_bruteforce_on_corpus(corpus):
    for m in corpus:
        if m.num_edges > 12:
            continue
        assert sorted(h.edges.bits for h in enumerate_weak_hamiltonians(m)) == weak_hamiltonians_bruteforce(m)
        assert sorted(p.bits for p in perfect_matchings(m)) == sorted(all_subsets_with_degree(m, 1))


def test_enumeration_invariants_on_corpus(corpus):
    for m in corpus:
        whs = enumerate_weak_hamiltonians(m)
        keys = [h.sort_key() for h in whs]
        assert keys == sorted(set(keys))
        for h in whs:
            assert is_weak_hamiltonian(m, h.edges)
            assert all(n % 2 == 0 for n in h.cycle_lengths)
            assert sum(h.cycle_lengths) == m.num_vertices
