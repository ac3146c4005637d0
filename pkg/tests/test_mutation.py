import pytest
from hypothesis import given, settings, strategies as st

from weakham import generators
from weakham.errors import OddCycle, SelectionLengthMismatch
from weakham.factors import EdgeSubset, WeakHamiltonian, enumerate_weak_hamiltonians
from weakham.mutation import all_mutations, cycle_matchings, is_mutation_pair, mutate

from conftest import load_corpus

CORPUS = load_corpus()
WITH_WH = [m for m in CORPUS if m.num_vertices <= 12]


def test_cycle_matchings_four_cycle():
    a, b = cycle_matchings((0, 1, 2, 3), 4)
    assert a.edges() == [0, 2] and b.edges() == [1, 3]


def test_cycle_matchings_six_cycle():
    a, b = cycle_matchings((5, 0, 3, 1, 4, 2), 6)
    assert 0 in a
    assert (a | b) == EdgeSubset.full(6) and not (a & b)
    assert len(a) == len(b) == 3


def test_cycle_matchings_odd():
    with pytest.raises(OddCycle):
        cycle_matchings((0, 1, 2), 3)


def test_prism4_double_square_mutations(prism4):
    h = WeakHamiltonian.from_subset(prism4, EdgeSubset.from_edges(range(8), 12))
    rungs = EdgeSubset.from_edges(range(8, 12), 12)
    muts = all_mutations(prism4, h)
    assert len(muts) == 4
    for mu in muts:
        assert (mu.edges & rungs) == rungs
    # aligned matchings close up into two side squares, misaligned into a Hamilton cycle
    assert sorted(mu.cycle_lengths for mu in muts) == [(4, 4), (4, 4), (8,), (8,)]


def test_k4_mutations_are_the_other_cycles(k4):
    whs = enumerate_weak_hamiltonians(k4)
    for h in whs:
        others = {x.edges for x in whs} - {h.edges}
        assert {mutate(k4, h, s).edges for s in (0, 1)} == others


def test_single_cycle_mutations_complete_clique(prism5):
    for h in enumerate_weak_hamiltonians(prism5):
        if h.num_cycles == 1:
            a, b = mutate(prism5, h, 0), mutate(prism5, h, 1)
            assert (h.edges ^ a.edges) == b.edges
            assert len(all_mutations(prism5, h)) == 2


def test_selection_out_of_range(prism4):
    h = enumerate_weak_hamiltonians(prism4)[0]
    with pytest.raises(SelectionLengthMismatch):
        mutate(prism4, h, 1 << h.num_cycles)
    with pytest.raises(SelectionLengthMismatch):
        mutate(prism4, h, -1)


def test_mutation_pair_symmetric_on_prism4(prism4):
    whs = enumerate_weak_hamiltonians(prism4)
    for h1 in whs:
        for h2 in whs:
            assert is_mutation_pair(prism4, h1, h2) == is_mutation_pair(prism4, h2, h1)
            assert is_mutation_pair(prism4, h1, h2) == (h2.edges in {x.edges for x in all_mutations(prism4, h1)})


def test_non_covering_pair_is_not_mutation(prism4):
    whs = enumerate_weak_hamiltonians(prism4)
    h1 = whs[0]
    for h2 in whs:
        if len(h1.edges | h2.edges) < 12:
            assert not is_mutation_pair(prism4, h1, h2)
    assert not is_mutation_pair(prism4, h1, h1)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_mutation_laws(data):
    m = data.draw(st.sampled_from(WITH_WH))
    whs = enumerate_weak_hamiltonians(m)
    h = data.draw(st.sampled_from(whs))
    full = (1 << h.num_cycles) - 1
    sel = data.draw(st.integers(0, full))
    mu = mutate(m, h, sel)
    assert (h.edges | mu.edges) == EdgeSubset.full(m.num_edges)
    assert mu.edges != h.edges
    assert is_mutation_pair(m, h, mu) and is_mutation_pair(m, mu, h)
    assert (h.edges ^ mu.edges) == mutate(m, h, full ^ sel).edges
    assert not (h.edges ^ mu.edges ^ mutate(m, h, full ^ sel).edges)


def test_mutation_count_and_equivalence_exhaustive():
    for m in WITH_WH:
        whs = enumerate_weak_hamiltonians(m)
        for h1 in whs:
            muts = {x.edges for x in all_mutations(m, h1)}
            assert len(muts) == 2 ** h1.num_cycles
            for h2 in whs:
                assert (h2.edges in muts) == is_mutation_pair(m, h1, h2)
