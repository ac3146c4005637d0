"""Mutations of weak Hamiltonians.

A mutation keeps the complementary perfect matching and replaces every
cycle by one of its two alternating perfect matchings.  A selection is an
int whose bit ``i`` picks the matching for cycle ``i`` (cycles in the
canonical order of :class:`WeakHamiltonian`): bit 0 picks the matching that
contains the cycle's lowest edge, bit 1 the other one.
"""

from __future__ import annotations

from .errors import NotWeakHamiltonian, OddCycle, SelectionLengthMismatch
from .factors import EdgeSubset, WeakHamiltonian, cycle_decomposition, is_weak_hamiltonian
from .maps import PlanarMap


def cycle_matchings(cycle, size: int) -> tuple[EdgeSubset, EdgeSubset]:
    """The two alternating matchings of an even cycle given in walking order."""
    if len(cycle) % 2:
        raise OddCycle(f"cycle of length {len(cycle)} has no perfect matching")
    a = EdgeSubset.from_edges(cycle[0::2], size)
    b = EdgeSubset.from_edges(cycle[1::2], size)
    if min(cycle) in b:
        a, b = b, a
    return a, b


def mutate(m: PlanarMap, h: WeakHamiltonian, selection: int) -> WeakHamiltonian:
    n = h.num_cycles
    if not 0 <= selection < 1 << n:
        raise SelectionLengthMismatch(f"selection {selection:#b} does not fit {n} cycle(s)")
    size = m.num_edges
    out = ~h.edges
    for i, cycle in enumerate(h.cycles):
        out = out | cycle_matchings(cycle, size)[selection >> i & 1]
    if not is_weak_hamiltonian(m, out):
        raise NotWeakHamiltonian(f"mutation {selection:#b} produced a non weak Hamiltonian")
    return WeakHamiltonian(out, tuple(cycle_decomposition(m, out)))


def all_mutations(m: PlanarMap, h: WeakHamiltonian) -> list[WeakHamiltonian]:
    out = [mutate(m, h, sel) for sel in range(1 << h.num_cycles)]
    out.sort(key=WeakHamiltonian.sort_key)
    return out


def is_mutation_pair(m: PlanarMap, h1: WeakHamiltonian, h2: WeakHamiltonian) -> bool:
    """True iff ``h2`` is a mutation of ``h1`` (a symmetric relation).

    For weak Hamiltonians of a cubic map this holds exactly when the two
    edge sets together cover every edge.
    """
    return (h1.edges | h2.edges) == EdgeSubset.full(m.num_edges)
