"""Edge subsets over F2, perfect matchings and weak Hamiltonians.

A weak Hamiltonian of a cubic map is a 2-factor whose cycles all have even
length.  In a cubic map the complement of a 2-factor is a perfect matching,
so weak Hamiltonians are enumerated as complements of perfect matchings.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .errors import NotCubic, NotTwoRegular, NotWeakHamiltonian
from .maps import PlanarMap, is_cubic


@dataclass(frozen=True)
class EdgeSubset:
    """Indicator vector in F2^E, stored as an int (bit ``e`` = edge ``e``)."""

    bits: int
    size: int

    @classmethod
    def from_edges(cls, edges: Iterable[int], size: int) -> EdgeSubset:
        bits = 0
        for e in edges:
            if not 0 <= e < size:
                raise ValueError(f"edge {e} out of range for {size} edges")
            bits |= 1 << e
        return cls(bits, size)

    @classmethod
    def empty(cls, size: int) -> EdgeSubset:
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> EdgeSubset:
        return cls((1 << size) - 1, size)

    def _check(self, other: EdgeSubset):
        if self.size != other.size:
            raise ValueError(f"edge subsets of different lengths ({self.size} vs {other.size})")

    def __xor__(self, other: EdgeSubset) -> EdgeSubset:
        self._check(other)
        return EdgeSubset(self.bits ^ other.bits, self.size)

    __add__ = __xor__

    def __or__(self, other: EdgeSubset) -> EdgeSubset:
        self._check(other)
        return EdgeSubset(self.bits | other.bits, self.size)

    def __and__(self, other: EdgeSubset) -> EdgeSubset:
        self._check(other)
        return EdgeSubset(self.bits & other.bits, self.size)

    def __invert__(self) -> EdgeSubset:
        return EdgeSubset(self.bits ^ ((1 << self.size) - 1), self.size)

    def __contains__(self, e: int) -> bool:
        return bool(self.bits >> e & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self):
        return iter(self.edges())

    def __bool__(self):
        return self.bits != 0

    def edges(self) -> list[int]:
        return [e for e in range(self.size) if self.bits >> e & 1]

    def vector(self) -> tuple[int, ...]:
        return tuple(self.bits >> e & 1 for e in range(self.size))

    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic order on the indicator vector ``(b_0, b_1, ...)``."""
        return self.vector()

    def __repr__(self):
        return f"EdgeSubset({self.edges()}, size={self.size})"


def complement(m: PlanarMap, s: EdgeSubset) -> EdgeSubset:
    if s.size != m.num_edges:
        raise ValueError(f"subset has length {s.size}, map has {m.num_edges} edges")
    return ~s


def _require_cubic(m: PlanarMap):
    if not is_cubic(m):
        bad = next(v for v, r in enumerate(m.rotations) if len(r) != 3)
        raise NotCubic(f"vertex {bad} has degree {m.degree(bad)}")


def _incident(m: PlanarMap) -> list[list[tuple[int, int]]]:
    # per vertex: (edge, other endpoint)
    return [[(d >> 1, m.vertex_of[d ^ 1]) for d in rot] for rot in m.rotations]


def _matchings_below(incident, covered: int, chosen: int, out: list):
    n = len(incident)
    v = 0
    while v < n and covered >> v & 1:
        v += 1
    if v == n:
        out.append(chosen)
        return
    for e, w in incident[v]:
        if covered >> w & 1:
            continue
        _matchings_below(incident, covered | 1 << v | 1 << w, chosen | 1 << e, out)


def _matchings_task(args):
    incident, covered, chosen = args
    out = []
    _matchings_below(incident, covered, chosen, out)
    return out


def perfect_matchings(m: PlanarMap, jobs: int = 1) -> list[EdgeSubset]:
    """All perfect matchings of a cubic map, sorted lexicographically.

    Branches on the lowest uncovered vertex over its incident edges.  With
    ``jobs > 1`` the first branching level runs in worker processes; the
    result does not depend on ``jobs``.
    """
    _require_cubic(m)
    incident = _incident(m)
    found: list[int] = []
    if jobs > 1:
        seeds = [(incident, 1 | 1 << w, 1 << e) for e, w in incident[0]]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_matchings_task, seeds):
                found.extend(part)
    else:
        _matchings_below(incident, 0, 0, found)
    E = m.num_edges
    subsets = {EdgeSubset(b, E) for b in found}
    return sorted(subsets, key=EdgeSubset.sort_key)


def _chosen_darts(m: PlanarMap, s: EdgeSubset) -> list[list[int]]:
    return [[d for d in rot if (d >> 1) in s] for rot in m.rotations]


def cycle_decomposition(m: PlanarMap, s: EdgeSubset) -> list[tuple[int, ...]]:
    """Split a 2-regular edge subset into cycles of edge ids.

    Each cycle starts at its lowest edge ``e`` and is walked from the
    endpoint of dart ``2e`` towards that of ``2e+1``; cycles are sorted by
    their first edge.
    """
    chosen = _chosen_darts(m, s)
    for v, ds in enumerate(chosen):
        if len(ds) not in (0, 2):
            raise NotTwoRegular(f"vertex {v} meets {len(ds)} chosen edges")
    seen = 0
    cycles = []
    for e in s.edges():
        if seen >> e & 1:
            continue
        cycle = [e]
        seen |= 1 << e
        d = 2 * e + 1  # arrive at the far end of e
        while True:
            v = m.vertex_of[d]
            a, b = chosen[v]
            nxt = b if a == d else a
            f = nxt >> 1
            if f == e:
                break
            cycle.append(f)
            seen |= 1 << f
            d = nxt ^ 1
        cycles.append(tuple(cycle))
    return cycles


def is_two_factor(m: PlanarMap, s: EdgeSubset) -> bool:
    return all(len(ds) == 2 for ds in _chosen_darts(m, s))


def is_weak_hamiltonian(m: PlanarMap, s: EdgeSubset) -> bool:
    if s.size != m.num_edges or not is_two_factor(m, s):
        return False
    return all(len(c) % 2 == 0 for c in cycle_decomposition(m, s))


@dataclass(frozen=True)
class WeakHamiltonian:
    edges: EdgeSubset
    cycles: tuple[tuple[int, ...], ...]

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    @classmethod
    def from_subset(cls, m: PlanarMap, s: EdgeSubset) -> WeakHamiltonian:
        if s.size != m.num_edges:
            raise NotWeakHamiltonian(f"subset has length {s.size}, map has {m.num_edges} edges")
        if not is_two_factor(m, s):
            raise NotWeakHamiltonian("subset is not a 2-factor")
        cycles = cycle_decomposition(m, s)
        odd = [c for c in cycles if len(c) % 2]
        if odd:
            raise NotWeakHamiltonian(f"odd cycle of length {len(odd[0])}: {list(odd[0])}")
        return cls(s, tuple(cycles))

    def sort_key(self):
        return self.edges.sort_key()


def enumerate_weak_hamiltonians(m: PlanarMap, jobs: int = 1) -> list[WeakHamiltonian]:
    """Complements of perfect matchings whose cycles are all even, sorted.

    A map with an odd number of vertices has none, whatever its degrees;
    otherwise the map must be cubic.
    """
    if m.num_vertices % 2:
        return []
    _require_cubic(m)
    result = []
    for pm in perfect_matchings(m, jobs=jobs):
        s = ~pm
        cycles = cycle_decomposition(m, s)
        if all(len(c) % 2 == 0 for c in cycles):
            result.append(WeakHamiltonian(s, tuple(cycles)))
    result.sort(key=WeakHamiltonian.sort_key)
    return result
