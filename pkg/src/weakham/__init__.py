"""Weak Hamiltonians, four colorings and their moduli graphs on planar cubic maps."""

from .coloring import (FaceColoring, PairPartition, canonical_coloring, enumerate_colorings_bruteforce,
                       four_coloring_from_pair, is_proper, two_coloring_from_wh, wh_from_coloring,
                       wh_triple_from_coloring)
from .factors import (EdgeSubset, WeakHamiltonian, complement, cycle_decomposition,
                      enumerate_weak_hamiltonians, is_weak_hamiltonian, perfect_matchings)
from .generators import generate
from .maps import FaceSet, PlanarMap, build_map, dual_adjacency, faces, is_cubic
from .moduli import (ChromaticClique, ChromaticGraph, WeakHamiltonianGraph, build_chromatic_graph,
                     build_wh_graph, clique_to_coloring, coloring_to_clique, find_chromatic_cliques,
                     graph_iso_small, validate_structure)
from .mutation import all_mutations, cycle_matchings, is_mutation_pair, mutate
from .resolution import FaceCorrespondence, blowup, pull_back_coloring, resolve

__version__ = "0.1.0"
