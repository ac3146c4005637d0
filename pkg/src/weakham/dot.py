"""Graphviz DOT renderings of maps, weak Hamiltonians and moduli graphs."""

from __future__ import annotations

from typing import Sequence

from .coloring import FaceColoring
from .factors import WeakHamiltonian
from .maps import PlanarMap
from .moduli import ChromaticClique, ChromaticGraph, WeakHamiltonianGraph

_FACE_PALETTE = {1: "#e41a1c", 2: "#377eb8", 3: "#4daf4a", 4: "#ffd92f"}


def map_dot(m: PlanarMap, h: WeakHamiltonian | None = None,
            coloring: FaceColoring | None = None, name: str = "map") -> str:
    """The underlying graph of ``m``; edges of ``h`` bold, the rest thin.

    A face coloring, when given, is listed as face-label nodes joined by
    invisible edges to the vertices of each face.
    """
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(m.num_vertices):
        lines.append(f"  v{v};")
    for e in range(m.num_edges):
        a, b = m.endpoints(e)
        style = ""
        if h is not None:
            style = ", style=bold, penwidth=3" if e in h.edges else ", style=solid, penwidth=1"
        lines.append(f'  v{a} -- v{b} [label="e{e}"{style}];')
    if coloring is not None:
        for f, face in enumerate(m.face_set.faces):
            c = coloring.colors[f]
            fill = _FACE_PALETTE.get(c, "white")
            lines.append(f'  f{f} [shape=box, style=filled, fillcolor="{fill}", label="F{f}:{c}"];')
            for v in sorted({m.vertex_of[d] for d in face}):
                lines.append(f"  f{f} -- v{v} [style=invis];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def wh_graph_dot(g: WeakHamiltonianGraph, cliques: Sequence[ChromaticClique] = ()) -> str:
    """Weak Hamiltonian graph with each chromatic clique as a grey cluster.

    Graphviz draws a node inside the first cluster that names it, so a
    weak Hamiltonian shared by several cliques shows up in its first one;
    clique edges are drawn grey either way.
    """
    lines = ["graph weak_hamiltonians {", "  node [shape=ellipse];"]
    for i, h in enumerate(g.vertices):
        lines.append(f'  h{i} [label="h{i} N={h.num_cycles}"];')
    in_clique = set()
    for n, c in enumerate(cliques):
        lines.append(f"  subgraph cluster_c{n} {{")
        lines.append('    style=filled; fillcolor=grey; color=grey;')
        lines.append(f'    label="c{n}";')
        lines.append("    " + " ".join(f"h{i};" for i in c.members))
        lines.append("  }")
        a, b, k = c.members
        in_clique.update({(a, b), (a, k), (b, k)})
    for i, j in g.edges:
        color = ' [color=grey40]' if (i, j) in in_clique else ""
        lines.append(f"  h{i} -- h{j}{color};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def chromatic_dot(x: ChromaticGraph) -> str:
    lines = ["graph chromatic {", "  node [shape=circle];"]
    for n in range(x.num_vertices):
        lines.append(f"  c{n};")
    for (a, b), w in zip(x.edges, x.shared_wh):
        lines.append(f'  c{a} -- c{b} [label="h{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
