"""Palette graphs of Z-colorings.

Vertices are the colors in use.  Two colors are joined when some crossing
has them on its two under arcs; the edge is labeled with their mean, which
is the over color at that crossing.  Monochrome crossings add no edge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coloring import Coloring, crossing_colors
from .diagram import Diagram, compute_arcs


@dataclass(frozen=True)
class PaletteGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    # crossings whose two under strands lie on a single arc
    shared_under_arcs: int = 0

    def components(self) -> list[tuple[int, ...]]:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b, _ in self.edges:
            parent[find(a)] = find(b)
        groups: dict[int, list[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(tuple(sorted(g)) for g in groups.values())

    def edge_set(self) -> frozenset:
        return frozenset((a, b) for a, b, _ in self.edges)

    def to_dot(self, name: str = "palette") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}" [label="{v}"];')
        for a, b, lab in self.edges:
            lines.append(f'  "{a}" -- "{b}" [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def palette_graph(d: Diagram, g: Coloring) -> PaletteGraph:
    arcs = compute_arcs(d)
    edges = set()
    shared = 0
    for q, (x, _, z) in zip(d.crossings, crossing_colors(d, g, arcs)):
        if arcs.arc_of_edge[q[0]] == arcs.arc_of_edge[q[2]]:
            shared += 1
        if x != z:
            a, b = min(x, z), max(x, z)
            edges.add((a, b, (a + b) // 2))
    return PaletteGraph(g.image, tuple(sorted(edges)), shared)


def enumerate_palette_graphs(image) -> list[frozenset]:
    """Edge sets on ``image`` with both parity classes connected.

    Candidate edges join two colors of equal parity whose mean is also a
    color.  This is the independent oracle for five-color palette graphs,
    which always split into an even and an odd component.
    """
    image = sorted(image)
    present = set(image)
    cand = [
        (a, b)
        for a, b in itertools.combinations(image, 2)
        if (a - b) % 2 == 0 and (a + b) // 2 in present
    ]
    classes = [[c for c in image if c % 2 == p] for p in (0, 1)]
    out = []
    for r in range(len(cand) + 1):
        for es in itertools.combinations(cand, r):
            if all(_connected(cls, es) for cls in classes if cls):
                out.append(frozenset(es))
    return sorted(out, key=lambda s: sorted(s))


def _connected(verts, edges) -> bool:
    verts = set(verts)
    adj = {v: set() for v in verts}
    for a, b in edges:
        if a in verts and b in verts:
            adj[a].add(b)
            adj[b].add(a)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts
