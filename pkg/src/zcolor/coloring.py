"""Z-colorings of link diagrams.

A Z-coloring assigns an integer to every arc so that at each crossing
twice the over-arc color equals the sum of the two under-arc colors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from . import _kernels
from .diagram import Diagram, ArcPartition, compute_arcs, crossing_groups, diagram_components
from .errors import MissingArcColor, ZeroScale
from .intlinalg import Matrix, integer_kernel_basis, minor_determinant, matvec

NOT_SIMPLE = "not_simple"
ALL_MONOCHROME = "all_monochrome"
NOT_FIVE_COLORS = "not_five_colors"

FIVE_COLOR_CATALOG = (
    (0, 1, 2, 3, 4),
    (0, 1, 2, 3, 5),
    (0, 1, 2, 3, 6),
    (0, 1, 2, 4, 7),
    (0, 2, 3, 4, 5),
    (0, 3, 4, 5, 6),
    (0, 3, 5, 6, 7),
)


@dataclass(frozen=True)
class Coloring:
    """Colors indexed by arc id (see :class:`~zcolor.diagram.ArcPartition`)."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    def __getitem__(self, arc):
        return self.colors[arc]

    def __len__(self):
        return len(self.colors)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.colors)))

    def is_trivial(self) -> bool:
        return len(set(self.colors)) <= 1

    def to_json(self) -> str:
        return json.dumps({"arcs": {str(i + 1): c for i, c in enumerate(self.colors)}})

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        arcs = json.loads(text)["arcs"]
        n = max(int(k) for k in arcs) if arcs else 0
        missing = [i for i in range(1, n + 1) if str(i) not in arcs]
        if missing:
            raise MissingArcColor(f"no color for arcs {missing}")
        return cls(tuple(int(arcs[str(i)]) for i in range(1, n + 1)))


@dataclass(frozen=True)
class ColoringSpace:
    basis: tuple[Coloring, ...]
    trivials: tuple[Coloring, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def coloring_matrix(d: Diagram, arcs: ArcPartition | None = None) -> Matrix:
    arcs = compute_arcs(d) if arcs is None else arcs
    rows = []
    for q in d.crossings:
        row = [0] * arcs.arc_count
        row[arcs.arc_of_edge[q[1]]] += 2
        row[arcs.arc_of_edge[q[0]]] -= 1
        row[arcs.arc_of_edge[q[2]]] -= 1
        rows.append(row)
    return rows


def determinant(d: Diagram) -> int:
    """|first minor| of the coloring matrix; 0 for disconnected diagrams.

    A connected diagram with a component that never passes under has more
    arcs than crossings; its coloring lattice then has rank >= 2 and the
    determinant is 0 as well.
    """
    if diagram_components(d) != 1:
        return 0
    if not d.crossings:
        return 1
    m = coloring_matrix(d)
    if len(m[0]) != len(m):
        return 0
    return minor_determinant(m, 0, 0)


def arc_components(d: Diagram, arcs: ArcPartition | None = None) -> list[int]:
    """Diagram-component index of every arc."""
    arcs = compute_arcs(d) if arcs is None else arcs
    comp = [0] * arcs.arc_count
    groups = crossing_groups(d)
    for k, g in enumerate(groups):
        for c in g:
            for e in d.crossings[c]:
                comp[arcs.arc_of_edge[e]] = k
    for u in range(d.unknots):
        comp[arcs.edge_arcs + u] = len(groups) + u
    return comp


def coloring_space(d: Diagram) -> ColoringSpace:
    arcs = compute_arcs(d)
    m = coloring_matrix(d, arcs)
    basis = integer_kernel_basis(m, arcs.arc_count)
    comp = arc_components(d, arcs)
    trivials = tuple(
        Coloring(tuple(int(c == k) for c in comp)) for k in range(diagram_components(d))
    )
    return ColoringSpace(tuple(Coloring(tuple(v)) for v in basis), trivials)


def _in_trivial_span(g: Coloring, comp: Sequence[int]) -> bool:
    seen: dict[int, int] = {}
    for c, x in zip(comp, g.colors):
        if seen.setdefault(c, x) != x:
            return False
    return True


def find_nontrivial_coloring(d: Diagram) -> Coloring | None:
    space = coloring_space(d)
    comp = arc_components(d)
    for g in space.basis:
        if not _in_trivial_span(g, comp):
            return normalize_min_zero(g)
    return None


def crossing_colors(d: Diagram, g: Coloring, arcs: ArcPartition | None = None):
    """``{a|b|c}`` triples (under, over, under) per crossing."""
    arcs = compute_arcs(d) if arcs is None else arcs
    a = arcs.arc_of_edge
    return [(g[a[q[0]]], g[a[q[1]]], g[a[q[2]]]) for q in d.crossings]


def verify_coloring(d: Diagram, g: Coloring) -> bool:
    arcs = compute_arcs(d)
    if len(g) < arcs.arc_count:
        raise MissingArcColor(f"coloring has {len(g)} colors for {arcs.arc_count} arcs")
    return all(x + z == 2 * y for x, y, z in crossing_colors(d, g, arcs))


def normalize_min_zero(g: Coloring) -> Coloring:
    lo = min(g.colors) if g.colors else 0
    return Coloring(tuple(c - lo for c in g.colors))


def affine(g: Coloring, p: int, q: int) -> Coloring:
    if p == 0:
        raise ZeroScale("affine map with p = 0 collapses the coloring")
    return Coloring(tuple(p * c + q for c in g.colors))


def primitive_normalize(g: Coloring) -> Coloring:
    g = normalize_min_zero(g)
    div = reduce(gcd, g.colors, 0)
    if div <= 1:
        return g
    return Coloring(tuple(c // div for c in g.colors))


def is_simple(d: Diagram, g: Coloring):
    """The common over/under difference ``d`` or NOT_SIMPLE / ALL_MONOCHROME."""
    gap = None
    for x, y, z in crossing_colors(d, g):
        for u in (x, z):
            diff = abs(y - u)
            if diff == 0:
                continue
            if gap is None:
                gap = diff
            elif diff != gap:
                return NOT_SIMPLE
    return ALL_MONOCHROME if gap is None else gap


def split_two_coloring(d: Diagram) -> Coloring | None:
    if diagram_components(d) < 2:
        return None
    comp = arc_components(d)
    return Coloring(tuple(int(c != 0) for c in comp))


@dataclass(frozen=True)
class FiveClass:
    canonical: tuple[int, ...]
    in_catalog: bool
    flipped: bool


def classify_five(g: Coloring):
    """Match a five-color image against the catalog, up to shift, scale and flip.

    Images already in the catalog are reported as they are; otherwise the
    flip ``c -> max - c`` is tried.
    """
    image = g.image
    if len(image) != 5:
        return NOT_FIVE_COLORS
    lo = min(image)
    div = reduce(gcd, [c - lo for c in image], 0)
    plain = tuple(sorted((c - lo) // div for c in image))
    if plain in FIVE_COLOR_CATALOG:
        return FiveClass(plain, True, False)
    other = tuple(sorted(plain[-1] - c for c in plain))
    if other in FIVE_COLOR_CATALOG:
        return FiveClass(other, True, True)
    return FiveClass(plain, False, False)


def bounded_small_image_search(
    d: Diagram, max_colors: int, coeff_bound: int = 3
) -> Coloring | None:
    """First non-trivial combination (lexicographic in the coefficient box)
    whose image has at most ``max_colors`` values.

    Exhaustive only inside ``[-coeff_bound, coeff_bound]^rank``, so ``None``
    refutes small colorings in that box, not in general.
    """
    if max_colors < 2 or coeff_bound < 1:
        raise ValueError("need max_colors >= 2 and coeff_bound >= 1")
    space = coloring_space(d)
    if not space.basis:
        return None
    basis = [list(b.colors) for b in space.basis]
    hit = _kernels.first_small_image(basis, coeff_bound, max_colors)
    if hit is None:
        return None
    vec = [sum(c * b[i] for c, b in zip(hit, basis)) for i in range(len(basis[0]))]
    return normalize_min_zero(Coloring(tuple(vec)))


def combination(space: ColoringSpace, coeffs: Sequence[int]) -> Coloring:
    n = len(space.basis[0]) if space.basis else 0
    vec = [0] * n
    for c, b in zip(coeffs, space.basis):
        if c:
            for i, x in enumerate(b.colors):
                vec[i] += c * x
    return Coloring(tuple(vec))


def sample_colorings(
    d: Diagram, n_colors: int, coeff_bound: int = 2, limit: int = 500
) -> list[Coloring]:
    """Distinct min-zero colorings with exactly ``n_colors`` values found in
    the coefficient box, in enumeration order, at most ``limit`` of them."""
    space = coloring_space(d)
    if not space.basis:
        return []
    basis = [list(b.colors) for b in space.basis]
    out = []
    seen = set()
    for coeffs in _kernels.image_size_hits(basis, coeff_bound, n_colors, 20 * limit):
        g = normalize_min_zero(combination(space, coeffs))
        if g.colors not in seen:
            seen.add(g.colors)
            out.append(g)
            if len(out) >= limit:
                break
    return out


def residual(d: Diagram, g: Coloring) -> list[int]:
    return matvec(coloring_matrix(d), list(g.colors))
