"""Planar diagram (PD) representation of link diagrams.

A crossing is a 4-tuple of edge labels listed counterclockwise, starting
from the incoming under-edge.  Slots 0 and 2 carry the under-strand, slots
1 and 3 the over-strand.  Every label occurs exactly twice in a diagram.
Crossing-free unknotted components are counted separately in ``unknots``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DanglingEdge,
    EdgeMultiplicity,
    EmptyInput,
    MalformedToken,
    ZeroTwistEntry,
)

Quad = tuple[int, int, int, int]
Slot = tuple[int, int]  # (crossing index, position 0..3)


class _UnionFind:
    def __init__(self, items: Iterable[int] = ()):
        self.parent = {x: x for x in items}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self) -> int:
        return sum(1 for x in self.parent if self.find(x) == x)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Quad, ...]
    unknots: int = 0

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    def __len__(self):
        return len(self.crossings)

    def __str__(self):
        return serialize_pd(self)

    def slots(self) -> dict[int, list[Slot]]:
        """Map each edge label to the two (crossing, position) slots it fills."""
        occ: dict[int, list[Slot]] = {}
        for i, quad in enumerate(self.crossings):
            for j, e in enumerate(quad):
                occ.setdefault(e, []).append((i, j))
        return occ

    def other_end(self, slot: Slot, occ=None) -> Slot:
        occ = self.slots() if occ is None else occ
        a, b = occ[self.crossings[slot[0]][slot[1]]]
        return b if a == slot else a


@dataclass(frozen=True)
class ArcPartition:
    """Arcs of a diagram.

    ``arc_of_edge`` maps edge labels to arc ids.  Arc ids for edges come
    first, numbered by smallest member edge; each crossing-free unknot
    component adds one further arc at the end.
    """

    arc_of_edge: dict[int, int] = field(hash=False)
    arc_count: int
    edge_arcs: int

    def over_arc(self, quad: Quad) -> int:
        return self.arc_of_edge[quad[1]]

    def under_arcs(self, quad: Quad) -> tuple[int, int]:
        return self.arc_of_edge[quad[0]], self.arc_of_edge[quad[2]]


_TOKEN = re.compile(r"X\s*\[([^\[\]]*)\]")


def parse_pd(text: str) -> Diagram:
    """Parse PD text such as ``X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]``.

    ``PD[X[..], ...]`` wrappers, the KnotInfo ``[[1,5,2,4],...]`` list style
    and a trailing ``U`` count of crossing-free components (``U2``) are
    accepted.  Labels are renumbered to 1..2n in order of first appearance.
    """
    if text is not None:
        text = "\n".join(l for l in text.splitlines() if not l.lstrip().startswith("#"))
    if text is None or not text.strip():
        raise EmptyInput("empty PD input")
    body = text.strip()
    unknots = 0
    m = re.search(r"\bU\s*(\d+)\s*$", body)
    if m:
        unknots = int(m.group(1))
        body = body[: m.start()].strip()
    quads = []
    if "X" in body:
        rest = _TOKEN.sub(" ", body)
        rest = re.sub(r"PD\s*\[|[\],\s]", "", rest)
        if rest:
            raise MalformedToken(f"unexpected text in PD input: {rest[:20]!r}")
        groups = _TOKEN.findall(body)
    else:
        groups = re.findall(r"[\[{(]\s*([-\d\s,]+?)\s*[\]})]", body)
        leftover = re.sub(r"[\[{(]\s*[-\d\s,]+?\s*[\]})]", "", body)
        if re.sub(r"[\[\]{}(),\s]", "", leftover):
            raise MalformedToken(f"unexpected text in PD input: {leftover[:20]!r}")
    for g in groups:
        parts = [p for p in re.split(r"[\s,]+", g.strip()) if p]
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise MalformedToken(f"non-integer label in X[{g}]") from None
        if len(vals) != 4:
            raise MalformedToken(f"crossing X[{g}] needs 4 labels")
        quads.append(tuple(vals))
    if not quads and unknots == 0:
        raise EmptyInput("no crossings found")
    d = Diagram(tuple(quads), unknots)
    _check_multiplicity(d)
    return relabel(d)


def serialize_pd(d: Diagram) -> str:
    text = " ".join("X[%d,%d,%d,%d]" % q for q in d.crossings)
    if d.unknots:
        text = (text + " U%d" % d.unknots).strip()
    return text


def to_json(d: Diagram) -> str:
    return json.dumps({"crossings": [list(q) for q in d.crossings], "unknots": d.unknots})


def from_json(text: str) -> Diagram:
    try:
        obj = json.loads(text)
        quads = tuple(tuple(int(x) for x in q) for q in obj["crossings"])
        unknots = int(obj.get("unknots", 0))
    except (ValueError, KeyError, TypeError) as exc:
        raise MalformedToken(f"bad diagram JSON: {exc}") from None
    if any(len(q) != 4 for q in quads):
        raise MalformedToken("every crossing needs 4 labels")
    if not quads and not unknots:
        raise EmptyInput("diagram JSON has no crossings")
    d = Diagram(quads, unknots)
    _check_multiplicity(d)
    return relabel(d)


def _check_multiplicity(d: Diagram):
    counts: dict[int, int] = {}
    for q in d.crossings:
        for e in q:
            counts[e] = counts.get(e, 0) + 1
    bad = sorted(e for e, c in counts.items() if c != 2)
    if bad:
        raise EdgeMultiplicity(f"edge labels not occurring exactly twice: {bad[:8]}")


def validate(d: Diagram) -> Diagram:
    """Check the Diagram invariants; returns ``d`` unchanged on success."""
    _check_multiplicity(d)
    labels = {e for q in d.crossings for e in q}
    if labels != set(range(1, 2 * len(d.crossings) + 1)):
        raise DanglingEdge("edge labels are not exactly 1..2n")
    if d.unknots < 0:
        raise DanglingEdge("negative unknot count")
    return d


def relabel(d: Diagram) -> Diagram:
    """Renumber edges 1..2n by first appearance."""
    mapping: dict[int, int] = {}
    for q in d.crossings:
        for e in q:
            if e not in mapping:
                mapping[e] = len(mapping) + 1
    return Diagram(tuple(tuple(mapping[e] for e in q) for q in d.crossings), d.unknots)


def compute_arcs(d: Diagram) -> ArcPartition:
    uf = _UnionFind(e for q in d.crossings for e in q)
    for q in d.crossings:
        uf.union(q[1], q[3])
    ids: dict[int, int] = {}
    arc_of_edge = {}
    for e in sorted(uf.parent):
        root = uf.find(e)
        if root not in ids:
            ids[root] = len(ids)
        arc_of_edge[e] = ids[root]
    return ArcPartition(arc_of_edge, len(ids) + d.unknots, len(ids))


def diagram_components(d: Diagram) -> int:
    uf = _UnionFind(range(len(d.crossings)))
    first: dict[int, int] = {}
    for i, q in enumerate(d.crossings):
        for e in q:
            if e in first:
                uf.union(first[e], i)
            else:
                first[e] = i
    return uf.classes() + d.unknots


def crossing_groups(d: Diagram) -> list[list[int]]:
    """Crossing indices of each connected piece of the 4-valent graph."""
    uf = _UnionFind(range(len(d.crossings)))
    first: dict[int, int] = {}
    for i, q in enumerate(d.crossings):
        for e in q:
            if e in first:
                uf.union(first[e], i)
            else:
                first[e] = i
    groups: dict[int, list[int]] = {}
    for i in range(len(d.crossings)):
        groups.setdefault(uf.find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


def strand_classes(d: Diagram) -> _UnionFind:
    uf = _UnionFind(e for q in d.crossings for e in q)
    for q in d.crossings:
        uf.union(q[0], q[2])
        uf.union(q[1], q[3])
    return uf


def link_components(d: Diagram) -> int:
    return strand_classes(d).classes() + d.unknots


def faces(d: Diagram) -> list[list[Slot]]:
    """Faces as cycles of corners ``(c, i)`` (the wedge between slots i and i+1).

    Walking a face, corner (c, i) is followed by the far end of the edge in
    slot i+1 of crossing c.
    """
    occ = d.slots()
    seen = set()
    out = []
    for c in range(len(d.crossings)):
        for i in range(4):
            if (c, i) in seen:
                continue
            face = []
            cur = (c, i)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                cur = d.other_end((cur[0], (cur[1] + 1) % 4), occ)
            out.append(face)
    return out


def is_planar(d: Diagram) -> bool:
    """Euler characteristic check per connected piece: F = V + 2."""
    groups = crossing_groups(d)
    if not groups:
        return True
    group_of = {c: k for k, g in enumerate(groups) for c in g}
    per = [0] * len(groups)
    for f in faces(d):
        per[group_of[f[0][0]]] += 1
    return all(per[k] == len(g) + 2 for k, g in enumerate(groups))


def orient(d: Diagram) -> Diagram:
    """Rotate quads so slot 0 is the incoming under-edge for a consistent
    orientation of every component.

    Each component keeps the direction implied by the first crossing (in
    list order) where it passes under, so already-oriented diagrams come
    back unchanged.
    """
    occ = d.slots()
    quads = [list(q) for q in d.crossings]
    entered: dict[int, int] = {}  # crossing -> under slot entered (0 or 2)
    visited = set()
    for start in (0, 1):
        for c in range(len(quads)):
            if (c, start) in visited:
                continue
            # walk the strand through (c, start); start direction out of slot start+2
            cur_in = (c, start)
            while cur_in not in visited:
                visited.add(cur_in)
                ci, si = cur_in
                out_slot = (si + 2) % 4
                visited.add((ci, out_slot))
                if si % 2 == 0:
                    entered[ci] = si
                cur_in = d.other_end((ci, out_slot), occ)
    rotated = []
    for c, q in enumerate(quads):
        if entered.get(c, 0) == 2:
            q = q[2:] + q[:2]
        rotated.append(tuple(q))
    return Diagram(tuple(rotated), d.unknots)


def crossing_signs(d: Diagram) -> list[int]:
    """Handedness of each crossing under the orientation stored in the quads."""
    occ = d.slots()
    signs = []
    for c, q in enumerate(d.crossings):
        # follow the over strand backwards from slot 1: if slot 1 is an
        # outgoing end, the over-strand enters at slot 3.
        signs.append(1 if _over_enters_at(d, c, occ) == 3 else -1)
    return signs


def _over_enters_at(d: Diagram, c: int, occ) -> int:
    # Walk forward from slot 1 (treating it as the exit); we must come back
    # into crossing c through slot 3 (consistent) -- direction is free for
    # over-only strands, otherwise read off the under-slots met on the way.
    cur = d.other_end((c, 1), occ)
    while True:
        ci, si = cur
        if ci == c and si in (1, 3):
            return 3
        if si % 2 == 0:
            # entering an under slot: orientation agrees iff it is slot 0
            return 3 if si == 0 else 1
        cur = d.other_end((ci, (si + 2) % 4), occ)


def disjoint_union(*ds: Diagram) -> Diagram:
    quads = []
    unknots = 0
    shift = 0
    for d in ds:
        quads.extend(tuple(e + shift for e in q) for q in d.crossings)
        shift += 2 * len(d.crossings)
        unknots += d.unknots
    return Diagram(tuple(quads), unknots)


def pretzel(twists: Sequence[int]) -> Diagram:
    """Standard diagram of the pretzel link P(n1, ..., nk).

    Band i is a vertical twist region with |ni| crossings; neighbouring bands
    are joined at top and bottom and the outer bands close up around the
    outside.
    """
    twists = [int(t) for t in twists]
    if not twists:
        raise ZeroTwistEntry("pretzel needs at least one band")
    if any(t == 0 for t in twists):
        raise ZeroTwistEntry(f"zero entry in pretzel twists {twists}")
    k = len(twists)
    label = iter(range(1, 10**9))
    top = [next(label) for _ in range(k)]  # top[i]: joins band i's NE to band i+1's NW
    bot = [next(label) for _ in range(k)]
    quads = []
    for i, n in enumerate(twists):
        left, right = top[i - 1], top[i]
        for j in range(abs(n)):
            if j == abs(n) - 1:
                dl, dr = bot[i - 1], bot[i]
            else:
                dl, dr = next(label), next(label)
            # ccw from NE: ur, ul, dl, dr; strands ul-dr and ur-dl
            if n > 0:
                quads.append((right, left, dl, dr))
            else:
                quads.append((left, dl, dr, right))
            left, right = dl, dr
    return relabel(orient(Diagram(tuple(quads))))


TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
HOPF = "X[1,4,2,3] X[3,2,4,1]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
KINK = "X[1,1,2,2]"
