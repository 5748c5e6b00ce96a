"""Coloring-carrying Reidemeister moves on PD diagrams.

Moves act on a diagram together with a coloring stored per edge label.
Faces are addressed through *sides*: the side ``(c, i)`` is the edge in
slot ``i + 1`` of crossing ``c``, walked away from ``c`` with the face on
its right (see :func:`zcolor.diagram.faces`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .coloring import Coloring
from .diagram import Diagram, compute_arcs, faces, link_components, orient, validate
from .errors import ColorMismatch, IllegalMove

R1_ADD = "R1_add"
R1_REMOVE = "R1_remove"
R2_PUSH = "R2_push"
R2_POP = "R2_pop"
R3_SLIDE = "R3_slide"
KINDS = (R1_ADD, R1_REMOVE, R2_PUSH, R2_POP, R3_SLIDE)


@dataclass(frozen=True)
class Move:
    """A primitive move.

    Parameters by kind:

    * ``R1_add``: ``side`` (edge and face receiving the loop), ``over_first``
    * ``R1_remove``: ``crossing``
    * ``R2_push``: ``side_x``, ``side_y`` on one face, ``under`` (x passes
      under y when true)
    * ``R2_pop``: ``corner`` of a bigon face
    * ``R3_slide``: ``corner`` of a triangle face; the side leaving that
      corner is the strand that slides across the opposite crossing
    """

    kind: str
    params: tuple = field(default=())

    @classmethod
    def make(cls, kind, **params):
        if kind not in KINDS:
            raise IllegalMove(f"unknown move kind {kind!r}")
        return cls(kind, tuple(sorted(params.items())))

    def get(self, key, default=None) -> Any:
        return dict(self.params).get(key, default)

    def to_dict(self):
        out = {"kind": self.kind}
        for k, v in self.params:
            out[k] = list(v) if isinstance(v, tuple) else v
        return out

    @classmethod
    def from_dict(cls, obj):
        params = {k: tuple(v) if isinstance(v, list) else v for k, v in obj.items() if k != "kind"}
        return cls.make(obj["kind"], **params)


# edge colorings ------------------------------------------------------------


def edge_colors(d: Diagram, g: Coloring) -> dict[int, int]:
    arcs = compute_arcs(d)
    return {e: g[a] for e, a in arcs.arc_of_edge.items()}


def unknot_colors(d: Diagram, g: Coloring) -> list[int]:
    arcs = compute_arcs(d)
    return list(g.colors[arcs.edge_arcs:arcs.edge_arcs + d.unknots])


def arc_coloring(d: Diagram, ecol: dict[int, int], ucol=()) -> Coloring:
    arcs = compute_arcs(d)
    colors = [None] * arcs.arc_count
    for e, a in arcs.arc_of_edge.items():
        c = ecol[e]
        if colors[a] is None:
            colors[a] = c
        elif colors[a] != c:
            raise ColorMismatch(f"edges of arc {a} carry colors {colors[a]} and {c}")
    for k, c in enumerate(ucol):
        colors[arcs.edge_arcs + k] = c
    if any(c is None for c in colors):
        raise ColorMismatch("uncolored arc after move")
    return Coloring(tuple(colors))


# helpers ---------------------------------------------------------------------


class _Work:
    """Mutable copy of a diagram used while building a move."""

    def __init__(self, d: Diagram, g: Coloring):
        self.quads = [list(q) for q in d.crossings]
        self.unknots = d.unknots
        self.col = edge_colors(d, g)
        self.ucol = unknot_colors(d, g)
        self.next_label = 2 * len(d.crossings) + 1

    def new_label(self, color=None):
        e = self.next_label
        self.next_label += 1
        if color is not None:
            self.col[e] = color
        return e

    def occ(self):
        out: dict[int, list] = {}
        for i, q in enumerate(self.quads):
            if q is None:
                continue
            for j, e in enumerate(q):
                out.setdefault(e, []).append((i, j))
        return out

    def other_end(self, slot, occ):
        a, b = occ[self.quads[slot[0]][slot[1]]]
        return b if a == slot else a

    def remove(self, removed: set[int]):
        """Delete crossings, joining the strands that passed through them."""
        occ = self.occ()
        done = set()
        for c, q in enumerate(self.quads):
            if q is None or c in removed:
                continue
            for s in range(4):
                if (c, s) in done:
                    continue
                start_edge = q[s]
                cur = self.other_end((c, s), occ)
                last_edge = start_edge
                while cur[0] in removed:
                    nxt = (cur[0], (cur[1] + 2) % 4)
                    done.add(cur)
                    done.add(nxt)
                    last_edge = self.quads[nxt[0]][nxt[1]]
                    cur = self.other_end(nxt, occ)
                done.add((c, s))
                done.add(cur)
                if self.col[start_edge] != self.col[last_edge]:
                    raise ColorMismatch(
                        f"joining edges colored {self.col[start_edge]} and {self.col[last_edge]}"
                    )
                self.quads[cur[0]][cur[1]] = start_edge
        # closed loops living entirely inside the removed crossings
        for r in removed:
            for s in range(4):
                if (r, s) in done:
                    continue
                color = self.col[self.quads[r][s]]
                cur = (r, s)
                while cur not in done:
                    done.add(cur)
                    nxt = (cur[0], (cur[1] + 2) % 4)
                    done.add(nxt)
                    if self.col[self.quads[nxt[0]][nxt[1]]] != color:
                        raise ColorMismatch("closed loop with two colors")
                    cur = self.other_end(nxt, occ)
                self.unknots += 1
                self.ucol.append(color)
        for r in removed:
            self.quads[r] = None

    def propagate(self, unknown: set[int]):
        """Solve the crossing relations for the labels in ``unknown``."""
        unknown = set(unknown)
        col = self.col
        while unknown:
            progress = False
            for q in self.quads:
                if q is None or not unknown.intersection(q):
                    continue
                u0, o1, u2, o3 = q
                if (o1 in unknown) != (o3 in unknown):
                    known, todo = (o3, o1) if o1 in unknown else (o1, o3)
                    col[todo] = col[known]
                    unknown.discard(todo)
                    progress = True
                if o1 not in unknown:
                    if (u0 in unknown) != (u2 in unknown):
                        known, todo = (u2, u0) if u0 in unknown else (u0, u2)
                        col[todo] = 2 * col[o1] - col[known]
                        unknown.discard(todo)
                        progress = True
                elif u0 not in unknown and u2 not in unknown:
                    total = col[u0] + col[u2]
                    if total % 2:
                        raise ColorMismatch("under colors of odd sum at a crossing")
                    col[o1] = col[o3] = total // 2
                    unknown.discard(o1)
                    unknown.discard(o3)
                    progress = True
            if not progress:
                raise ColorMismatch(f"cannot determine colors of edges {sorted(unknown)}")

    def finish(self) -> tuple[Diagram, Coloring, dict[int, int]]:
        quads = [tuple(q) for q in self.quads if q is not None]
        d = orient(Diagram(tuple(quads), self.unknots))
        mapping: dict[int, int] = {}
        for q in d.crossings:
            for e in q:
                if e not in mapping:
                    mapping[e] = len(mapping) + 1
        d = Diagram(tuple(tuple(mapping[e] for e in q) for q in d.crossings), d.unknots)
        ecol = {mapping[e]: self.col[e] for e in mapping}
        for q in d.crossings:
            if 2 * ecol[q[1]] != ecol[q[0]] + ecol[q[2]] or ecol[q[1]] != ecol[q[3]]:
                raise ColorMismatch(f"relation fails at crossing {q}")
        return d, arc_coloring(d, ecol, self.ucol), mapping


def _face_of(d: Diagram, corner) -> list:
    for f in faces(d):
        if tuple(corner) in f:
            return f
    raise IllegalMove(f"no face with corner {corner}")


def _rot(q, k):
    k %= 4
    return q[k:] + q[:k]


# the moves -------------------------------------------------------------------


def _r1_add(d, g, m):
    c, i = m.get("side")
    if not (0 <= c < len(d.crossings)) or not (0 <= i < 4):
        raise IllegalMove("R1_add side out of range")
    w = _Work(d, g)
    occ = w.occ()
    p = (c, (i + 1) % 4)
    e = w.quads[p[0]][p[1]]
    q = w.other_end(p, occ)
    color = w.col[e]
    e2 = w.new_label(color)
    loop = w.new_label(color)
    w.quads[q[0]][q[1]] = e2
    # ccw around the new crossing: loop start, e2, e, loop end
    if m.get("over_first", False):
        quad = [e2, e, loop, loop]
    else:
        quad = [loop, e2, e, loop]
    w.quads.append(quad)
    return w.finish()


def _r1_remove(d, g, m):
    k = m.get("crossing")
    if k is None or not (0 <= k < len(d.crossings)):
        raise IllegalMove("R1_remove crossing out of range")
    q = d.crossings[k]
    if not any(q[j] == q[(j + 1) % 4] for j in range(4)):
        raise IllegalMove(f"crossing {k} is not a kink")
    w = _Work(d, g)
    w.remove({k})
    return w.finish()


def _r2_push(d, g, m):
    sx, sy = tuple(m.get("side_x")), tuple(m.get("side_y"))
    under = bool(m.get("under", True))
    face = _face_of(d, sx)
    if sy not in face or sx == sy:
        raise IllegalMove("R2_push sides must be distinct sides of one face")
    w = _Work(d, g)
    occ = w.occ()
    px = (sx[0], (sx[1] + 1) % 4)
    py = (sy[0], (sy[1] + 1) % 4)
    x = w.quads[px[0]][px[1]]
    y = w.quads[py[0]][py[1]]
    if x == y:
        raise IllegalMove("R2_push needs two different edges")
    qx = w.other_end(px, occ)
    qy = w.other_end(py, occ)
    cx, cy = w.col[x], w.col[y]
    x2 = w.new_label(cx)
    y2 = w.new_label(cy)
    if under:
        xm, ym = w.new_label(2 * cy - cx), w.new_label(cy)
    else:
        xm, ym = w.new_label(cx), w.new_label(2 * cx - cy)
    w.quads[qx[0]][qx[1]] = x2
    w.quads[qy[0]][qy[1]] = y2
    east = [y2, xm, ym, x]
    west = [ym, xm, y, x2]
    if under:
        east, west = _rot(east, 1), _rot(west, 1)
    w.quads.append(east)
    w.quads.append(west)
    return w.finish()


def _r2_pop(d, g, m):
    corner = tuple(m.get("corner"))
    face = _face_of(d, corner)
    if len(face) != 2:
        raise IllegalMove("R2_pop needs a bigon face")
    (a, _), (b, _) = face
    if a == b:
        raise IllegalMove("degenerate bigon")
    occ = d.slots()
    # the two sides: edge in slot i+1 of each corner
    sides = [(c, (i + 1) % 4) for c, i in face]
    arrive = [d.other_end(s, occ) for s in sides]
    # each side's strand must be over at both ends or under at both ends
    for s, t in zip(sides, arrive):
        if (s[1] % 2) != (t[1] % 2):
            raise IllegalMove("bigon is not a Reidemeister II configuration")
    if sides[0][1] % 2 == sides[1][1] % 2:
        raise IllegalMove("bigon sides are both over or both under")
    ecol = edge_colors(d, g)
    for s, t in zip(sides, arrive):
        if s[1] % 2 == 0:  # under side: middle must be the reflection of the outer pieces
            over = ecol[d.crossings[s[0]][1]]
            outer = ecol[d.crossings[s[0]][(s[1] + 2) % 4]]
            if ecol[d.crossings[s[0]][s[1]]] != 2 * over - outer:
                raise ColorMismatch("bigon middle color is not 2*over - outer")
    w = _Work(d, g)
    w.remove({a, b})
    return w.finish()


# R3 template: triangle corners (Z,0) -> (X,2) -> (Y,1); strand c (X-Y side)
# slides across Z.  Template quads before:
#   Z = [aZY, bZX, a_W, b_S]   X = [b_N, c_NW, bZX, cXY]   Y = [a_E, cXY, aZY, c_SE]
# and after:
#   Z = [a_E, b_N, aYZ, bXZ]   X = [bXZ, cYX, b_S, c_SE]   Y = [aYZ, c_NW, a_W, cYX]


def _r3_slide(d, g, m):
    corner = tuple(m.get("corner"))
    face = _face_of(d, corner)
    if len(face) != 3:
        raise IllegalMove("R3_slide needs a triangle face")
    k = face.index(corner)
    (X, ix), (Y, iy), (Z, iz) = face[k], face[(k + 1) % 3], face[(k + 2) % 3]
    if len({X, Y, Z}) != 3:
        raise IllegalMove("triangle visits a crossing twice")
    quads = d.crossings

    def tmpl(c, i, t):  # template slot -> label
        return lambda s: quads[c][(s - t + i) % 4]

    zt, xt, yt = tmpl(Z, iz, 0), tmpl(X, ix, 2), tmpl(Y, iy, 1)

    def under_at(c, i, t, tslot):  # is the strand in template slot tslot under?
        return ((tslot - t + i) % 4) % 2 == 0

    c_under_x = under_at(X, ix, 2, 1)
    c_under_y = under_at(Y, iy, 1, 1)
    if c_under_x != c_under_y:
        raise IllegalMove("sliding strand is neither top nor bottom of the triangle")
    a_under_z = under_at(Z, iz, 0, 0)
    b_under_x = under_at(X, ix, 2, 0)
    a_under_y = under_at(Y, iy, 1, 0)

    a_W, b_S = zt(2), zt(3)
    b_N, c_NW = xt(0), xt(1)
    a_E, c_SE = yt(0), yt(3)
    aZY, bZX, cXY = zt(0), zt(1), xt(3)

    w = _Work(d, g)
    for e in (aZY, bZX, cXY):
        del w.col[e]
    newz = [a_E, b_N, aZY, bZX]
    newx = [bZX, cXY, b_S, c_SE]
    newy = [aZY, c_NW, a_W, cXY]
    w.quads[Z] = newz if a_under_z else _rot(newz, 1)
    w.quads[X] = newx if b_under_x else _rot(newx, 1)
    w.quads[Y] = newy if a_under_y else _rot(newy, 1)
    w.propagate({aZY, bZX, cXY})
    return w.finish()


_DISPATCH = {
    R1_ADD: _r1_add,
    R1_REMOVE: _r1_remove,
    R2_PUSH: _r2_push,
    R2_POP: _r2_pop,
    R3_SLIDE: _r3_slide,
}


def apply_move(d: Diagram, g: Coloring, m: Move) -> tuple[Diagram, Coloring]:
    """Apply ``m`` and return the new diagram with its induced coloring."""
    d2, g2, _ = apply_move_tracked(d, g, m)
    return d2, g2


def apply_move_tracked(d: Diagram, g: Coloring, m: Move):
    """Like :func:`apply_move`, also returning ``{old label: new label}``
    for every edge label that survives the move."""
    try:
        d2, g2, mapping = _DISPATCH[m.kind](d, g, m)
    except (KeyError, IndexError, TypeError) as exc:
        raise IllegalMove(f"{m.kind}: bad parameters ({exc})") from None
    validate(d2)
    if link_components(d2) != link_components(d):
        raise IllegalMove(f"{m.kind} changed the number of link components")
    old = {e for q in d.crossings for e in q}
    return d2, g2, {e: n for e, n in mapping.items() if e in old}


# enumeration -----------------------------------------------------------------


def legal_moves(d: Diagram, kinds=KINDS, g: Coloring | None = None):
    """All primitive moves that are geometrically available on ``d``."""
    out = []
    fs = faces(d)
    occ = d.slots()
    if R1_ADD in kinds:
        for c in range(len(d.crossings)):
            for i in range(4):
                for over_first in (False, True):
                    out.append(Move.make(R1_ADD, side=(c, i), over_first=over_first))
    if R1_REMOVE in kinds:
        for k, q in enumerate(d.crossings):
            if any(q[j] == q[(j + 1) % 4] for j in range(4)):
                out.append(Move.make(R1_REMOVE, crossing=k))
    for f in fs:
        if R2_POP in kinds and len(f) == 2 and f[0][0] != f[1][0]:
            sides = [(c, (i + 1) % 4) for c, i in f]
            arrive = [d.other_end(s, occ) for s in sides]
            if all(s[1] % 2 == t[1] % 2 for s, t in zip(sides, arrive)) and sides[0][1] % 2 != sides[1][1] % 2:
                out.append(Move.make(R2_POP, corner=f[0]))
        if R3_SLIDE in kinds and len(f) == 3 and len({c for c, _ in f}) == 3:
            for corner in f:
                m = Move.make(R3_SLIDE, corner=corner)
                if _r3_legal(d, f, corner):
                    out.append(m)
        if R2_PUSH in kinds:
            for sx in f:
                for sy in f:
                    if sx == sy:
                        continue
                    ex = d.crossings[sx[0]][(sx[1] + 1) % 4]
                    ey = d.crossings[sy[0]][(sy[1] + 1) % 4]
                    if ex == ey:
                        continue
                    for under in (True, False):
                        out.append(Move.make(R2_PUSH, side_x=sx, side_y=sy, under=under))
    return out


def _r3_legal(d, f, corner):
    k = f.index(corner)
    (_, ix), (_, iy) = f[k], f[(k + 1) % 3]
    return (((1 - 2 + ix) % 4) % 2 == 0) == (((1 - 1 + iy) % 4) % 2 == 0)
