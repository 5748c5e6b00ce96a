"""Color-reducing rewrites with replayable traces.

Every rewrite here is a composite of the primitive moves in
:mod:`zcolor.moves`.  A :class:`MoveTrace` keeps a snapshot after each
step so that :func:`verify_trace` can replay the whole reduction
independently of the code that produced it.

The workhorse is the *wrap*: a strand colored ``L`` is grown into a
tongue that swallows an arc colored ``M`` together with its two end
crossings.  Inside the tongue every color ``x`` becomes ``2L - x``, so with
``L = M - 2d`` the swallowed arc drops to ``M - 4d`` while its neighbours
stay one step of ``d`` apart.  The tongue is seeded either by a kink on
one of the outgoing under-strands or by an R2 finger from a strand that
shares a face with the arc.
"""

from __future__ import annotations

import json
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .coloring import (
    ALL_MONOCHROME,
    NOT_FIVE_COLORS,
    NOT_SIMPLE,
    Coloring,
    classify_five,
    crossing_colors,
    determinant,
    find_nontrivial_coloring,
    is_simple,
    primitive_normalize,
    sample_colorings,
    split_two_coloring,
    verify_coloring,
)
from .diagram import (
    Diagram,
    compute_arcs,
    diagram_components,
    faces,
    from_json as diagram_from_json,
    link_components,
    to_json as diagram_to_json,
    validate,
)
from .errors import (
    ColorMismatch,
    Diverged,
    IllegalMove,
    InvariantViolation,
    MaxTooSmall,
    NotColorable,
    NotFiveColors,
    NotInCatalog,
    NotSimple,
    ReductionStuck,
    SplitDiagram,
    ZColorError,
)
from .moves import (
    R1_ADD,
    R1_REMOVE,
    R2_POP,
    R2_PUSH,
    R3_SLIDE,
    Move,
    _r3_legal,
    apply_move,
    apply_move_tracked,
)

MOVE_BUDGET = 10_000


# traces ----------------------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    """One snapshot.  ``move`` is ``None`` for a recoloring step, in which
    case ``recolor = (p, q)`` and the new coloring is ``p * old + q``."""

    move: Move | None
    diagram: Diagram
    coloring: Coloring
    recolor: tuple[Fraction, Fraction] | None = None

    def to_dict(self):
        out = {
            "diagram": json.loads(diagram_to_json(self.diagram)),
            "coloring": list(self.coloring.colors),
        }
        if self.move is not None:
            out["move"] = self.move.to_dict()
        else:
            p, q = self.recolor
            out["recolor"] = [str(p), str(q)]
        return out

    @classmethod
    def from_dict(cls, obj):
        d = diagram_from_json(json.dumps(obj["diagram"]))
        g = Coloring(tuple(obj["coloring"]))
        if "move" in obj:
            return cls(Move.from_dict(obj["move"]), d, g)
        p, q = obj["recolor"]
        return cls(None, d, g, (Fraction(p), Fraction(q)))


@dataclass
class MoveTrace:
    initial_diagram: Diagram
    initial_coloring: Coloring
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def final_diagram(self) -> Diagram:
        return self.steps[-1].diagram if self.steps else self.initial_diagram

    @property
    def final_coloring(self) -> Coloring:
        return self.steps[-1].coloring if self.steps else self.initial_coloring

    @property
    def moves_applied(self) -> int:
        return sum(1 for s in self.steps if s.move is not None)

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> str:
        return json.dumps(
            {
                "initial": {
                    "diagram": json.loads(diagram_to_json(self.initial_diagram)),
                    "coloring": list(self.initial_coloring.colors),
                },
                "steps": [s.to_dict() for s in self.steps],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "MoveTrace":
        obj = json.loads(text)
        init = obj["initial"]
        return cls(
            diagram_from_json(json.dumps(init["diagram"])),
            Coloring(tuple(init["coloring"])),
            [TraceStep.from_dict(s) for s in obj["steps"]],
        )


@dataclass(frozen=True)
class TraceCheck:
    """Result of :func:`verify_trace`; truthy when the trace is sound.

    ``failed_at`` indexes the snapshots with 0 for the initial state and
    ``k`` for ``steps[k - 1]``.
    """

    ok: bool
    failed_at: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_trace(t: MoveTrace) -> TraceCheck:
    """Replay ``t`` and check every snapshot."""

    def state_ok(d, g):
        try:
            validate(d)
        except ZColorError as exc:
            return f"invalid diagram: {exc}"
        if len(g) != compute_arcs(d).arc_count or not verify_coloring(d, g):
            return "coloring relation fails"
        return ""

    bad = state_ok(t.initial_diagram, t.initial_coloring)
    if bad:
        return TraceCheck(False, 0, bad)
    det0 = determinant(t.initial_diagram)
    comp0 = link_components(t.initial_diagram)
    d, g = t.initial_diagram, t.initial_coloring
    for k, step in enumerate(t.steps, start=1):
        bad = state_ok(step.diagram, step.coloring)
        if not bad:
            if step.move is not None:
                try:
                    d2, g2 = apply_move(d, g, step.move)
                except ZColorError as exc:
                    bad = f"replay failed: {exc}"
                else:
                    if d2 != step.diagram or g2 != step.coloring:
                        bad = "snapshot differs from replay"
            else:
                p, q = step.recolor
                want = tuple(p * c + q for c in g.colors)
                if p == 0 or step.diagram != d or want != step.coloring.colors:
                    bad = "recoloring is not the stated affine map"
        if not bad and determinant(step.diagram) != det0:
            bad = "determinant changed"
        if not bad and link_components(step.diagram) != comp0:
            bad = "number of link components changed"
        if bad:
            return TraceCheck(False, k, bad)
        d, g = step.diagram, step.coloring
    return TraceCheck(True)


class _Run:
    """Current state plus the trace that produced it."""

    def __init__(self, d: Diagram, g: Coloring, trace: MoveTrace | None = None):
        self.d, self.g = d, g
        self.trace = trace if trace is not None else MoveTrace(d, g)
        self.maps: list[dict[int, int] | None] = [None] * len(self.trace.steps)

    def move(self, m: Move) -> dict[int, int]:
        if self.trace.moves_applied >= MOVE_BUDGET:
            raise Diverged(f"move budget of {MOVE_BUDGET} exhausted")
        d2, g2, mapping = apply_move_tracked(self.d, self.g, m)
        self.trace.steps.append(TraceStep(m, d2, g2))
        self.maps.append(mapping)
        self.d, self.g = d2, g2
        return mapping

    def recolor(self, p, q):
        p, q = Fraction(p), Fraction(q)
        cols = [p * c + q for c in self.g.colors]
        if p == 0 or any(c.denominator != 1 for c in cols):
            raise InvariantViolation(f"recoloring {p}*c + {q} is not integral")
        self.g = Coloring(tuple(int(c) for c in cols))
        self.trace.steps.append(TraceStep(None, self.d, self.g, (p, q)))
        self.maps.append(None)

    def checkpoint(self):
        return self.d, self.g, len(self.trace.steps)

    def rollback(self, cp):
        self.d, self.g, n = cp
        del self.trace.steps[n:]
        del self.maps[n:]


# reports ---------------------------------------------------------------------


@dataclass
class ReductionReport:
    initial_image: tuple[int, ...]
    final_image: tuple[int, ...]
    moves_applied: int
    lower_bound: int
    achieved: int
    trace: MoveTrace
    trivial: bool = False
    case: tuple[int, ...] | None = None
    note: str = ""

    @property
    def optimal(self) -> bool:
        return self.achieved == self.lower_bound

    def to_dict(self):
        return {
            "initial_image": list(self.initial_image),
            "final_image": list(self.final_image),
            "moves_applied": self.moves_applied,
            "lower_bound": self.lower_bound,
            "achieved": self.achieved,
            "optimal": self.optimal,
            "trivial": self.trivial,
            "case": list(self.case) if self.case else None,
            "note": self.note,
        }


def _report(run: _Run, initial: Coloring, lower: int, case=None, note="") -> ReductionReport:
    image = run.g.image
    if lower >= 4 and 1 < len(image) < 4:
        # fewer than four colors on a connected diagram only happens for split links
        lower = 2
        note = (note + "; " if note else "") + f"reached {len(image)} colors, so the link is split"
    if len(image) > 1 and len(image) < lower:
        raise InvariantViolation(f"{len(image)} colors is below the lower bound {lower}")
    return ReductionReport(
        initial.image, image, run.trace.moves_applied, lower, len(image), run.trace,
        trivial=len(image) <= 1, case=case, note=note,
    )


# geometry helpers ------------------------------------------------------------


def _ends(d: Diagram, label: int) -> list[tuple[int, int]]:
    return [(c, j) for c, q in enumerate(d.crossings) for j, e in enumerate(q) if e == label]


def _face_with(d: Diagram, corner) -> list:
    for f in faces(d):
        if corner in f:
            return f
    raise IllegalMove(f"no face with corner {corner}")


def _corner(d: Diagram, c: int, first: int, second: int):
    """The corner at ``c`` between the edges labeled ``first`` then ``second``."""
    q = d.crossings[c]
    hits = [(c, s) for s in range(4) if q[s] == first and q[(s + 1) % 4] == second]
    if len(hits) != 1:
        raise IllegalMove(f"no unique corner at crossing {c}")
    return hits[0]


def _edge_colors(d: Diagram, g: Coloring) -> dict[int, int]:
    arcs = compute_arcs(d)
    return {e: g[a] for e, a in arcs.arc_of_edge.items()}


def _push_and_slide(run: _Run, under_side, over_side, E: int, T: int):
    """Push one side under another, then slide the pushed-over strand across
    ``E`` through the triangle ``E, T, new crossing``."""
    n = len(run.d.crossings)
    run.move(Move.make(R2_PUSH, side_x=under_side, side_y=over_side, under=True))
    new = {n, n + 1}
    for f in faces(run.d):
        cs = [c for c, _ in f]
        if len(f) == 3 and len(set(cs)) == 3 and E in cs and T in cs and set(cs) & new:
            # any top or bottom side flips the same triangle
            order = sorted(range(3), key=lambda i: E in (cs[i], cs[(i + 1) % 3]))
            for i in order:
                if _r3_legal(run.d, f, f[i]):
                    run.move(Move.make(R3_SLIDE, corner=f[i]))
                    return
    raise IllegalMove("no triangle to slide through")


def _engulf(run: _Run, corner, tongue_over: bool = True):
    """Grow the strand next to ``corner`` across its crossing.

    ``corner`` sits at crossing E between an under piece running to a
    neighbour T and a half of E's over strand.  The side touching T that is
    not the piece itself is the tongue.  With ``tongue_over`` the over half
    is pushed under the tongue and the tongue slides across E; otherwise the
    tongue is pushed under the over half and then slides.
    """
    E, s = corner
    f = _face_with(run.d, corner)
    i = f.index(corner)
    k = len(f)
    if k < 3:
        raise IllegalMove("corner lies on a bigon")
    if (s + 1) % 2 == 0:
        T = f[(i + 1) % k][0]
        over_half, tongue = f[(i - 1) % k], f[(i + 1) % k]
    else:
        T = f[(i - 1) % k][0]
        over_half, tongue = f[i], f[(i - 2) % k]
    if T == E or over_half == tongue:
        raise IllegalMove("degenerate corner")
    if tongue_over:
        _push_and_slide(run, over_half, tongue, E, T)
    else:
        _push_and_slide(run, tongue, over_half, E, T)


# the wrap --------------------------------------------------------------------


def _arc_ends(d: Diagram, alpha: int):
    """Both ends of edge ``alpha`` when it runs under at two distinct crossings."""
    ends = _ends(d, alpha)
    if len(ends) != 2 or ends[0][0] == ends[1][0] or any(j % 2 for _, j in ends):
        return None
    return ends


def _wrap(run: _Run, alpha: int, near, far, seed) -> None:
    """Swallow edge ``alpha`` and its end crossings into a tongue.

    ``near = (C, j)`` and ``far = (C', a)`` are alpha's slots.  The tongue
    lives in the face to the right of alpha walked from C' to C.  ``seed``
    is ``("kink",)`` for a kink on C's outgoing under strand or
    ``("finger", corner)`` for an R2 finger from the side leaving
    ``corner`` in that face.
    """
    d = run.d
    (C, j), (C1, a) = near, far
    q, q1 = d.crossings[C], d.crossings[C1]
    bup, gam = q[(j + 1) % 4], q[(j + 2) % 4]
    bpup = q1[(a - 1) % 4]
    if seed[0] == "kink":
        mp = run.move(Move.make(R1_ADD, side=(C, (j + 1) % 4), over_first=False))
        bup, gam, bpup, alpha = mp[bup], mp[gam], mp[bpup], mp[alpha]
        mp = _tracked(run, lambda: _engulf(run, _corner(run.d, C, bup, gam)))
    else:
        side_y = seed[1]
        mp = run.move(Move.make(R2_PUSH, side_x=(C1, (a - 1) % 4), side_y=side_y, under=True))
        bup, bpup, alpha = mp[bup], mp[bpup], mp[alpha]
        sb = [s for s in range(4) if run.d.crossings[C][s] == bup]
        if len(sb) != 1:
            raise IllegalMove("over strand meets its own crossing")
        mp = _tracked(run, lambda: _engulf(run, (C, (sb[0] - 1) % 4)))
    bpup, alpha = mp[bpup], mp[alpha]
    _engulf(run, _corner(run.d, C1, bpup, alpha))


def _tracked(run: _Run, action: Callable[[], None]) -> dict[int, int]:
    """Run ``action`` and compose the label maps of the moves it applied."""
    start = len(run.maps)
    composed = {e: e for q in run.d.crossings for e in q}
    action()
    for mp in run.maps[start:]:
        if mp is not None:
            composed = {e: mp[v] for e, v in composed.items() if v in mp}
    return composed


def _wrap_variants(d: Diagram, g: Coloring, alpha: int, allow_fingers: bool = True):
    """Every (near, far, seed) choice for swallowing ``alpha``, in a fixed order."""
    ends = _arc_ends(d, alpha)
    if ends is None:
        return []
    out = []
    ends = sorted(ends)
    for near, far in ((ends[0], ends[1]), (ends[1], ends[0])):
        out.append((near, far, ("kink",)))
    if allow_fingers:
        ecol = _edge_colors(d, g)
        for near, far in ((ends[0], ends[1]), (ends[1], ends[0])):
            C1, a = far
            f = _face_with(d, (C1, (a - 1) % 4))
            for corner in f:
                e = d.crossings[corner[0]][(corner[1] + 1) % 4]
                if e != alpha and ecol[e] != ecol[alpha]:
                    out.append((near, far, ("finger", corner)))
    return out


def _attempt(run: _Run, action: Callable[[], None], accept: Callable[[Diagram, Coloring], bool]) -> bool:
    cp = run.checkpoint()
    try:
        action()
    except (IllegalMove, ColorMismatch):
        run.rollback(cp)
        return False
    if accept(run.d, run.g):
        return True
    run.rollback(cp)
    return False


# monochrome crossings ---------------------------------------------------------


def _mono_crossings(d: Diagram, g: Coloring, color: int):
    arcs = compute_arcs(d)
    out = []
    for k, (q, cols) in enumerate(zip(d.crossings, crossing_colors(d, g, arcs))):
        if cols == (color, color, color):
            kink = any(q[j] == q[(j + 1) % 4] for j in range(4))
            over = arcs.arc_of_edge[q[1]]
            distinct = over not in (arcs.arc_of_edge[q[0]], arcs.arc_of_edge[q[2]])
            out.append((k, kink, distinct))
    return out


def _mono_count(d: Diagram, g: Coloring, color: int) -> int:
    return sum(1 for _, kink, distinct in _mono_crossings(d, g, color) if kink or distinct)


def _delete_mono(run: _Run, color: int) -> None:
    while True:
        mono = _mono_crossings(run.d, run.g, color)
        kinks = [k for k, kink, _ in mono if kink]
        if kinks:
            run.move(Move.make(R1_REMOVE, crossing=kinks[0]))
            continue
        targets = [k for k, _, distinct in mono if distinct]
        if not targets:
            return
        before = len(targets)

        def fewer(d, g):
            return _mono_count(d, g, color) < before

        if not any(_attempt(run, act, fewer) for act in _mono_actions(run, targets, color)):
            raise ReductionStuck(
                f"cannot clear the {{{color}|{color}|{color}}} crossings at {targets}"
            )


def _mono_actions(run: _Run, targets, color):
    """Candidate rewrites removing one monochrome crossing: pop a bigon it
    bounds, or slide its under strand off the over arc past the next
    crossing along that arc."""
    d = run.d
    ecol = _edge_colors(d, run.g)
    acts = []
    for f in faces(d):
        if len(f) == 2 and any(c in targets for c, _ in f):
            acts.append(lambda f=f: run.move(Move.make(R2_POP, corner=f[0])))
    occ = d.slots()
    for X in targets:
        for s in (1, 3):
            C, c = d.other_end((X, s), occ)
            if C == X or c % 2:
                continue
            qc = d.crossings[C]
            if len({ecol[e] for e in qc}) == 1:
                continue
            for corner in ((C, c), (C, (c - 1) % 4)):
                acts.append(lambda corner=corner: _engulf(run, corner, tongue_over=False))
    return acts


def delete_max_monochrome(d: Diagram, g: Coloring):
    """Remove every ``{M|M|M}`` crossing with distinct over and under arcs
    (and every ``{M|M|M}`` kink), ``M`` the largest color."""
    run = _Run(d, g)
    if g.colors:
        _delete_mono(run, max(g.colors))
    return run.d, run.g, run.trace


# simple colorings --------------------------------------------------------------


def _measure(g: Coloring):
    top = max(g.colors)
    return top, g.colors.count(top)


def _top_edges(d: Diagram, g: Coloring):
    """Edges carrying the top color, ordered by their lowest end crossing."""
    ecol = _edge_colors(d, g)
    top = max(g.colors)
    out = []
    for e, col in ecol.items():
        if col == top:
            ends = _ends(d, e)
            out.append((min(c for c, _ in ends), e))
    return [e for _, e in sorted(out)]


def _simple_step(run: _Run, dgap: int, floor: int) -> None:
    _delete_mono(run, max(run.g.colors))
    before = _measure(run.g)

    def better(d, g):
        return _measure(g) < before and min(g.colors) >= floor and is_simple(d, g) == dgap

    for alpha in _top_edges(run.d, run.g):
        for f in faces(run.d):
            if len(f) == 2:
                labels = {run.d.crossings[c][(i + 1) % 4] for c, i in f}
                if alpha in labels and _attempt(
                    run, lambda f=f: run.move(Move.make(R2_POP, corner=f[0])), better
                ):
                    return
        for near, far, seed in _wrap_variants(run.d, run.g, alpha, allow_fingers=False):
            if _attempt(run, lambda: _wrap(run, alpha, near, far, seed), better):
                return
    raise ReductionStuck(f"no wrap lowers the top color {before[0]} (gap {dgap})")


def reduce_simple_step(d: Diagram, g: Coloring, dgap: int):
    """Lower the measure ``(max color, #arcs with max color)`` once,
    keeping the coloring simple with common difference ``dgap``."""
    gap = is_simple(d, g)
    if gap == NOT_SIMPLE or (gap != ALL_MONOCHROME and gap != dgap):
        raise NotSimple(f"coloring is not simple with difference {dgap}")
    if max(g.colors) - min(g.colors) < 4 * dgap:
        raise MaxTooSmall(f"color span below {4 * dgap}")
    run = _Run(d, g)
    _simple_step(run, dgap, min(g.colors))
    return run.d, run.g, run.trace


def _simple_run(run: _Run, dgap: int) -> None:
    lo = min(run.g.colors)
    if lo:
        run.recolor(1, -lo)
    while max(run.g.colors) >= 4 * dgap:
        before = _measure(run.g)
        _simple_step(run, dgap, 0)
        if not _measure(run.g) < before:
            raise Diverged(f"measure did not drop below {before}")


def _require_connected(d: Diagram):
    if diagram_components(d) > 1:
        raise SplitDiagram("reduction needs a connected diagram")


def reduce_simple(d: Diagram, g: Coloring) -> ReductionReport:
    run = _Run(d, g)
    if g.is_trivial():
        return _report(run, g, 4 if diagram_components(d) == 1 else 2)
    gap = is_simple(d, g)
    if gap == NOT_SIMPLE:
        raise NotSimple("coloring is not simple")
    _require_connected(d)
    _simple_run(run, gap)
    image = run.g.image
    if not set(image) <= {k * gap for k in range(4)}:
        raise InvariantViolation(f"simple reduction ended on {image}")
    return _report(run, g, 4)


# five colors -------------------------------------------------------------------

_FLIPS = {
    (0, 2, 3, 4, 5): (0, 1, 2, 3, 5),
    (0, 1, 2, 3, 6): (0, 3, 4, 5, 6),
    (0, 3, 5, 6, 7): (0, 1, 2, 4, 7),
}


def _nonsimple_crossings(d: Diagram, g: Coloring, gap: int = 1) -> int:
    return sum(
        1 for x, y, z in crossing_colors(d, g) if {abs(y - x), abs(y - z)} - {0, gap}
    )


def _excess(d: Diagram, g: Coloring, gap: int = 1) -> int:
    """Total distance of the crossing differences from ``{0, gap}``."""
    return sum(
        min(abs(abs(y - u) - gap), abs(y - u))
        for x, y, z in crossing_colors(d, g)
        for u in (x, z)
    )


def _search(run: _Run, case, goal, score, gap: int = 1, width: int = 400, what="five-color case") -> None:
    """Greedy descent over local fixes, pops and wraps.

    ``goal(d, g)`` ends the search; ``score(d, g)`` must strictly drop at
    every accepted step, so the loop terminates.  At most ``width``
    candidates are tried per step.  Raises :class:`ReductionStuck` naming
    ``case``.
    """
    while not goal(run.d, run.g):
        current = score(run.d, run.g)

        def better(d, g):
            return score(d, g) < current

        acts = _search_actions(run, gap)[:width]
        if not any(_attempt(run, act, better) for act in acts):
            raise ReductionStuck(
                f"{what} {case}: no move composite meets the endpoint contract "
                f"from image {run.g.image}"
            )


def _fix_crossing(run: _Run, X: int, u: int, first: bool, tongue) -> None:
    """Finger the strand ``tongue`` over the under piece in slot ``u`` of X,
    then slide the finger across X.

    When the finger differs from the piece by ``gap`` and the piece passed
    under X with difference ``2 gap``, the slide leaves a monochrome
    crossing behind.  ``first`` picks the face: the one leaving X along the
    piece, or the one arriving at X along it.
    """
    q = run.d.crossings[X]
    if first:
        bh = q[(u - 1) % 4]
        mp = run.move(Move.make(R2_PUSH, side_x=(X, (u - 1) % 4), side_y=tongue, under=True))
    else:
        bh = q[(u + 1) % 4]
        f = _face_with(run.d, (X, u))
        side_x = f[(f.index((X, u)) - 1) % len(f)]
        mp = run.move(Move.make(R2_PUSH, side_x=side_x, side_y=tongue, under=True))
    bh = mp[bh]
    sb = [s for s in range(4) if run.d.crossings[X][s] == bh]
    if len(sb) != 1:
        raise IllegalMove("over strand meets its own crossing")
    _engulf(run, (X, sb[0] if first else (sb[0] - 1) % 4), tongue_over=False)


def _fix_actions(run: _Run, gap: int):
    d = run.d
    ecol = _edge_colors(d, run.g)
    acts = []
    for X, q in enumerate(d.crossings):
        over = ecol[q[1]]
        if {abs(over - ecol[q[0]]), abs(over - ecol[q[2]])} <= {0, gap}:
            continue
        for u in (0, 2):
            piece = ecol[q[u]]
            if abs(over - piece) == gap:
                continue
            for first in (True, False):
                corner = (X, (u - 1) % 4) if first else (X, u)
                for c in _face_with(d, corner):
                    e = d.crossings[c[0]][(c[1] + 1) % 4]
                    # under the finger the piece reads 2t - piece, which must
                    # sit closer to the over color than the piece does
                    closer = abs(over - 2 * ecol[e] + piece) < abs(over - piece)
                    if closer and e != q[u]:
                        acts.append(lambda X=X, u=u, f=first, c=c: _fix_crossing(run, X, u, f, c))
    return acts


def _search_actions(run: _Run, gap: int = 1):
    d, g = run.d, run.g
    acts = _fix_actions(run, gap)
    for f in faces(d):
        if len(f) == 2:
            acts.append(lambda f=f: run.move(Move.make(R2_POP, corner=f[0])))
    for k, q in enumerate(d.crossings):
        if any(q[j] == q[(j + 1) % 4] for j in range(4)):
            acts.append(lambda k=k: run.move(Move.make(R1_REMOVE, crossing=k)))
    ecol = _edge_colors(d, g)
    lo, hi = min(g.colors), max(g.colors)
    extreme = sorted((min(c for c, _ in _ends(d, e)), e) for e, c in ecol.items() if c in (lo, hi))
    for _, alpha in extreme:
        for near, far, seed in _wrap_variants(d, g, alpha):
            acts.append(lambda a=alpha, n=near, f=far, s=seed: _wrap(run, a, n, f, s))
    return acts


def _case_01234(run: _Run):
    if is_simple(run.d, run.g) == 1:
        return
    hi = 4

    def goal(d, g):
        return is_simple(d, g) not in (NOT_SIMPLE, ALL_MONOCHROME)

    def score(d, g):
        span = max(g.colors) - min(g.colors)
        return (_nonsimple_crossings(d, g), max(span - hi, 0), len(d.crossings))

    _search(run, (0, 1, 2, 3, 4), goal, score)


def _case_01235(run: _Run):
    _delete_mono(run, 5)

    def goal(d, g):
        return set(g.image) <= {-1, 0, 1, 2, 3}

    def score(d, g):
        return (sum(1 for c in g.colors if c > 3 or c < -1), len(d.crossings))

    _search(run, (0, 1, 2, 3, 5), goal, score)
    run.recolor(1, 1)


def _case_03456(run: _Run):
    _delete_mono(run, 0)

    def goal(d, g):
        return set(g.image) <= {2, 3, 4, 5, 6}

    def score(d, g):
        return (sum(1 for c in g.colors if c < 2 or c > 6), len(d.crossings))

    _search(run, (0, 3, 4, 5, 6), goal, score)
    run.recolor(1, -2)


def _case_01247(run: _Run):
    def goal(d, g):
        return set(g.image) <= set(range(6)) and is_simple(d, g) not in (NOT_SIMPLE, ALL_MONOCHROME)

    def score(d, g):
        out = sum(1 for c in g.colors if c < 0 or c > 5)
        return (out, _nonsimple_crossings(d, g), len(d.crossings))

    _search(run, (0, 1, 2, 4, 7), goal, score)


_FIVE_CASES = {
    (0, 1, 2, 3, 4): _case_01234,
    (0, 1, 2, 3, 5): _case_01235,
    (0, 3, 4, 5, 6): _case_03456,
    (0, 1, 2, 4, 7): _case_01247,
}


def _five_run(run: _Run) -> tuple[int, ...]:
    """Normalize, flip into a handled case, reduce to a simple coloring.
    Returns the canonical case."""
    fc = classify_five(run.g)
    if fc == NOT_FIVE_COLORS:
        raise NotFiveColors(f"image {run.g.image} does not have five colors")
    if not fc.in_catalog:
        raise NotInCatalog(f"image {fc.canonical} is not a five-color image of a non-split link")
    lo = min(run.g.colors)
    top = max(run.g.colors)
    div = _gcd_all(c - lo for c in run.g.colors)
    if lo or div != 1:
        run.recolor(Fraction(1, div), Fraction(-lo, div))
    if fc.flipped:
        run.recolor(-1, (top - lo) // div)
    case = run.g.image
    if case in _FLIPS:
        run.recolor(-1, case[-1])
        case = run.g.image
    _FIVE_CASES[case](run)
    # the shifted endpoints of the 5 and 0 cases are {0,...,4} colorings
    if run.g.image == (0, 1, 2, 3, 4) and is_simple(run.d, run.g) == NOT_SIMPLE:
        _case_01234(run)
    return case


def _gcd_all(values) -> int:
    out = 0
    for v in values:
        out = gcd(out, v)
    return out


def reduce_five(d: Diagram, g: Coloring) -> ReductionReport:
    if len(g.image) != 5:
        raise NotFiveColors(f"image {g.image} does not have five colors")
    _require_connected(d)
    run = _Run(d, g)
    case = _five_run(run)
    gap = is_simple(run.d, run.g)
    if gap in (NOT_SIMPLE, ALL_MONOCHROME):
        raise ReductionStuck(f"five-color case {case} did not reach a simple coloring")
    _simple_run(run, gap)
    return _report(run, g, 4, case=case)


# the driver --------------------------------------------------------------------


def _representative(d: Diagram, g: Coloring) -> Coloring:
    """Prefer a simple coloring, then one with at most five colors, among
    small kernel combinations; fall back to ``g``."""
    if is_simple(d, g) != NOT_SIMPLE:
        return g
    small = None
    for n in range(4, 9):
        for cand in sample_colorings(d, n, coeff_bound=2, limit=50):
            if is_simple(d, cand) != NOT_SIMPLE:
                return cand
            if small is None and n <= 5:
                small = cand
    if len(g.image) <= 5:
        return g
    return small if small is not None else g


def minimize(d: Diagram) -> ReductionReport:
    """Drive a diagram's colorings toward the fewest colors reachable here.

    The report never claims more than it shows: ``optimal`` holds only when
    the achieved count meets the lower bound.
    """
    validate(d)
    if diagram_components(d) > 1:
        g = split_two_coloring(d)
        return _report(_Run(d, g), g, 2, note="split diagram")
    g = find_nontrivial_coloring(d)
    if g is None:
        raise NotColorable("the diagram has only trivial Z-colorings")
    g = _representative(d, primitive_normalize(g))
    if is_simple(d, g) != NOT_SIMPLE:
        return reduce_simple(d, g)
    if len(g.image) == 5:
        try:
            return reduce_five(d, g)
        except ReductionStuck as exc:
            return _report(_Run(d, g), g, 4, note=str(exc))
    run = _Run(d, g)
    try:
        _make_simple(run)
    except ReductionStuck as exc:
        return _report(_Run(d, g), g, 4, note=f"not reduced: {exc}")
    _simple_run(run, is_simple(run.d, run.g))
    return _report(run, g, 4, note="made simple by local fixes")


def _make_simple(run: _Run) -> None:
    """Greedy local fixes toward a simple coloring with difference 1."""

    def goal(d, g):
        return is_simple(d, g) not in (NOT_SIMPLE, ALL_MONOCHROME)

    def score(d, g):
        return (_excess(d, g), _nonsimple_crossings(d, g), len(d.crossings))

    _search(run, run.g.image, goal, score, what="coloring")
