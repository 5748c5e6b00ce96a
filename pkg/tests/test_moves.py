import random

import pytest

from zcolor.coloring import Coloring, determinant, find_nontrivial_coloring, verify_coloring
from zcolor.diagram import compute_arcs, link_components, parse_pd, pretzel, validate
from zcolor.errors import ColorMismatch, IllegalMove
from zcolor.moves import (
    KINDS,
    R1_ADD,
    R1_REMOVE,
    R2_POP,
    R2_PUSH,
    R3_SLIDE,
    Move,
    apply_move,
    edge_colors,
    legal_moves,
)


def _clasp():
    d = pretzel([2, -2])
    return d, find_nontrivial_coloring(d)


def test_move_dict_round_trip():
    m = Move.make(R2_PUSH, side_x=(0, 1), side_y=(1, 2), under=True)
    assert Move.from_dict(m.to_dict()) == m
    with pytest.raises(IllegalMove):
        Move.make("R4")


def test_r1_add_then_remove(fixture):
    d = fixture("trefoil")
    g = Coloring((5, 5, 5))
    d2, g2 = apply_move(d, g, Move.make(R1_ADD, side=(0, 0), over_first=True))
    assert len(d2.crossings) == 4 and verify_coloring(d2, g2)
    kinks = [m for m in legal_moves(d2, kinds=(R1_REMOVE,))]
    assert kinks
    d3, g3 = apply_move(d2, g2, kinks[0])
    assert len(d3.crossings) == 3
    assert set(g3.colors) == {5}


def test_r2_push_forces_reflection():
    d, g = _clasp()
    before = set(edge_colors(d, g).values())
    for m in legal_moves(d, kinds=(R2_PUSH,)):
        try:
            d2, g2 = apply_move(d, g, m)
        except (IllegalMove, ColorMismatch):
            continue
        assert len(d2.crossings) == len(d.crossings) + 2
        assert verify_coloring(d2, g2)
        new = set(edge_colors(d2, g2).values()) - before
        # the only new color is a reflection 2y - x of old ones
        assert all(any(c == 2 * y - x for x in before for y in before) for c in new)
        return
    pytest.fail("no R2 push applied")


def test_r2_pop_inverts_push():
    d, g = _clasp()
    pushes = legal_moves(d, kinds=(R2_PUSH,))
    d2, g2 = apply_move(d, g, pushes[0])
    pops = legal_moves(d2, kinds=(R2_POP,))
    assert pops
    results = []
    for m in pops:
        d3, g3 = apply_move(d2, g2, m)
        results.append((len(d3.crossings), sorted(set(g3.colors))))
    assert (len(d.crossings), sorted(set(g.colors))) in results


def test_r3_slides_keep_colorings():
    d = pretzel([3, -2, 2])
    g = find_nontrivial_coloring(d)
    if g is None:
        g = Coloring((0,) * compute_arcs(d).arc_count)
    slid = 0
    rng = random.Random(5)
    for _ in range(40):
        r3 = legal_moves(d, kinds=(R3_SLIDE,))
        if r3:
            d, g = apply_move(d, g, rng.choice(r3))
            slid += 1
            assert verify_coloring(d, g)
        else:
            m = rng.choice(legal_moves(d, kinds=(R2_PUSH,)))
            try:
                d, g = apply_move(d, g, m)
            except (IllegalMove, ColorMismatch):
                pass
    assert slid


def test_illegal_moves():
    d, g = _clasp()
    with pytest.raises(IllegalMove):
        apply_move(d, g, Move.make(R1_REMOVE, crossing=0))
    with pytest.raises(IllegalMove):
        apply_move(d, g, Move.make(R2_POP, corner=(9, 0)))


@pytest.mark.parametrize("seed", range(4))
def test_fuzz(fixture, seed):
    rng = random.Random(seed)
    d, g = _clasp() if seed % 2 else (fixture("trefoil"), Coloring((0, 0, 0)))
    det, comps = determinant(d), link_components(d)
    for _ in range(60):
        moves = legal_moves(d)
        rng.shuffle(moves)
        for m in moves:
            if len(d.crossings) > 10 and m.kind in (R1_ADD, R2_PUSH):
                continue
            try:
                d, g = apply_move(d, g, m)
                break
            except (IllegalMove, ColorMismatch):
                continue
        validate(d)
        assert verify_coloring(d, g)
        assert determinant(d) == det and link_components(d) == comps


def test_kinds_listed():
    assert set(KINDS) == {R1_ADD, R1_REMOVE, R2_PUSH, R2_POP, R3_SLIDE}
    assert parse_pd("X[1,2,2,1]")
