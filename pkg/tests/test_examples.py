"""Worked input/output examples for each public operation."""

import pytest

from zcolor.coloring import (
    ALL_MONOCHROME,
    NOT_FIVE_COLORS,
    NOT_SIMPLE,
    Coloring,
    affine,
    bounded_small_image_search,
    classify_five,
    coloring_matrix,
    coloring_space,
    crossing_colors,
    determinant,
    find_nontrivial_coloring,
    is_simple,
    normalize_min_zero,
    primitive_normalize,
    sample_colorings,
    split_two_coloring,
    verify_coloring,
)
from zcolor.diagram import (
    compute_arcs,
    diagram_components,
    disjoint_union,
    link_components,
    parse_pd,
    pretzel,
    validate,
)
from zcolor.errors import ColorMismatch, NotSquareAfterDrop
from zcolor.intlinalg import identity, integer_kernel_basis, matvec, minor_determinant, smith_normal_form
from zcolor.moves import R1_ADD, R2_POP, R2_PUSH, Move, apply_move, edge_colors, legal_moves
from zcolor.palette import palette_graph

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
HOPF = "X[1,4,2,3] X[3,2,4,1]"
KINK = "X[1,1,2,2]"


def _edge_color(d, ec, side):
    c, i = side
    return ec[d.crossings[c][(i + 1) % 4]]


def test_diagram_examples():
    t, h, k = parse_pd(TREFOIL), parse_pd(HOPF), parse_pd(KINK)
    assert (len(t.crossings), t.edge_count) == (3, 6)
    assert (len(k.crossings), k.edge_count) == (1, 2)
    assert [compute_arcs(x).arc_count for x in (t, k, h)] == [3, 1, 2]
    assert diagram_components(h) == 1
    assert diagram_components(disjoint_union(t, t)) == 2
    assert link_components(t) == 1 and link_components(h) == 2
    assert link_components(parse_pd("U2")) == 2
    p = pretzel([3, -3, 3, -3])
    assert len(p.crossings) == 12
    validate(p)


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert smith_normal_form(identity(3)).s == identity(3)
    z = smith_normal_form([[0, 0], [0, 0]])
    assert z.rank == 0 and z.s == [[0, 0], [0, 0]]


def test_kernel_examples():
    (v,) = integer_kernel_basis([[1, 1], [-1, -1]])
    assert v in ([1, -1], [-1, 1])
    assert integer_kernel_basis(identity(2)) == []
    basis = integer_kernel_basis([[2, -1, -1]])
    assert len(basis) == 2
    assert all(matvec([[2, -1, -1]], b) == [0] for b in basis)
    # (a, b, 2a - b) for a = 1, b = 0 is an integer combination of the basis
    a, b = basis
    assert any(
        [x * a[i] + y * b[i] for i in range(3)] == [1, 0, 2]
        for x in range(-3, 4) for y in range(-3, 4)
    )


def test_minor_examples():
    t = parse_pd(TREFOIL)
    m = coloring_matrix(t)
    assert {minor_determinant(m, i, j) for i in range(3) for j in range(3)} == {3}
    assert minor_determinant(coloring_matrix(parse_pd(KINK)), 0, 0) == 1
    with pytest.raises(NotSquareAfterDrop):
        minor_determinant([[1, 2, 3], [4, 5, 6]], 0, 0)


def test_coloring_matrix_examples():
    assert coloring_matrix(parse_pd(KINK)) == [[0]]
    for row in coloring_matrix(parse_pd(TREFOIL)):
        assert sorted(row) == [-1, -1, 2]
    for row in coloring_matrix(parse_pd(HOPF)):
        # proportional to (1, -1)
        assert row[0] == -row[1] != 0


def test_determinant_and_space_examples(fixture):
    assert determinant(parse_pd(TREFOIL)) == 3
    assert determinant(parse_pd(HOPF)) == 2
    assert determinant(fixture("L8n6")) == 0
    assert coloring_space(parse_pd(HOPF)).rank == 1
    assert coloring_space(pretzel([2, -2])).rank >= 2
    assert coloring_space(parse_pd("U2")).rank == 2
    assert find_nontrivial_coloring(parse_pd(HOPF)) is None
    assert find_nontrivial_coloring(parse_pd(TREFOIL)) is None
    p = pretzel([2, -2, 2, -2])
    g = find_nontrivial_coloring(p)
    assert not g.is_trivial() and verify_coloring(p, g)


def test_verify_examples(fixture):
    for name in ("trefoil", "L8n6", "hopf"):
        d = fixture(name)
        assert verify_coloring(d, Coloring((4,) * compute_arcs(d).arc_count))
    assert not verify_coloring(parse_pd(TREFOIL), Coloring((0, 1, 2)))


def test_normalization_examples():
    assert normalize_min_zero(Coloring((5, 7, 9))).colors == (0, 2, 4)
    assert normalize_min_zero(Coloring((0, 2, 1))).colors == (0, 2, 1)
    assert normalize_min_zero(Coloring((-3, 0, 3))).colors == (0, 3, 6)
    assert affine(Coloring((0, 2, 3, 4, 5)), -1, 5).image == (0, 1, 2, 3, 5)
    assert affine(Coloring((0, 1, 2, 3, 6)), -1, 6).image == (0, 3, 4, 5, 6)
    g = Coloring((3, 1, 4))
    assert affine(g, 1, 0) == g
    assert primitive_normalize(Coloring((0, 4, 8, 12))).image == (0, 1, 2, 3)
    assert primitive_normalize(Coloring((0, 2, 3))).colors == (0, 2, 3)
    assert primitive_normalize(Coloring((7, 7))).colors == (0, 0)


def test_is_simple_examples():
    p = pretzel([2, -2, 2, -2])
    assert is_simple(p, primitive_normalize(find_nontrivial_coloring(p))) >= 1
    two = parse_pd(TREFOIL + " X[7,10,8,11] X[9,12,10,7] X[11,8,12,9]")
    assert is_simple(two, Coloring((5,) * compute_arcs(two).arc_count)) == ALL_MONOCHROME


def test_not_simple_mixed_differences(fixture):
    d = fixture("L11n379")
    for g in sample_colorings(d, 5, limit=200):
        diffs = {abs(x - y) for x, y, _ in crossing_colors(d, g)} - {0}
        if len(diffs) > 1:
            assert is_simple(d, g) == NOT_SIMPLE
            return
    pytest.fail("no coloring with two differences sampled")


def test_palette_examples(fixture):
    d = fixture("L8n6")
    pg = palette_graph(d, Coloring((2,) * compute_arcs(d).arc_count))
    assert pg.vertices == (2,) and pg.edges == ()
    for g in sample_colorings(d, 5, limit=20):
        assert len(palette_graph(d, g).components()) == 2


def test_classify_examples():
    assert classify_five(Coloring((0, 2, 4, 6, 10))).canonical == (0, 1, 2, 3, 5)
    assert classify_five(Coloring((0, 2, 3, 4, 5))).canonical == (0, 2, 3, 4, 5)
    assert classify_five(Coloring((0, 1, 2, 3))) == NOT_FIVE_COLORS


def test_split_examples(fixture):
    u = parse_pd("U2")
    assert split_two_coloring(u).image == (0, 1)
    assert split_two_coloring(parse_pd(TREFOIL)) is None
    d = disjoint_union(parse_pd(TREFOIL), parse_pd(HOPF))
    g = split_two_coloring(d)
    assert g.image == (0, 1) and verify_coloring(d, g)
    assert bounded_small_image_search(u, 2) is not None
    assert bounded_small_image_search(parse_pd(HOPF), 3) is None


@pytest.mark.parametrize("name", ["L8n6", "L9n27", "L10n93", "L11n381"])
def test_extreme_over_colors(fixture, name):
    # an over arc carrying the min (or max) color forces both under arcs to it
    d = fixture(name)
    for g in sample_colorings(d, 5, limit=30) + sample_colorings(d, 6, limit=30):
        lo, hi = min(g.colors), max(g.colors)
        for x, y, z in crossing_colors(d, g):
            if y in (lo, hi):
                assert x == y == z


def test_move_examples():
    d = pretzel([2, -2])
    g = primitive_normalize(find_nontrivial_coloring(d))
    ec = edge_colors(d, g)
    c = ec[d.crossings[0][1]]
    d1, g1 = apply_move(d, g, Move.make(R1_ADD, side=(0, 0), over_first=False))
    kink = [q for q in d1.crossings if len(set(q)) < 4]
    assert len(kink) == 1
    e1 = edge_colors(d1, g1)
    assert len({e1[e] for e in kink[0]}) == 1
    assert c in set(e1.values())
    for m in legal_moves(d, kinds=(R2_PUSH,)):
        if m.get("under") and _edge_color(d, ec, m.get("side_x")) == 0 and _edge_color(d, ec, m.get("side_y")) == 2:
            d2, g2 = apply_move(d, g, m)
            assert 4 in edge_colors(d2, g2).values()
            break
    else:
        pytest.fail("no push of a 0 arc under a 2 arc")


def test_pop_mismatch():
    d = pretzel([2, -2])
    g = primitive_normalize(find_nontrivial_coloring(d))
    push = next(m for m in legal_moves(d, kinds=(R2_PUSH,)) if m.get("under"))
    d2, g2 = apply_move(d, g, push)
    pops = legal_moves(d2, kinds=(R2_POP,))
    assert pops
    # recolor the new middle arc so it no longer equals 2 * over - outer
    mid = next(a for a, c in enumerate(g2.colors) if c not in g.colors)
    cols = list(g2.colors)
    cols[mid] += 1
    for m in pops:
        with pytest.raises(ColorMismatch):
            apply_move(d2, Coloring(tuple(cols)), m)
