import pytest

from zcolor.coloring import Coloring, find_nontrivial_coloring, primitive_normalize, sample_colorings
from zcolor.diagram import pretzel
from zcolor.palette import PaletteGraph, enumerate_palette_graphs, palette_graph


def test_enumerated_four():
    graphs = enumerate_palette_graphs((0, 1, 2, 3, 4))
    assert len(graphs) == 4
    # every graph needs 1-3 and leaves the even colors connected
    assert all((1, 3) in g for g in graphs)


def test_clasp_palette():
    d = pretzel([2, -2])
    g = primitive_normalize(find_nontrivial_coloring(d))
    pg = palette_graph(d, g)
    for a, b, lab in pg.edges:
        assert a < b and 2 * lab == a + b
        assert lab in g.image


@pytest.mark.parametrize("name", ["L8n6", "L10n93", "L11n379"])
def test_five_color_palette_splits(fixture, name):
    d = fixture(name)
    for g in sample_colorings(d, 5, limit=40):
        pg = palette_graph(d, g)
        comps = pg.components()
        assert len(comps) == 2
        # one component per parity
        assert sorted({c % 2 for c in comp} == {comp[0] % 2} for comp in comps) == [True, True]
        if g.image == (0, 1, 2, 3, 4):
            assert pg.edge_set() in enumerate_palette_graphs(g.image)


def test_dot_is_deterministic(fixture):
    d = fixture("L8n6")
    g = sample_colorings(d, 5, limit=1)[0]
    a = palette_graph(d, g).to_dot()
    b = palette_graph(d, Coloring(tuple(g.colors))).to_dot()
    assert a == b
    assert a.startswith("graph palette {") and a.endswith("}\n")


def test_dot_layout():
    pg = PaletteGraph((0, 1, 2), ((0, 2, 1),))
    assert pg.to_dot("g") == 'graph g {\n  "0" [label="0"];\n  "1" [label="1"];\n  "2" [label="2"];\n  "0" -- "2" [label="1"];\n}\n'
    assert pg.components() == [(0, 2), (1,)]
