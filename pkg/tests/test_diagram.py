import pytest

from zcolor.diagram import (
    compute_arcs,
    diagram_components,
    disjoint_union,
    faces,
    from_json,
    is_planar,
    link_components,
    parse_pd,
    pretzel,
    serialize_pd,
    to_json,
)
from zcolor.errors import DiagramError, EdgeMultiplicity, EmptyInput, MalformedToken, ZeroTwistEntry

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def test_parse_trefoil():
    d = parse_pd(TREFOIL)
    assert len(d.crossings) == 3
    assert compute_arcs(d).arc_count == 3
    assert link_components(d) == 1
    assert is_planar(d)


@pytest.mark.parametrize("text", [
    "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]",
    "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]",
])
def test_other_notations(text):
    assert parse_pd(text) == parse_pd(TREFOIL)


def test_round_trips():
    d = parse_pd(TREFOIL)
    assert parse_pd(serialize_pd(d)) == d
    assert from_json(to_json(d)) == d


@pytest.mark.parametrize("text,err", [
    ("", EmptyInput),
    ("X[1,2,3]", MalformedToken),
    ("X[1,1,1,2]", EdgeMultiplicity),
    ("X[1,2,3,4]", EdgeMultiplicity),
])
def test_bad_input(text, err):
    with pytest.raises(err):
        parse_pd(text)
    assert issubclass(err, DiagramError)


def test_faces_euler():
    for tw in ([3], [2, -2], [3, -3, 2]):
        d = pretzel(tw)
        # V - E + F = 2 for a connected diagram
        assert len(d.crossings) - d.edge_count + len(faces(d)) == 2


@pytest.mark.parametrize("tw,comps", [([3], 1), ([2, -2], 2), ([3, -3], 2), ([3, -2], 1), ([2, -2, 2, -2], 4)])
def test_pretzel_components(tw, comps):
    d = pretzel(tw)
    assert len(d.crossings) == sum(abs(t) for t in tw)
    assert link_components(d) == comps


def test_pretzel_zero_entry():
    with pytest.raises(ZeroTwistEntry):
        pretzel([2, 0, 1])


def test_disjoint_union():
    t = parse_pd(TREFOIL)
    u = disjoint_union(t, t)
    assert diagram_components(u) == 2
    assert link_components(u) == 2
    assert diagram_components(parse_pd(TREFOIL + " U1")) == 2


def test_fixture_hopf(fixture):
    assert link_components(fixture("hopf")) == 2
