import pytest

from milnor_lib.core import Arc, Crossing, LinkDiagram, parse_braid
from milnor_lib.core.crossing import OVER, UNDER
from milnor_lib.core.errors import DiagramError


def test_accessors(hopf):
    assert hopf.base_arc(1) == 1
    assert hopf.component_arcs(1) == [1, 2]
    assert hopf.component_arcs(2, start=4) == [4, 3]
    assert hopf.head(1) == (1, UNDER)
    assert hopf.tail(2) == (1, UNDER)
    assert hopf.crossing_components(1) == (2, 1)
    assert not hopf.is_self_crossing(1)


def test_check_component(hopf):
    with pytest.raises(DiagramError):
        hopf.check_component(3)
    with pytest.raises(DiagramError):
        hopf.check_component(0)


def test_unknown_lookup(hopf):
    with pytest.raises(DiagramError):
        hopf.arc(99)
    with pytest.raises(DiagramError):
        hopf.crossing(99)


def test_duplicate_arc_ids():
    with pytest.raises(DiagramError):
        LinkDiagram([Arc(1, 1, 1), Arc(1, 1, 1)], [])


def test_successor_mismatch():
    arcs = [Arc(1, 1, 2), Arc(2, 1, 1)]
    crossing = Crossing(1, over_in=2, over_out=2, under_in=1, under_out=1, sign=1)
    with pytest.raises(DiagramError):
        LinkDiagram(arcs, [crossing])


def test_crossingless_component_must_be_one_arc():
    with pytest.raises(DiagramError):
        LinkDiagram([Arc(1, 1, 2), Arc(2, 1, 1)], [])


def test_from_gauss_needs_both_roles():
    with pytest.raises(DiagramError):
        LinkDiagram.from_gauss([[('a', OVER), ('b', UNDER)]], {'a': 1, 'b': 1})


def test_gauss_round_trip(any_fixture):
    sequences, signs = any_fixture.to_gauss()
    rebuilt = LinkDiagram.from_gauss(sequences, signs)
    assert rebuilt == any_fixture.canonical()
    assert rebuilt.is_isomorphic(any_fixture)


def test_slots_follow_sign():
    positive = Crossing(1, over_in=3, over_out=4, under_in=1, under_out=2, sign=1)
    negative = Crossing(1, over_in=3, over_out=4, under_in=1, under_out=2, sign=-1)
    assert positive.slots() == (1, 3, 2, 4)
    assert negative.slots() == (1, 4, 2, 3)
    assert positive.flipped().sign == -1
    assert positive.flipped().passage(OVER) == (1, 2)


def test_face_counts(hopf, borromean):
    # connected diagrams: V - E + F = 2, with E = 2V
    for d in (hopf, borromean):
        faces = d.faces()
        assert len(faces) == len(d.crossings) + 2
        sides = [a for face in faces for a, _ in face]
        assert sorted(sides) == sorted([a.id for a in d.arcs] * 2)


def test_face_directions(borromean):
    for arc in borromean.arcs:
        directions = sorted(dr for face in borromean.faces() for a, dr in face if a == arc.id)
        assert directions == [-1, 1]


def test_isomorphism(hopf, unlink2):
    assert hopf.is_isomorphic(hopf.canonical())
    assert not hopf.is_isomorphic(unlink2)
    assert not parse_braid("1 1", 2).is_isomorphic(parse_braid("-1 -1", 2))


def test_connected_pieces(unlink2, hopf):
    assert unlink2.connected_pieces() == [[1], [2]]
    assert hopf.connected_pieces() == [[1, 2]]
    assert sorted(len(p) for p in parse_braid("1 1", 3).connected_pieces()) == [1, 2]


def test_fixtures_are_planar(any_fixture, unlink2):
    assert any_fixture.is_planar()
    assert unlink2.is_planar()


def test_interlaced_gauss_code_is_not_planar():
    # each crossing interlaces an odd number of others
    d = LinkDiagram.from_gauss([[(1, OVER), (2, OVER), (1, UNDER), (2, UNDER)]], {1: 1, 2: 1})
    assert not d.is_planar()


def test_to_pd(hopf):
    assert hopf.to_pd() == "PD[X[1,3,2,4], X[4,2,3,1]]"
