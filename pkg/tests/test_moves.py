import random

import pytest

from milnor_lib.core import parse_braid, parse_pd
from milnor_lib.core.errors import DiagramError, MoveError
from milnor_lib.core.moves import (MoveKind, MoveSpec, apply_move, band_sum, double_component,
                                   format_move_spec, parse_move_spec, r2_sites, r3_sites,
                                   random_isotopy, reverse_component)
from milnor_lib.invariants import linking_matrix, lk, lk_symmetrized, mu, writhe_component

from conftest import BORROMEAN_WORD


def coherent_pair(diagram):
    """Two arcs bounding a common face with the face between them, left to right."""
    for face in diagram.faces():
        lefts = [a for a, dr in face if dr < 0]
        rights = [a for a, dr in face if dr > 0]
        for left in lefts:
            for right in rights:
                if left != right:
                    return left, right
    raise AssertionError("no coherent pair")


@pytest.mark.parametrize("text, expected", [
    ("R1:3:+", MoveSpec(MoveKind.R1, (3,), 1, True)),
    ("R1:3:-,under", MoveSpec(MoveKind.R1, (3,), -1, False)),
    ("R2:3,7", MoveSpec(MoveKind.R2, (3, 7))),
    ("R2:3,7:under", MoveSpec(MoveKind.R2, (3, 7), over_first=False)),
    ("R3:2,5,9", MoveSpec(MoveKind.R3, (2, 5, 9))),
    ("CC:4", MoveSpec(MoveKind.CROSSING_CHANGE, (4,))),
    ("scc:4", MoveSpec(MoveKind.SELF_CROSSING_CHANGE, (4,))),
    ("DELTA:1,2,3", MoveSpec(MoveKind.DELTA_MOVE, (1, 2, 3))),
])
def test_parse_move_spec(text, expected):
    assert parse_move_spec(text) == expected
    assert parse_move_spec(format_move_spec(expected)) == expected


@pytest.mark.parametrize("text", ["R4:1", "R1", "R1:x", "R1:1:sideways", "R1:1:+:extra"])
def test_bad_move_specs(text):
    with pytest.raises(MoveError):
        parse_move_spec(text)


@pytest.mark.parametrize("sign", [1, -1])
def test_r1_adds_kink(hopf, sign):
    kinked = apply_move(hopf, MoveSpec(MoveKind.R1, (1,), sign))
    assert len(kinked.crossings) == 3
    assert writhe_component(kinked, 1) == sign
    assert lk(kinked, 1, 2) == 1


def test_r1_on_loop():
    kinked = apply_move(parse_braid("", 1), MoveSpec(MoveKind.R1, (1,), 1, False))
    assert len(kinked.crossings) == 1
    assert writhe_component(kinked, 1) == 1


def test_r1_unknown_arc(hopf):
    with pytest.raises(MoveError):
        apply_move(hopf, MoveSpec(MoveKind.R1, (99,)))


@pytest.mark.parametrize("over_first", [True, False])
def test_r2_adds_bigon(borromean, over_first):
    site = r2_sites(borromean)[0]
    moved = apply_move(borromean, MoveSpec(MoveKind.R2, site, over_first=over_first))
    assert len(moved.crossings) == 8
    assert (linking_matrix(moved).off_diagonal() == linking_matrix(borromean).off_diagonal()).all()
    assert mu(moved, (1, 2, 3)) == 1


def test_r2_same_arc(hopf):
    with pytest.raises(MoveError):
        apply_move(hopf, MoveSpec(MoveKind.R2, (1, 1)))


def test_r2_with_loop(hopf):
    d = parse_braid("1 1", 3)
    moved = apply_move(d, MoveSpec(MoveKind.R2, (1, 5)))
    assert len(moved.crossings) == 4
    assert lk(moved, 1, 3) == 0
    assert lk_symmetrized(moved, 1, 3) == 0


def test_r3_turns_braid_relation():
    d = parse_braid("1 2 1", 3)
    sites = r3_sites(d)
    assert len(sites) == 1
    moved = apply_move(d, MoveSpec(MoveKind.R3, sites[0]))
    assert moved.is_isomorphic(parse_braid("2 1 2", 3))


def test_r3_requires_triangle(borromean):
    # alternating diagrams have no strand passing over at both ends of an arc
    assert r3_sites(borromean) == []
    with pytest.raises(MoveError):
        apply_move(borromean, MoveSpec(MoveKind.R3, (1, 2, 3)))


def test_crossing_change_unlinks_hopf(hopf):
    changed = apply_move(hopf, MoveSpec(MoveKind.CROSSING_CHANGE, (1,)))
    assert lk(changed, 1, 2) == 0
    assert lk_symmetrized(changed, 1, 2) == 0


def test_self_crossing_change(trefoil, hopf):
    changed = apply_move(trefoil, MoveSpec(MoveKind.SELF_CROSSING_CHANGE, (1,)))
    assert writhe_component(changed, 1) == 1
    with pytest.raises(MoveError):
        apply_move(hopf, MoveSpec(MoveKind.SELF_CROSSING_CHANGE, (1,)))


def test_delta_move_on_unlink_gives_borromean():
    moved = apply_move(parse_braid("", 3), MoveSpec(MoveKind.DELTA_MOVE, (1, 2, 3)))
    assert moved.is_isomorphic(parse_braid(BORROMEAN_WORD, 3))
    assert abs(mu(moved, (1, 2, 3))) == 1


def test_delta_move_keeps_linking_numbers():
    d = parse_braid("1 1 1 1", 3)
    left, right = coherent_pair(d)
    loop = [a.id for a in d.arcs if a.is_loop()][0]
    moved = apply_move(d, MoveSpec(MoveKind.DELTA_MOVE, (left, right, loop)))
    assert len(moved.crossings) == len(d.crossings) + 6
    assert (linking_matrix(moved).off_diagonal() == linking_matrix(d).off_diagonal()).all()


def test_delta_move_needs_neighbours(borromean):
    with pytest.raises(MoveError):
        apply_move(borromean, MoveSpec(MoveKind.DELTA_MOVE, (1, 1, 2)))


@pytest.mark.parametrize("site", [(1, 4, 7), (7, 1, 4)])
def test_delta_move_with_loop_outside(site):
    d = parse_braid("1 1 1", 3)
    assert d.arc(7).is_loop()
    moved = apply_move(d, MoveSpec(MoveKind.DELTA_MOVE, site))
    assert moved.is_planar()
    assert len(moved.crossings) == len(d.crossings) + 6


def test_delta_move_rejects_loop_between_neighbours():
    with pytest.raises(MoveError):
        apply_move(parse_braid("1 1 1", 3), MoveSpec(MoveKind.DELTA_MOVE, (1, 7, 4)))

    d = parse_braid("1 1 1 1 1 1 1", 3)
    loop = [a.id for a in d.arcs if a.is_loop()][0]
    arcs = [a.id for a in d.arcs if not a.is_loop()]
    for left in arcs:
        for right in arcs:
            if left != right:
                with pytest.raises(MoveError):
                    apply_move(d, MoveSpec(MoveKind.DELTA_MOVE, (left, loop, right)))


def test_reverse_component(hopf, borromean):
    reversed_hopf = reverse_component(hopf, 1)
    assert lk(reversed_hopf, 1, 2) == -1
    assert mu(reverse_component(borromean, 1), (1, 2, 3)) == -1
    with pytest.raises(DiagramError):
        reverse_component(hopf, 3)


def test_reverse_keeps_writhe(trefoil):
    assert writhe_component(reverse_component(trefoil, 1), 1) == 3


def test_reverse_twice_is_identity(any_fixture):
    for index in range(1, any_fixture.component_count + 1):
        twice = reverse_component(reverse_component(any_fixture, index), index)
        assert twice.is_isomorphic(any_fixture)


def test_double_component_hopf(hopf):
    doubled = double_component(hopf, 1)
    assert doubled.component_count == 3
    assert lk(doubled, 1, 3) == 0
    assert lk(doubled, 2, 3) == 1
    assert lk(doubled, 1, 2) == 1


def test_double_component_is_zero_framed(trefoil):
    doubled = double_component(trefoil, 1)
    assert doubled.component_count == 2
    assert lk(doubled, 1, 2) == 0
    assert writhe_component(doubled, 2) == writhe_component(doubled, 1)


def test_double_component_bad_index(hopf):
    with pytest.raises(DiagramError):
        double_component(hopf, 0)


def test_double_positive_kink():
    kinked = apply_move(parse_pd("Loop[1]"), MoveSpec(MoveKind.R1, (1,), 1))
    doubled = double_component(kinked, 1)
    assert doubled.component_count == 2
    assert lk(doubled, 1, 2) == 0
    between = sorted(c.sign for c in doubled.crossings if not doubled.is_self_crossing(c.id))
    # two positive crossings from the kink, one negative clasp from the framing twist
    assert between == [-1, -1, 1, 1]


def test_band_sum(hopf, borromean):
    summed = band_sum(hopf, hopf)
    assert lk(summed, 1, 2) == 2
    assert mu(band_sum(borromean, borromean), (1, 2, 3)) == 2
    with pytest.raises(DiagramError):
        band_sum(hopf, borromean)


def test_band_sum_is_planar():
    first = parse_braid([-2, -2, 1], 3)
    second = parse_braid([1, 2, -1], 3)
    summed = band_sum(first, second)
    assert summed.is_planar()
    assert summed.component_count == 2
    assert (linking_matrix(summed).off_diagonal()
            == linking_matrix(first).off_diagonal() + linking_matrix(second).off_diagonal()).all()


def test_band_sum_joins_connected_diagrams(hopf, borromean):
    for d in (hopf, borromean):
        summed = band_sum(d, d)
        assert summed.is_planar()
        assert len(summed.connected_pieces()) == 1


def test_random_isotopy_is_reproducible(borromean):
    first, applied = random_isotopy(borromean, 6, random.Random(3))
    second, again = random_isotopy(borromean, 6, random.Random(3))
    assert applied == again
    assert first == second
    assert len(applied) == 6
    assert all(spec.kind in (MoveKind.R1, MoveKind.R2, MoveKind.R3) for spec in applied)
