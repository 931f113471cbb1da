from milnor_lib.core import MoveKind, MoveSpec, apply_move, parse_braid
from milnor_lib.invariants import expand, lk, presentation, preferred_longitude, raw_longitude
from milnor_lib.invariants.milnor import MilnorEngine
from milnor_lib.utils.words import FreeWord


def test_unknot():
    d = parse_braid("", 1)
    p = presentation(d)
    assert len(p.generators) == 1
    assert p.relations == []
    assert len(raw_longitude(d, p, 1)) == 0
    assert len(preferred_longitude(d, p, 1)) == 0


def test_borromean_shape(borromean):
    p = presentation(borromean)
    assert len(p.generators) == 6
    assert len(p.relations) == 6
    assert sorted(p.base.values()) == [1, 5, 9]
    assert len(raw_longitude(borromean, p, 3)) == 2


def test_hopf_shape(hopf):
    p = presentation(hopf)
    assert len(p.generators) == 2
    assert len(p.relations) == 2


def test_relations_are_local(borromean):
    p = presentation(borromean)
    for relation in p.relations:
        crossing = borromean.crossing(relation.crossing)
        assert relation.over == p.strand_of[crossing.over_in] == p.strand_of[crossing.over_out]
        assert relation.source == p.strand_of[crossing.under_in]
        assert relation.result == p.strand_of[crossing.under_out]
        assert relation.sign == crossing.sign


def test_kink_longitude():
    d = apply_move(parse_braid("", 1), MoveSpec(MoveKind.R1, (1,), 1))
    p = presentation(d)
    assert len(raw_longitude(d, p, 1)) == 1
    assert preferred_longitude(d, p, 1) == FreeWord()
    engine = MilnorEngine(d, wirtinger=p)
    for depth in (1, 2, 3):
        assert engine.longitude_word(1, depth) == FreeWord()


def test_degree_one_terms_are_linking_numbers(any_fixture):
    engine = MilnorEngine(any_fixture)
    n = any_fixture.component_count
    for j in range(1, n + 1):
        series = expand(engine.longitude_word(j, 2), n, 1)
        assert series.coefficient((j,)) == 0
        for i in range(1, n + 1):
            if i != j:
                assert series.coefficient((i,)) == lk(any_fixture, i, j)


def test_relations_hold_in_nilpotent_quotient(any_fixture):
    engine = MilnorEngine(any_fixture)
    p = engine.wirtinger
    n = any_fixture.component_count
    bases = set(p.base.values())
    for depth in (2, 3):
        for relation in p.relations:
            if relation.result in bases:
                continue
            over = engine.meridian_rewrite(relation.over, depth)
            if relation.sign < 0:
                over = over.inverse()
            lhs = engine.meridian_rewrite(relation.result, depth)
            rhs = over * engine.meridian_rewrite(relation.source, depth) * over.inverse()
            assert expand(lhs, n, depth - 1) == expand(rhs, n, depth - 1)


def test_rotated_base_arcs(borromean):
    rotated = {i: borromean.component_arcs(i)[2] for i in (1, 2, 3)}
    p = presentation(borromean, rotated)
    for i, arc in rotated.items():
        assert p.base[i] == p.strand_of[arc]
