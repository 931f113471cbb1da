"""
Randomized invariance checks.

Random diagrams come from braid closures; random isotopies come from the
move driver seeded by hypothesis.
"""

import functools
import random

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from milnor_lib.core import MoveKind, MoveSpec, apply_move, parse_braid, parse_pd, random_isotopy
from milnor_lib.core.errors import MoveError
from milnor_lib.core.moves import band_sum
from milnor_lib.fixtures import load_fixture
from milnor_lib.invariants import lk, lk_symmetrized, linking_matrix, milnor_table, mu_bar, oracle_mu
from milnor_lib.invariants.milnor import MilnorEngine, cable, check_relations
from milnor_lib.utils.sequences import all_sequences

SLOW = settings(deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])


@functools.lru_cache(maxsize=None)
def fixture_table(name, k):
    return milnor_table(load_fixture(name), k, force=True)


@st.composite
def braid_words(draw, min_strands=2, max_strands=3, max_length=8):
    strands = draw(st.integers(min_value=min_strands, max_value=max_strands))
    generator = st.integers(min_value=1, max_value=strands - 1)
    letters = draw(st.lists(st.tuples(generator, st.sampled_from([1, -1])), max_size=max_length))
    return [g * e for g, e in letters], strands


@st.composite
def links(draw, **kwargs):
    letters, strands = draw(braid_words(**kwargs))
    return parse_braid(letters, strands)


@st.composite
def linked_sequences(draw):
    diagram = draw(links())
    n = diagram.component_count
    assume(n >= 2)
    length = draw(st.integers(min_value=2, max_value=4))
    sequence = tuple(draw(st.lists(st.integers(min_value=1, max_value=n),
                                   min_size=length, max_size=length)))
    return diagram, sequence


def invert(letters):
    return [-x for x in reversed(letters)]


@st.composite
def pure_braids(draw, strands=3):
    """w sigma_i^2 w^-1 for a short random w."""
    conjugator, _ = draw(braid_words(min_strands=strands, max_strands=strands, max_length=2))
    i = draw(st.integers(min_value=1, max_value=strands - 1))
    e = draw(st.sampled_from([1, -1]))
    return conjugator + [i * e, i * e] + invert(conjugator)


def delta_sites(diagram):
    """Arc triples (left, middle, right) of coherent neighbours across two different faces."""
    pairs = {}
    for number, face in enumerate(diagram.faces()):
        lefts = [a for a, dr in face if dr < 0]
        rights = [a for a, dr in face if dr > 0]
        for l in lefts:
            for r in rights:
                if l != r:
                    pairs.setdefault((l, r), set()).add(number)
    return sorted((a, b, c) for (a, b), first in pairs.items() for (b2, c), second in pairs.items()
                  if b == b2 and len({a, b, c}) == 3 and len(first | second) > 1)


@pytest.mark.parametrize("name", ['borromean', 'whitehead', 'hopf', 'trefoil'])
@settings(SLOW, max_examples=100)
@given(seed=st.integers(min_value=0, max_value=2 ** 32 - 1), length=st.integers(min_value=1, max_value=10))
def test_reidemeister_moves_keep_milnor_table(name, seed, length):
    diagram = load_fixture(name)
    moved, _ = random_isotopy(diagram, length, random.Random(seed))
    assert milnor_table(moved, 4, force=True) == fixture_table(name, 4)
    assert linking_matrix(moved).off_diagonal().tolist() == linking_matrix(diagram).off_diagonal().tolist()


@settings(SLOW, max_examples=50)
@given(linked_sequences())
def test_oracle_agrees_with_engine(case):
    diagram, sequence = case
    assert oracle_mu(diagram, sequence) == MilnorEngine(diagram).mu(sequence)


@given(links())
def test_linking_numbers_are_symmetric(diagram):
    n = diagram.component_count
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert lk(diagram, i, j) == lk(diagram, j, i) == lk_symmetrized(diagram, i, j)


@settings(SLOW, max_examples=30)
@given(links(min_strands=3, max_strands=3), st.data())
def test_self_crossing_change_keeps_distinct_index_invariants(diagram, data):
    selfs = [c.id for c in diagram.crossings if diagram.is_self_crossing(c.id)]
    assume(selfs)
    crossing_id = data.draw(st.sampled_from(selfs))
    moved = apply_move(diagram, MoveSpec(MoveKind.SELF_CROSSING_CHANGE, (crossing_id,)))
    n = diagram.component_count
    for length in range(2, min(n, 3) + 1):
        for sequence in all_sequences(n, length):
            if len(set(sequence)) == length:
                assert mu_bar(moved, sequence) == mu_bar(diagram, sequence)


@settings(SLOW, max_examples=30)
@given(links(min_strands=3, max_strands=3), st.data())
def test_delta_move_keeps_linking_matrix(diagram, data):
    sites = delta_sites(diagram)
    assume(sites)
    site = data.draw(st.sampled_from(sites))
    moved = apply_move(diagram, MoveSpec(MoveKind.DELTA_MOVE, site))
    assert moved.component_count == diagram.component_count
    assert moved.is_planar()
    assert linking_matrix(moved).off_diagonal().tolist() == linking_matrix(diagram).off_diagonal().tolist()


def permutation_cycles(letters, strands):
    """Number of cycles of the permutation a braid word induces on its strands."""
    position = list(range(strands))
    for letter in letters:
        i = abs(letter) - 1
        position[i], position[i + 1] = position[i + 1], position[i]
    seen, cycles = set(), 0
    for start in range(strands):
        if start in seen:
            continue
        cycles += 1
        while start not in seen:
            seen.add(start)
            start = position[start]
    return cycles


@given(braid_words(max_strands=5, max_length=12))
def test_closure_has_one_component_per_cycle(word):
    letters, strands = word
    assert parse_braid(letters, strands).component_count == permutation_cycles(letters, strands)


@settings(SLOW, max_examples=100)
@given(links(max_strands=4, max_length=10))
def test_pd_round_trip(diagram):
    again = parse_pd(diagram.to_pd())
    assert again.is_isomorphic(diagram)
    assert again.is_planar()


@settings(SLOW, max_examples=60)
@given(links(max_length=6), links(max_length=6))
def test_band_sum_is_planar_and_adds_linking_numbers(first, second):
    assume(first.component_count == second.component_count)
    summed = band_sum(first, second)
    assert summed.is_planar()
    assert summed.component_count == first.component_count
    assert (linking_matrix(summed).off_diagonal()
            == linking_matrix(first).off_diagonal() + linking_matrix(second).off_diagonal()).all()


@settings(SLOW, max_examples=60)
@given(links(min_strands=3, max_strands=4, max_length=6), st.data())
def test_accepted_delta_moves_are_planar(diagram, data):
    arcs = [a.id for a in diagram.arcs]
    site = tuple(data.draw(st.permutations(arcs))[:3])
    try:
        moved = apply_move(diagram, MoveSpec(MoveKind.DELTA_MOVE, site))
    except MoveError:
        return
    assert moved.is_planar()
    assert moved.component_count == diagram.component_count


@settings(SLOW, max_examples=25)
@given(pure_braids(), pure_braids())
def test_algebraically_split_triple_numbers_are_exact(first, second):
    commutator = first + second + invert(first) + invert(second)
    diagram = parse_braid(commutator, 3)
    assert diagram.component_count == 3
    table = milnor_table(diagram, 3)

    assert all(e.mu == 0 for s, e in table.at_length(2).items() if s[0] != s[1])
    first_length = table.first_nonvanishing()
    assert first_length is None or first_length == 3

    value = table.entry((1, 2, 3))
    assert value.delta == 0 and value.exact
    assert table.entry((2, 3, 1)).mu == table.entry((3, 1, 2)).mu == value.mu
    for swapped in ((1, 3, 2), (2, 1, 3), (3, 2, 1)):
        assert table.entry(swapped).mu == -value.mu
    assert check_relations(table) == []


@settings(SLOW, max_examples=30)
@given(links(min_strands=2, max_strands=2, max_length=6))
def test_cabling_matches_repeated_index(diagram):
    assume(diagram.component_count == 2)
    cabled, sequence = cable(diagram, (1, 1, 2))
    assert sequence == (1, 3, 2)
    assert mu_bar(cabled, sequence) == mu_bar(diagram, (1, 1, 2))
