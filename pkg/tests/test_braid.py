import pytest

from milnor_lib.core.braid import braid_permutation, parse_braid, parse_braid_word, thread_braid
from milnor_lib.core.errors import BraidError
from milnor_lib.invariants import lk, writhe_component

from conftest import BORROMEAN_WORD


def test_parse_braid_word():
    assert parse_braid_word("1 -2, 1") == [1, -2, 1]
    assert parse_braid_word("  ") == []


@pytest.mark.parametrize("text", ["1 x", "0", "1.5"])
def test_bad_braid_words(text):
    with pytest.raises(BraidError):
        parse_braid_word(text)


def test_generator_out_of_range():
    with pytest.raises(BraidError):
        parse_braid("3", 3)
    with pytest.raises(BraidError):
        parse_braid("-1", 1)


def test_no_strands():
    with pytest.raises(BraidError):
        parse_braid("", 0)


def test_thread_braid_signs():
    passages, signs, final = thread_braid([1, -1], ['a', 'b'], 't')
    assert signs == {('t', 0): 1, ('t', 1): -1}
    assert passages['a'] == [(('t', 0), 'under'), (('t', 1), 'under')]
    assert passages['b'] == [(('t', 0), 'over'), (('t', 1), 'over')]
    assert final == ['a', 'b']


def test_permutation():
    assert braid_permutation([1], 2) == [2, 1]
    assert braid_permutation([1, 2], 3) == [2, 3, 1]
    assert braid_permutation([1, -1], 2) == [1, 2]


def test_hopf_closure(hopf):
    d = parse_braid("1 1", 2)
    assert d.component_count == 2
    assert len(d.crossings) == 2
    assert lk(d, 1, 2) == 1
    assert d.is_isomorphic(hopf)


def test_trefoil_closure(trefoil):
    d = parse_braid("1 1 1", 2)
    assert d.component_count == 1
    assert writhe_component(d, 1) == 3
    assert d.is_isomorphic(trefoil)


def test_empty_word_is_unlink():
    d = parse_braid("", 3)
    assert d.component_count == 3
    assert d.crossings == ()


def test_borromean_closure(borromean):
    assert parse_braid(BORROMEAN_WORD, 3).is_isomorphic(borromean)


def test_whitehead_closure(whitehead):
    assert parse_braid("1 1 -2 1 -2", 3).is_isomorphic(whitehead)


def test_list_input():
    assert parse_braid([1, 1], 2) == parse_braid("1 1", 2)
