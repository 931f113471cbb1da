import pytest
from hypothesis import given, strategies as st

from milnor_lib.utils.sequences import all_sequences, deletions, gcd_all, rotations, shuffles
from milnor_lib.utils.words import FreeWord

letters = st.tuples(st.integers(min_value=1, max_value=3), st.sampled_from([1, -1]))


def test_free_reduction():
    word = FreeWord([(1, 1), (2, 1), (2, -1), (1, -1), (3, 1)])
    assert word.letters == ((3, 1),)
    assert FreeWord.power(2, -3).letters == ((2, -1),) * 3
    assert FreeWord.generator(1, 0) == FreeWord()


def test_bad_exponent():
    with pytest.raises(ValueError):
        FreeWord([(1, 2)])


def test_substitute():
    word = FreeWord([(1, 1), (2, -1)])
    images = {1: FreeWord([(3, 1), (4, 1)]), 2: FreeWord([(4, 1)])}
    assert word.substitute(images).letters == ((3, 1),)


@given(st.lists(letters, max_size=10))
def test_inverse_cancels(raw):
    word = FreeWord(raw)
    assert len(word * word.inverse()) == 0
    assert word.inverse().inverse() == word


def test_gcd_all():
    assert gcd_all([]) == 0
    assert gcd_all([0, 0]) == 0
    assert gcd_all([0, 4, -6]) == 2


def test_rotations():
    assert rotations((1, 2, 3)) == [(2, 3, 1), (3, 1, 2)]
    assert rotations((1,)) == []


def test_deletions():
    assert deletions((1, 2, 3)) == [(1, 2), (1, 3), (2, 3)]
    assert deletions((1, 2)) == []
    assert deletions((1, 1, 2)) == [(1, 1), (1, 2)]


def test_shuffles():
    assert sorted(shuffles((1,), (2,))) == [(1, 2), (2, 1)]
    assert shuffles((1,), (1, 2)).count((1, 1, 2)) == 2
    assert len(shuffles((1, 2), (3, 4))) == 6


def test_all_sequences():
    assert all_sequences(2, 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
