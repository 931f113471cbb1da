import pytest

from milnor_lib.core import Config, parse_braid
from milnor_lib.core.errors import InvariantError, OracleBudgetError
from milnor_lib.invariants import oracle_mu
from milnor_lib.invariants.milnor import MilnorEngine
from milnor_lib.utils.sequences import all_sequences


def test_oracle_examples(borromean, whitehead):
    assert oracle_mu(borromean, (1, 2, 3)) == 1
    assert oracle_mu(parse_braid("1 1", 2), (1, 2)) == 1
    assert oracle_mu(whitehead, (1, 1, 2, 2)) == 1


def test_oracle_unlink():
    assert oracle_mu(parse_braid("", 2), (1, 2)) == 0


def test_oracle_matches_engine(any_fixture):
    engine = MilnorEngine(any_fixture)
    n = any_fixture.component_count
    max_length = 4 if n <= 2 else 3
    for length in range(2, max_length + 1):
        for sequence in all_sequences(n, length):
            assert oracle_mu(any_fixture, sequence) == engine.mu(sequence)


def test_oracle_budget(borromean):
    config = Config()
    config.oracle['max_sweeps'] = 1
    with pytest.raises(OracleBudgetError):
        oracle_mu(borromean, (1, 2, 3), config)


def test_oracle_sequence_validation(hopf):
    with pytest.raises(InvariantError):
        oracle_mu(hopf, (1,))
