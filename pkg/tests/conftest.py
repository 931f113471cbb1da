import pytest

from milnor_lib.core import parse_braid
from milnor_lib.fixtures import load_fixture

BORROMEAN_WORD = "1 -2 1 -2 1 -2"


def hopf_power(n):
    """Closure of sigma_1^(2n) on two strands, linking number n."""
    return parse_braid([1] * (2 * n), 2)


@pytest.fixture
def borromean():
    return load_fixture('borromean')


@pytest.fixture
def whitehead():
    return load_fixture('whitehead')


@pytest.fixture
def hopf():
    return load_fixture('hopf')


@pytest.fixture
def trefoil():
    return load_fixture('trefoil')


@pytest.fixture
def unlink2():
    return parse_braid("", 2)


@pytest.fixture(params=['borromean', 'whitehead', 'hopf', 'trefoil'])
def any_fixture(request):
    return load_fixture(request.param)
