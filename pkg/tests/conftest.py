import pytest

from util import cycle, path


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def p4():
    return path(4)
