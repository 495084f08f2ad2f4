import pytest

from routegraph import fixtures


@pytest.fixture
def triangle():
    return fixtures.triangle()


@pytest.fixture
def path3():
    return fixtures.path3()


@pytest.fixture
def koenigsberg():
    return fixtures.koenigsberg()


@pytest.fixture
def unit_square():
    return fixtures.unit_square()
