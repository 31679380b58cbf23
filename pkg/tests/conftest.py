import pytest

from sdcyclic import find_irreducible


@pytest.fixture(scope="session")
def f3():
    return find_irreducible(3, 1)


@pytest.fixture(scope="session")
def f9():
    return find_irreducible(3, 2)


@pytest.fixture(scope="session")
def f5():
    return find_irreducible(5, 1)


@pytest.fixture(scope="session")
def f25():
    return find_irreducible(5, 2)


@pytest.fixture(scope="session")
def f7():
    return find_irreducible(7, 1)
