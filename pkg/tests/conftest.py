import pytest

from rrsplit.graph import build_graph


def complete(n):
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def empty(n):
    return build_graph(n, [])


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def p3():
    return path(3)
