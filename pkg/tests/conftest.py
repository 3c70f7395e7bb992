import pytest

from slmatch import build_graph

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),      # outer cycle
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),      # inner pentagram
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),      # spokes
]


@pytest.fixture
def petersen():
    return build_graph(10, PETERSEN_EDGES)


@pytest.fixture
def path3():
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def cycle6():
    return build_graph(6, [(i, (i + 1) % 6) for i in range(6)])
