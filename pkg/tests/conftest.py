import pytest

from ldp12.polygon import polygon_from_points

TRIANGLE = [(0, -1), (3, 2), (-1, 2)]
SQUARE = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
DIAMOND = [(1, 0), (0, 1), (-1, 0), (0, -1)]
HEXAGON = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
P2_TRIANGLE = [(1, 0), (0, 1), (-1, -1)]


@pytest.fixture
def triangle():
    return polygon_from_points(TRIANGLE)


@pytest.fixture
def square():
    return polygon_from_points(SQUARE)


@pytest.fixture
def diamond():
    return polygon_from_points(DIAMOND)


@pytest.fixture
def hexagon():
    return polygon_from_points(HEXAGON)


@pytest.fixture
def p2_triangle():
    return polygon_from_points(P2_TRIANGLE)
