import pytest

from coconvex import convex_hull, make_coconvex, make_cone


@pytest.fixture
def unit_square():
    return convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture
def quadrant():
    return make_cone([(1, 0), (0, 1)])


@pytest.fixture
def corner_triangle(quadrant):
    """Quadrant with the corner below x + y = 1 removed; region volume 1/2."""
    K = convex_hull([(1, 0), (0, 1)], rays=quadrant.rays)
    return make_coconvex(quadrant, K)


@pytest.fixture
def octant():
    return make_cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


@pytest.fixture
def corner_simplex(octant):
    """Octant minus the corner simplex below x + y + z = 1; region volume 1/6."""
    K = convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1)], rays=octant.rays)
    return make_coconvex(octant, K)
