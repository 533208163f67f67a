import pytest

from clustercolor.generators import _from_coordinates
from clustercolor.plane import PlaneGraph


def triangle() -> PlaneGraph:
    return PlaneGraph(3, [[1, 2], [2, 0], [0, 1]], (1, 0))


def k4() -> PlaneGraph:
    # outer triangle 0,1,2 with 3 inside
    return _from_coordinates([(0, 0), (4, 0), (2, 4), (2, 1)],
                             [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3)])


def cycle(n: int) -> PlaneGraph:
    return PlaneGraph(n, [[(i + 1) % n, (i - 1) % n] for i in range(n)], (1, 0))


def wheel(n: int) -> PlaneGraph:
    """Rim 0..n-1 on a circle, hub n."""
    import math
    pts = [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)] + [(0.0, 0.0)]
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return _from_coordinates(pts, edges)


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture
def K4():
    return k4()
