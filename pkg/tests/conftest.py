import pytest

from frieze import Triangulation, frieze_from_triangulation


@pytest.fixture
def hexagon_fan():
    """The hexagon triangulation with diagonals (2,4), (2,5), (2,6)."""
    return Triangulation(6, [(2, 4), (2, 5), (2, 6)])


@pytest.fixture
def hexagon_frieze(hexagon_fan):
    return frieze_from_triangulation(hexagon_fan)
