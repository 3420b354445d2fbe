import pytest

from graceful import Graph, VertexColoring


@pytest.fixture
def fig1():
    """5-vertex, 7-edge graph admitting a graceful 5-coloring; vertex 2 is
    adjacent to every other vertex, so its square is K_5."""
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3), (2, 4)])
    f = VertexColoring((2, 4, 1, 5, 3), 5)
    return g, f
