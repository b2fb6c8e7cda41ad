import pytest

from grasscluster.correspondence.plabic_to_quiver import PlabicToQuiverCorrespondence
from grasscluster.element.plabic.plabic_graph import standard_graph
from grasscluster.element.quiver import Grid


@pytest.mark.parametrize("a, n", [(2, 5), (3, 6), (3, 7)])
def test_faces_and_vertices_correspond(a, n):
    correspondence = PlabicToQuiverCorrespondence(standard_graph(a, n))
    assert correspondence.test_correspondence(seed=4) == (True, True, True, True, True)


def test_square_faces_include_corner():
    correspondence = PlabicToQuiverCorrespondence(standard_graph(3, 7))
    assert Grid(1, 1) in correspondence.square_faces()


def test_forward_backward():
    G = standard_graph(2, 4)
    correspondence = PlabicToQuiverCorrespondence(G, debug=True)
    face = correspondence.backward(Grid(1, 1))
    assert correspondence.forward(face) == Grid(1, 1)
    assert G.dominating_sets[face] == {2, 4}
