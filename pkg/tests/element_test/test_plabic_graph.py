import pytest

from grasscluster.correspondence.plabic_to_quiver import PlabicToQuiverCorrespondence
from grasscluster.element.color import VertexColor
from grasscluster.element.matrix import random_generic_matrix
from grasscluster.element.plabic.plabic_graph import (
    PlabicGraph,
    bivalent_whites,
    contract_expand,
    faces,
    is_reduced,
    label_mutation,
    outer_face,
    quiver_of,
    rho_schedule_labels,
    square_move,
    standard_graph,
)
from grasscluster.element.quiver import Grid, grid_vertices, standard_quiver
from grasscluster.element.seed import all_labels, plucker_label, rotated_label
from grasscluster.errors import (
    InvariantViolationError,
    MoveNotApplicableError,
    MutationAtFrozenError,
    VertexNotFoundError,
)

STANDARD = [(1, 4), (2, 4), (2, 5), (2, 7), (3, 6), (3, 7)]


def named_sets(G):
    return {G.face_name(f): G.dominating_sets[f] for f in G.faces}


def test_face_count():
    G = standard_graph(3, 7)
    assert len(faces(G)) == 1 + 3 * 4
    assert outer_face(G).kind == "outer"
    assert outer_face(G) not in faces(G)


@pytest.mark.parametrize("a, n", STANDARD)
def test_faces_named_by_grid(a, n):
    G = standard_graph(a, n)
    assert set(G.face_names().values()) == set(grid_vertices(a, n))
    for face, name in G.face_names().items():
        assert G.dominating_sets[face] == frozenset(plucker_label(a, n, name))


def test_top_face_of_small_graph():
    G = standard_graph(2, 4)
    assert G.dominating_sets[G.find_face(Grid(0, 0))] == {3, 4}
    assert G.find_face((3, 4)) == G.find_face(Grid(0, 0))
    with pytest.raises(VertexNotFoundError):
        G.find_face(Grid(5, 5))


@pytest.mark.parametrize("a, n", STANDARD)
def test_quiver_of_standard_graph(a, n):
    G = standard_graph(a, n)
    assert is_reduced(G)
    assert quiver_of(G) == standard_quiver(a, n)


def test_boundary_faces_are_frozen():
    G = standard_graph(3, 6)
    frozen = {G.face_name(f) for f in G.faces if f.is_boundary}
    assert frozen == set(standard_quiver(3, 6).frozen)


@pytest.mark.parametrize("a, n", [(2, 5), (3, 6), (3, 7)])
def test_square_move_is_mutation(a, n):
    G = standard_graph(a, n)
    moved = square_move(G, Grid(1, 1))
    assert is_reduced(moved)
    assert quiver_of(moved) == standard_quiver(a, n).mutate(Grid(1, 1))
    before, after = named_sets(G), named_sets(moved)
    assert after[Grid(1, 1)] != before[Grid(1, 1)]
    assert all(after[v] == before[v] for v in before if v != Grid(1, 1))
    assert all(len(s) == a for s in after.values())


@pytest.mark.parametrize("a, n", [(2, 5), (3, 7)])
def test_square_move_twice_restores_sets(a, n):
    G = standard_graph(a, n)
    twice = square_move(square_move(G, Grid(1, 1)), Grid(1, 1))
    assert named_sets(twice) == named_sets(G)


def test_square_move_matches_label_mutation():
    a, n = 3, 7
    G = square_move(standard_graph(a, n), Grid(1, 1))
    expected = label_mutation(standard_quiver(a, n), all_labels(a, n), Grid(1, 1))
    assert tuple(sorted(named_sets(G)[Grid(1, 1)])) == expected


def test_square_move_not_applicable():
    G = standard_graph(3, 6)
    with pytest.raises(MoveNotApplicableError):
        square_move(G, Grid(0, 0))
    with pytest.raises(MoveNotApplicableError):
        contract_expand(G, "b1")


@pytest.mark.parametrize("a, n", [(3, 6), (3, 7), (4, 8)])
def test_contract_expand_keeps_quiver(a, n):
    G = standard_graph(a, n)
    whites = bivalent_whites(G)
    assert whites
    for w in whites:
        H = contract_expand(G, w)
        assert is_reduced(H)
        assert quiver_of(H) == quiver_of(G)
        assert named_sets(H) == named_sets(G)


def test_label_mutation_errors():
    Q = standard_quiver(3, 6)
    with pytest.raises(MutationAtFrozenError):
        label_mutation(Q, all_labels(3, 6), Grid(0, 0))


@pytest.mark.parametrize("a, n", [(2, 5), (3, 7)])
def test_rho_schedule_on_labels(a, n):
    labels, Q = rho_schedule_labels(a, n)
    for v in standard_quiver(a, n).unfrozen:
        assert labels[v] == rotated_label(a, n, v)
    assert set(labels.values()) == {rotated_label(a, n, v) for v in grid_vertices(a, n)}


def test_invalid_graphs():
    with pytest.raises(InvariantViolationError):
        PlabicGraph(1, 2, {"b1": ("p1", "p2")}, {"b1": VertexColor.BLACK})
    with pytest.raises(InvariantViolationError):
        PlabicGraph(1, 3, {"w1": ("p1", "p2")}, {"w1": VertexColor.WHITE})


def test_json_round_trip():
    G = square_move(standard_graph(3, 6), Grid(1, 1))
    H = PlabicGraph.from_json(G.to_json())
    assert H.rotation == G.rotation
    assert named_sets(H) == named_sets(G)


def test_dot_export():
    dot = standard_graph(2, 4).to_dot()
    assert dot.startswith("graph plabic {")
    assert '"p1"' in dot
    assert dot.rstrip().endswith("}")


def test_exchange_on_random_point():
    G = standard_graph(3, 6)
    M = random_generic_matrix(3, 6, seed=9)
    assert PlabicToQuiverCorrespondence(G).exchange_holds(Grid(1, 1), M)
