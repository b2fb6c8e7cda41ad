import pytest
from hypothesis import given, strategies as st

from grasscluster.element.quiver import (
    Grid,
    Primed,
    Quiver,
    extended_quiver,
    frozen_index,
    frozen_vertex,
    optimized_quiver,
    parse_vertex,
    rho_sequence,
    rotate_quiver,
    rotation_permutation,
    standard_quiver,
)
from grasscluster.errors import InputFormatError, MutationAtFrozenError, ParameterError, VertexNotFoundError

Q24 = standard_quiver(2, 4)
Q36 = standard_quiver(3, 6)


def test_vertex_count_and_frozen():
    assert len(Q36) == 1 + 3 * 3
    assert set(Q36.frozen_vertices) == {Grid(0, 0), Grid(1, 3), Grid(2, 3), Grid(3, 3), Grid(3, 1), Grid(3, 2)}
    assert set(Q36.unfrozen) == {Grid(i, j) for i in (1, 2) for j in (1, 2)}


def test_standard_epsilon():
    assert Q24.epsilon(Grid(0, 0), Grid(1, 1)) == -1
    assert Q24.epsilon(Grid(1, 2), Grid(1, 1)) == 1
    assert Q24.epsilon(Grid(2, 1), Grid(1, 1)) == 1
    assert Q24.epsilon(Grid(2, 2), Grid(1, 1)) == -1
    assert Q24.epsilon(Grid(1, 1), Grid(0, 0)) == 1


def test_mutation_by_hand():
    mutated = Q24.mutate(Grid(1, 1))
    assert mutated.epsilon(Grid(0, 0), Grid(1, 2)) == -1
    assert mutated.epsilon(Grid(1, 1), Grid(0, 0)) == -1
    assert mutated.epsilon(Grid(0, 0), Grid(2, 1)) == 0


def test_three_cycle_mutation():
    Q = Quiver.from_arrows("ABC", [], [("A", "B"), ("B", "C"), ("C", "A")])
    mutated = Q.mutate("B")
    assert sorted(mutated.arrows()) == [("B", "A", 1), ("C", "B", 1)]


def test_mutation_errors():
    with pytest.raises(MutationAtFrozenError):
        Q24.mutate(Grid(0, 0))
    with pytest.raises(VertexNotFoundError):
        Q24.mutate(Grid(5, 5))


@given(st.lists(st.sampled_from(sorted(Q36.unfrozen)), max_size=6), st.sampled_from(sorted(Q36.unfrozen)))
def test_mutation_is_involution(sequence, k):
    Q = Q36.mutate_sequence(sequence)
    assert Q.mutate(k).mutate(k) == Q
    assert (Q.matrix == -Q.matrix.T).all()


def test_frozen_labels():
    assert [frozen_vertex(2, 4, i) for i in range(1, 5)] == [Grid(1, 2), Grid(2, 2), Grid(2, 1), Grid(0, 0)]
    assert all(frozen_index(3, 7, frozen_vertex(3, 7, i)) == i for i in range(1, 8))
    with pytest.raises(ParameterError):
        frozen_vertex(2, 4, 5)


def test_rho_sequence():
    assert rho_sequence(2, 4) == [Grid(1, 1)]
    assert len(rho_sequence(3, 7)) == 6
    assert rho_sequence(3, 6)[:2] == [Grid(2, 1), Grid(1, 1)]


@pytest.mark.parametrize("a, n", [(2, 4), (2, 5), (3, 6), (3, 7)])
def test_rotation_returns_standard_quiver(a, n):
    assert rotate_quiver(a, n) == standard_quiver(a, n)
    sigma = rotation_permutation(a, n)
    assert all(sigma[v] == v for v in standard_quiver(a, n).unfrozen)


@pytest.mark.parametrize("a, n", [(a, n) for n in range(2, 9) for a in range(1, min(4, n - 1) + 1)])
def test_quiver_suite(a, n):
    Q = standard_quiver(a, n)
    assert rotate_quiver(a, n) == Q
    assert rotate_quiver(a, n, extended=True) == extended_quiver(a, n)
    assert Q.is_optimized(Grid(0, 0))
    assert Q.is_optimized(Grid(a, n - a))
    assert Q.uf_rank() == len(Q.unfrozen) == (a - 1) * (n - a - 1)
    for k in Q.unfrozen:
        assert Q.mutate(k).mutate(k) == Q


def test_rotation_permutation_is_a_fresh_dict():
    sigma = rotation_permutation(3, 6)
    sigma.clear()
    assert rotation_permutation(3, 6) != {}


def test_rotation_prefers_label_shift():
    sigma = rotation_permutation(2, 4)
    assert all(sigma[frozen_vertex(2, 4, i)] == frozen_vertex(2, 4, i % 4 + 1) for i in range(1, 5))


def test_extended_rotation():
    assert rotate_quiver(2, 5, extended=True) == extended_quiver(2, 5)


@pytest.mark.parametrize("a, n", [(2, 4), (2, 5), (3, 6)])
def test_optimized_quiver(a, n):
    for i in range(1, n + 1):
        assert optimized_quiver(a, n, i).is_optimized(frozen_vertex(a, n, i))


def test_standard_quiver_not_optimized_everywhere():
    assert not Q36.is_optimized(Grid(1, 3))
    with pytest.raises(ParameterError):
        Q36.is_optimized(Grid(1, 1))


def test_uf_rank():
    assert Q24.uf_rank() == 1
    assert Q36.uf_rank() == 4


def test_extended_quiver():
    E = extended_quiver(3, 6)
    assert len(E.frozen) == 12
    E24 = extended_quiver(2, 4)
    assert sum(1 for u, v, m in E24.arrows() if isinstance(v, Primed)) == 4


def test_parameter_errors():
    with pytest.raises(ParameterError):
        standard_quiver(3, 3)
    with pytest.raises(ParameterError):
        standard_quiver(0, 4)


def test_parse_vertex():
    assert parse_vertex("(2, 3)") == Grid(2, 3)
    assert parse_vertex("4'") == Primed(4)
    assert parse_vertex("x") == "x"
    with pytest.raises(InputFormatError):
        parse_vertex("")


def test_json_round_trip():
    Q = Q36.mutate(Grid(1, 1))
    assert Quiver.from_json(Q.to_json()) == Q


def test_parse_text_file():
    assert Quiver.parse("sampleQuiver.txt") == standard_quiver(2, 5)
