from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grasscluster.element.matrix import RatMatrix, plucker
from grasscluster.element.quiver import Grid, grid_vertices, standard_quiver
from grasscluster.element.seed import (
    ASeed,
    XSeed,
    all_labels,
    mutate_a,
    mutate_x,
    p_map,
    plucker_label,
    rotated_label,
)
from grasscluster.errors import DegenerateSeedError, MutationAtFrozenError, ParameterError, VertexNotFoundError

Q24 = standard_quiver(2, 4)
M = RatMatrix([[1, 1, 1, 1], [0, 1, 2, 3]])

positive_values = st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5)


def plucker_seed(a, n, matrix):
    Q = standard_quiver(a, n)
    return ASeed(Q, {v: plucker(matrix, plucker_label(a, n, v)) for v in Q.vertices})


def test_labels_of_small_grid():
    assert all_labels(2, 4) == {
        Grid(0, 0): (3, 4), Grid(1, 1): (2, 4), Grid(1, 2): (1, 4), Grid(2, 1): (2, 3), Grid(2, 2): (1, 2)}


@pytest.mark.parametrize("a, n", [(2, 5), (3, 6), (3, 7), (4, 8)])
def test_labels_distinct_and_sized(a, n):
    labels = all_labels(a, n)
    assert len(set(labels.values())) == len(labels)
    assert all(len(label) == a for label in labels.values())


def test_rotated_label():
    assert rotated_label(2, 4, Grid(0, 0)) == (2, 3)
    assert rotated_label(2, 4, Grid(2, 2)) == (1, 4)
    with pytest.raises(ParameterError):
        plucker_label(2, 4, Grid(3, 1))


def test_exchange_relation_gives_plucker():
    seed = plucker_seed(2, 4, M)
    mutated = mutate_a(seed, Grid(1, 1))
    assert mutated[Grid(1, 1)] == plucker(M, (1, 3))
    assert mutated.quiver == Q24.mutate(Grid(1, 1))


def test_x_mutation_by_hand():
    X = XSeed(Q24, {Grid(0, 0): 2, Grid(1, 1): 3, Grid(1, 2): Fraction(1, 6), Grid(2, 1): Fraction(1, 2),
                    Grid(2, 2): 2})
    mutated = mutate_x(X, Grid(1, 1))
    assert mutated[Grid(1, 1)] == Fraction(1, 3)
    assert mutated[Grid(1, 2)] == Fraction(2, 3)
    assert mutated[Grid(0, 0)] == Fraction(3, 2)
    assert mutated.mutate(Grid(1, 1)) == X


@given(st.lists(positive_values, min_size=5, max_size=5), st.sampled_from([Grid(1, 1)]))
def test_p_map_commutes_with_mutation(values, k):
    seed = ASeed(Q24, dict(zip(Q24.vertices, values)))
    assert p_map(seed.mutate(k)) == p_map(seed).mutate(k)


@given(st.lists(positive_values, min_size=10, max_size=10),
       st.lists(st.sampled_from([Grid(1, 1), Grid(1, 2), Grid(2, 1), Grid(2, 2)]), min_size=1, max_size=4))
def test_p_map_commutes_along_sequences(values, sequence):
    Q = standard_quiver(3, 6)
    seed = ASeed(Q, dict(zip(Q.vertices, values)))
    assert p_map(seed.mutate_sequence(sequence)) == p_map(seed).mutate_sequence(sequence)


def test_seed_errors():
    values = {v: 1 for v in grid_vertices(2, 4)}
    with pytest.raises(DegenerateSeedError):
        ASeed(Q24, {**values, Grid(1, 1): 0})
    with pytest.raises(VertexNotFoundError):
        ASeed(Q24, {Grid(0, 0): 1})
    with pytest.raises(MutationAtFrozenError):
        ASeed(Q24, values).mutate(Grid(0, 0))
    with pytest.raises(VertexNotFoundError):
        ASeed(Q24, values)[Grid(4, 4)]


def test_x_mutation_at_minus_one():
    values = {v: 1 for v in grid_vertices(2, 4)}
    values[Grid(1, 1)] = -1
    with pytest.raises(DegenerateSeedError):
        XSeed(Q24, values).mutate(Grid(1, 1))


def test_json_round_trip():
    seed = plucker_seed(3, 6, RatMatrix([[1, 0, 0, 1, 2, 3], [0, 1, 0, 1, 3, 7], [0, 0, 1, 1, 4, 5]]))
    assert ASeed.from_json(seed.to_json()) == seed
