from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grasscluster.element.plane_partition import PlanePartition, enumerate_partitions
from grasscluster.element.quiver import Grid, grid_vertices, standard_quiver
from grasscluster.errors import MutationAtFrozenError, NotInConeError, ParameterError
from grasscluster.space.tropical import (
    GZVector,
    TropicalPoint,
    bijection,
    cone_members,
    gz_from_x,
    inverse_bijection,
    padic_valuation,
    partition_point,
    random_tropical_point,
    rational_seed,
    trop_monodromy,
    trop_mutate_x,
    trop_potential,
    trop_rotate,
    trop_rotate_gz,
    trop_weight,
    valuation_point,
    x_from_gz,
)

CHARTS = [(2, 4), (2, 5), (3, 6)]
SAMPLE = PlanePartition([[3, 2, 2], [3, 1, 0]])


def unit_at(a, n, vertex):
    return TropicalPoint(standard_quiver(a, n), {v: int(v == vertex) for v in grid_vertices(a, n)})


def test_corner_unit_vector():
    l = gz_from_x(unit_at(3, 7, Grid(3, 4)))
    assert l.l00 == 1
    assert (l.grid == 1).all()


def test_gz_round_trip():
    pt = random_tropical_point(3, 7, seed=3)
    assert x_from_gz(gz_from_x(pt)) == pt


def test_tropical_potential_sign():
    l = GZVector(2, [[3, 0], [0, 0]])
    assert trop_potential(l) == -1
    with pytest.raises(NotInConeError):
        inverse_bijection(l)
    assert trop_potential(GZVector(2, [[2, 1], [1, 0]])) == 0


def test_trop_mutation_by_hand():
    pt = TropicalPoint.parse("sampleTropicalPoint.json")
    mutated = trop_mutate_x(pt, Grid(1, 1))
    assert mutated[Grid(1, 1)] == 1
    # ε_{(1,2),(1,1)} = 1: x + min(0, x_k)
    assert mutated[Grid(1, 2)] == 2 - 1
    # ε_{(0,0),(1,1)} = −1: x − min(0, −x_k)
    assert mutated[Grid(0, 0)] == 3
    assert mutated.mutate(Grid(1, 1)) == pt
    with pytest.raises(MutationAtFrozenError):
        pt.mutate(Grid(0, 0))


@pytest.mark.parametrize("a, n", CHARTS)
@pytest.mark.parametrize("p", [3, 5, 7])
def test_valuation_of_rational_mutation(a, n, p):
    pt = random_tropical_point(a, n, seed=a * n + p, bound=4)
    for k in standard_quiver(a, n).unfrozen:
        assert valuation_point(rational_seed(pt, p).mutate(k), p) == pt.mutate(k)


def test_padic_valuation():
    assert padic_valuation(Fraction(9, 5), 3) == 2
    assert padic_valuation(Fraction(5, 9), 3) == -2
    assert padic_valuation(7, 3) == 0
    with pytest.raises(ParameterError):
        padic_valuation(0, 3)


@pytest.mark.parametrize("a, n", CHARTS + [(3, 7), (4, 8)])
def test_rotation_two_ways(a, n):
    for seed in range(50):
        pt = random_tropical_point(a, n, seed=seed)
        assert trop_rotate(pt, "mutation") == trop_rotate(pt, "recursion"), f"seed {seed}"


@pytest.mark.slow
def test_rotation_two_ways_on_many_points(grassmannian):
    a, n = grassmannian
    for seed in range(10_000):
        pt = random_tropical_point(a, n, seed=seed)
        assert trop_rotate(pt, "mutation") == trop_rotate(pt, "recursion"), f"seed {seed}"


def test_rotation_off_the_cone_by_hand():
    l = GZVector(0, [[5, 0], [0, 0]])
    assert trop_potential(l) < 0
    expected = GZVector(0, [[0, 0], [5, 0]])
    assert trop_rotate_gz(l) == expected
    assert trop_rotate(x_from_gz(l), "mutation") == x_from_gz(expected)
    pt = random_tropical_point(2, 4, seed=1)
    assert trop_rotate(pt) == trop_rotate(pt, "mutation")


@given(st.integers(2, 4), st.integers(2, 4), st.integers(-6, 6),
       st.lists(st.integers(-6, 6), min_size=16, max_size=16))
def test_rotation_two_ways_on_gz_grids(a, b, l00, values):
    l = GZVector(l00, [values[i * b:(i + 1) * b] for i in range(a)])
    assert trop_rotate(x_from_gz(l), "mutation") == x_from_gz(trop_rotate_gz(l))


@pytest.mark.parametrize("a, n", CHARTS)
def test_rotation_has_order_n(a, n):
    pt = random_tropical_point(a, n, seed=11)
    rotated = pt
    for _ in range(n):
        rotated = trop_rotate(rotated)
    assert rotated == pt


def test_rotate_arguments():
    pt = random_tropical_point(2, 4)
    with pytest.raises(ParameterError):
        trop_rotate(pt, "sideways")
    with pytest.raises(ParameterError):
        trop_rotate(pt.mutate(Grid(1, 1)))


def test_rotation_is_eta_on_partitions():
    assert trop_rotate_gz(bijection(SAMPLE, 6)) == bijection(SAMPLE.eta(6), 6)
    assert trop_rotate(partition_point(SAMPLE, 6)) == partition_point(SAMPLE.eta(6), 6)


@given(st.integers(0, 3), st.integers(0, 40))
def test_rotation_is_eta_on_random_partitions(c, index):
    partitions = list(enumerate_partitions(2, 3, c))
    pi = partitions[index % len(partitions)]
    assert inverse_bijection(trop_rotate_gz(bijection(pi, c))) == pi.eta(c)


def test_monodromy_and_weight():
    pt = random_tropical_point(3, 6, seed=5)
    assert trop_monodromy(gz_from_x(pt)) == sum(pt.x.values())
    weight = trop_weight(pt)
    assert len(weight) == 6
    assert sum(weight) == 3 * trop_monodromy(gz_from_x(pt))


def test_weight_of_partition_point():
    assert trop_weight(partition_point(PlanePartition([[0]]), 1)) == (0, 1)
    assert trop_weight(partition_point(PlanePartition([[1]]), 1)) == (1, 0)


@pytest.mark.parametrize("abc", [(1, 1, 2), (2, 2, 1), (2, 2, 2), (2, 3, 1), (2, 3, 2), (3, 3, 1)])
def test_cone_is_partitions(abc):
    a, b, c = abc
    cone = set(cone_members(a, b, c))
    assert cone == {bijection(pi, c) for pi in enumerate_partitions(a, b, c)}
    with pytest.raises(ParameterError):
        list(cone_members(a, b, -1))


def test_json_round_trip():
    pt = random_tropical_point(2, 5, seed=2)
    assert TropicalPoint.from_json(pt.to_json()) == pt
    moved = pt.mutate(Grid(1, 1))
    assert "quiver" in moved.to_json()
    assert TropicalPoint.from_json(moved.to_json()) == moved
    l = gz_from_x(pt)
    assert GZVector.from_json(l.to_json()) == l
