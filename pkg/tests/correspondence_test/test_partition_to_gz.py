import pytest

from grasscluster.correspondence.partition_to_gz import PartitionToGZCorrespondence
from grasscluster.element.plane_partition import PlanePartition, enumerate_partitions
from grasscluster.errors import NotInConeError, ParameterError
from grasscluster.space.tropical import GZVector, bijection, inverse_bijection, trop_rotate_gz


@pytest.mark.parametrize("abc", [(1, 1, 3), (2, 2, 2), (2, 3, 2), (3, 3, 1)])
def test_bijection_is_equivariant(abc):
    correspondence = PartitionToGZCorrespondence(*abc)
    assert correspondence.test_correspondence() == (True, True, True)


@pytest.mark.slow
@pytest.mark.parametrize("abc", [(a, b, c) for a in range(1, 5) for b in range(1, 5) for c in range(5)])
def test_eta_is_tropical_rotation_on_every_box(abc):
    a, b, c = abc
    for pi in enumerate_partitions(a, b, c):
        assert inverse_bijection(trop_rotate_gz(bijection(pi, c))) == pi.eta(c), pi


def test_forward_backward():
    correspondence = PartitionToGZCorrespondence(2, 3, 6)
    pi = PlanePartition([[3, 2, 2], [3, 1, 0]])
    l = correspondence.forward(pi)
    assert l == GZVector(6, [[3, 2, 2], [3, 1, 0]])
    assert correspondence.backward(l) == pi
    with pytest.raises(NotInConeError):
        correspondence.backward(GZVector(2, [[3, 2, 2], [3, 1, 0]]))


def test_pairs_are_one_to_one():
    correspondence = PartitionToGZCorrespondence(2, 2, 2, debug=True)
    correspondence.source_to_target()
    assert len(correspondence.target_to_source()) == 20


def test_bad_box():
    with pytest.raises(ParameterError):
        PartitionToGZCorrespondence(2, 0, 1)
