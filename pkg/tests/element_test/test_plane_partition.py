import pytest
from hypothesis import given, strategies as st

from grasscluster.element.plane_partition import (
    GTPattern,
    PlanePartition,
    enumerate_partitions,
    eta,
    gt_pattern,
    gt_weight,
    macmahon,
    macmahon_by_enumeration,
    macmahon_by_product,
    toggle,
)
from grasscluster.errors import InputFormatError, InvariantViolationError, ParameterError

SAMPLE = PlanePartition([[3, 2, 2], [3, 1, 0]])


@st.composite
def boxed_partitions(draw, max_a=3, max_b=3, max_c=4):
    """A random element of P(a,b,c) together with c."""
    a = draw(st.integers(1, max_a))
    b = draw(st.integers(1, max_b))
    c = draw(st.integers(0, max_c))
    rows = []
    for i in range(a):
        row = []
        for j in range(b):
            bound = c
            if i > 0:
                bound = min(bound, rows[i - 1][j])
            if j > 0:
                bound = min(bound, row[j - 1])
            row.append(draw(st.integers(0, bound)))
        rows.append(row)
    return PlanePartition(rows), c


def test_rejects_increasing_rows():
    with pytest.raises(InvariantViolationError):
        PlanePartition([[1, 2], [0, 0]])


def test_rejects_negative_and_ragged():
    with pytest.raises(InvariantViolationError):
        PlanePartition([[1, -1]])
    with pytest.raises(InvariantViolationError):
        PlanePartition([[2, 1], [1]])


def test_entries_are_one_based():
    assert SAMPLE[1, 1] == 3
    assert SAMPLE[2, 2] == 1
    with pytest.raises(ParameterError):
        SAMPLE[0, 1]


def test_box_convention():
    assert SAMPLE.entry(0, 2, 6) == 6
    assert SAMPLE.entry(2, 0, 6) == 6
    assert SAMPLE.entry(3, 1, 6) == 0
    assert SAMPLE.entry(1, 4, 6) == 0


def test_toggle_by_hand():
    once = toggle(SAMPLE, 2, 1, 6)
    assert once[2, 1] == 1
    twice = toggle(once, 1, 1, 6)
    assert twice[1, 1] == 5


def test_eta_by_hand():
    assert eta(SAMPLE, 6).tolist() == [[5, 5, 3], [1, 0, 0]]


def test_eta_frames_end_at_eta():
    frames = SAMPLE.eta_frames(6)
    assert len(frames) == SAMPLE.a * SAMPLE.b
    assert frames[-1] == SAMPLE.eta(6)


def test_toggle_outside_box():
    with pytest.raises(InvariantViolationError):
        SAMPLE.toggle(1, 1, 2)
    with pytest.raises(ParameterError):
        SAMPLE.toggle(3, 1, 6)


@given(boxed_partitions())
def test_toggle_is_involution(sample):
    pi, c = sample
    for i in range(1, pi.a + 1):
        for j in range(1, pi.b + 1):
            assert pi.toggle(i, j, c).toggle(i, j, c) == pi


@given(boxed_partitions())
def test_eta_stays_in_box(sample):
    pi, c = sample
    image = pi.eta(c)
    assert image.fits(c)
    assert image.a == pi.a and image.b == pi.b


@given(boxed_partitions(max_a=2, max_b=3, max_c=3))
def test_eta_order_divides_n(sample):
    pi, c = sample
    n = pi.a + pi.b
    assert pi.eta_power(n, c) == pi
    assert n % len(pi.orbit(c)) == 0


def test_zero_partition_orbit():
    pi = PlanePartition.zero(2, 2)
    orbit = pi.orbit(1)
    assert orbit[0] == pi
    assert 4 % len(orbit) == 0


@pytest.mark.parametrize("abc, count", [((1, 1, 1), 2), ((2, 2, 1), 6), ((2, 2, 2), 20)])
def test_enumeration_counts(abc, count):
    partitions = list(enumerate_partitions(*abc))
    assert len(partitions) == count
    assert len(set(partitions)) == count
    assert partitions == sorted(partitions)


def test_enumeration_with_zero_height():
    assert list(enumerate_partitions(2, 3, 0)) == [PlanePartition.zero(2, 3)]


def test_enumeration_rejects_bad_box():
    with pytest.raises(ParameterError):
        list(enumerate_partitions(0, 2, 1))


def test_macmahon_small_box():
    assert macmahon(2, 2, 1).coefficients == [1, 1, 2, 1, 1]


@pytest.mark.parametrize("abc", [(1, 1, 3), (2, 2, 2), (2, 3, 2), (3, 3, 1)])
def test_macmahon_two_ways(abc):
    assert macmahon_by_enumeration(*abc) == macmahon_by_product(*abc)
    assert macmahon(*abc).at_one() == len(list(enumerate_partitions(*abc)))


@pytest.mark.slow
@pytest.mark.parametrize("abc", [(a, b, c) for a in range(1, 5) for b in range(1, 5) for c in range(5)])
def test_macmahon_two_ways_on_every_box(abc):
    assert macmahon_by_enumeration(*abc) == macmahon_by_product(*abc)


def test_macmahon_is_palindromic():
    coeffs = macmahon(2, 3, 2).coefficients
    assert coeffs == coeffs[::-1]
    assert len(coeffs) == 2 * 3 * 2 + 1


def test_json_round_trip_and_declared_shape():
    assert PlanePartition.from_json(SAMPLE.to_json()) == SAMPLE
    assert PlanePartition.from_json([[1, 0]]) == PlanePartition([[1, 0]])
    with pytest.raises(InputFormatError):
        PlanePartition.from_json({"a": 3, "b": 3, "entries": [[3, 2, 2], [3, 1, 0]]})


def test_parse_sample_file():
    assert PlanePartition.parse("samplePartition.json") == SAMPLE


def test_gt_pattern_of_small_partitions():
    zero = gt_pattern(PlanePartition([[0]]), 1)
    one = gt_pattern(PlanePartition([[1]]), 1)
    assert zero.rows == [(1, 0), (0,)]
    assert gt_weight(zero) == (0, 1)
    assert gt_weight(one) == (1, 0)


def test_gt_pattern_rejects_increasing_column():
    with pytest.raises(InvariantViolationError):
        GTPattern([[1, 0], [2]])


@given(boxed_partitions())
def test_gt_weight_sums_to_last_diagonal(sample):
    pi, c = sample
    pattern = gt_pattern(pi, c)
    assert sum(gt_weight(pattern)) == pattern.diagonal_sums()[-1]
