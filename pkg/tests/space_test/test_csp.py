import pytest

from grasscluster.element.plane_partition import macmahon
from grasscluster.element.polynomial import IntPolynomial
from grasscluster.errors import ParameterError, ResourceCapError
from grasscluster.space.csp import (
    CSPReport,
    estimated_cost,
    eval_at_root,
    eval_census_at_root,
    fixed_points,
    orbit_sizes,
    period_census,
    residue_census,
    trop_weight_census,
    verify_csp,
    weight_census,
)


def test_eval_at_root_small_box():
    M = macmahon(2, 2, 1)
    assert eval_at_root(M, 4, 0) == 6
    assert eval_at_root(M, 4, 1) == 0
    assert eval_at_root(M, 4, 2) == 2
    assert eval_at_root(IntPolynomial([0, 1]), 6, 1).as_integer() is None
    with pytest.raises(ParameterError):
        eval_at_root(M, 4, 4)


def test_residue_census():
    census = residue_census(2, 2, 1)
    assert census == {0: 2, 1: 1, 2: 2, 3: 1}
    assert eval_census_at_root(census, 4, 1) == eval_at_root(macmahon(2, 2, 1), 4, 1)


def test_fixed_points():
    assert fixed_points(2, 2, 1, 0) == 6
    assert fixed_points(2, 2, 1, 2) == 2
    assert fixed_points(2, 2, 1, 6) == 2
    with pytest.raises(ParameterError):
        fixed_points(2, 2, 1, -1)


@pytest.mark.parametrize("c", range(5))
def test_single_cell_box(c):
    assert fixed_points(1, 1, c, 1) == (1 if c % 2 == 0 else 0)


def test_orbit_sizes_cover_box():
    sizes = orbit_sizes(2, 3, 2)
    assert sum(size * count for size, count in sizes.items()) == macmahon(2, 3, 2).at_one()
    assert all(5 % size == 0 for size in sizes)


def test_period_census_threads_agree():
    assert period_census(2, 3, 2, threads=1) == period_census(2, 3, 2, threads=3)


@pytest.mark.parametrize("abc", [
    (1, 1, 1), (1, 1, 4), (1, 1, 5), (2, 2, 1), (2, 2, 2), (2, 2, 3),
    (2, 3, 2), (3, 3, 1), (2, 3, 6), (3, 3, 2), (2, 4, 3),
])
def test_cyclic_sieving(abc):
    report = verify_csp(*abc, threads=2)
    assert report.all_equal
    assert len(report.entries) == abc[0] + abc[1]
    assert report.entries[0].fixed_count == macmahon(*abc).at_one()


def test_report_rows():
    report = verify_csp(2, 2, 1, threads=1)
    rows = report.rows()
    assert rows[1] == {"d": 1, "fixed": 0, "value": "0", "ok": True}
    floats = report.rows(as_float=True)
    assert floats[2]["value"] == "2.000000+0.000000i"
    data = report.to_json()
    assert data["n"] == 4 and data["all_equal"]
    assert data["rows"][0]["value"] == {"n": 4, "coeffs": [6]}
    assert isinstance(report, CSPReport)


def test_resource_cap():
    assert estimated_cost(2, 2, 1) == 24
    with pytest.raises(ResourceCapError) as info:
        verify_csp(2, 2, 2, cap=10)
    assert info.value.estimated_cost == 80
    assert info.value.exit_code == 3


def test_weight_census_single_cell():
    assert weight_census(1, 1, 1) == {(0, 1): 1, (1, 0): 1}


@pytest.mark.parametrize("abc", [(1, 2, 2), (2, 2, 2), (2, 3, 1)])
def test_weight_census_two_ways(abc):
    census = weight_census(*abc)
    assert census == trop_weight_census(*abc)
    assert sum(census.values()) == macmahon(*abc).at_one()
