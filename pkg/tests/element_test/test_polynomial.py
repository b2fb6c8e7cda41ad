import pytest
from hypothesis import given, strategies as st

from grasscluster.element.polynomial import CyclotomicInt, IntPolynomial, cyclotomic_poly, quantum_integer
from grasscluster.errors import InputFormatError, InternalConsistencyError, ParameterError

coefficient_lists = st.lists(st.integers(-20, 20), max_size=8)


@pytest.mark.parametrize("n, coeffs", [(1, [-1, 1]), (2, [1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1]),
                                       (12, [1, 0, -1, 0, 1])])
def test_cyclotomic_polynomials(n, coeffs):
    assert cyclotomic_poly(n).coefficients == coeffs


def test_cyclotomic_rejects_zero():
    with pytest.raises(ParameterError):
        cyclotomic_poly(0)


def test_quantum_integer():
    assert quantum_integer(3).coefficients == [1, 1, 1]
    assert quantum_integer(0) == 0
    with pytest.raises(ParameterError):
        quantum_integer(-1)


def test_trailing_zeros_trimmed():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coefficients == [1, 2]
    assert p.degree == 1
    assert IntPolynomial().degree == -1


def test_exact_division():
    assert (quantum_integer(4).exact_div(quantum_integer(2))).coefficients == [1, 0, 1]
    with pytest.raises(InternalConsistencyError):
        quantum_integer(3).exact_div(quantum_integer(2))


def test_at_one_and_call():
    p = IntPolynomial([1, 1, 2, 1, 1])
    assert p.at_one() == 6
    assert p(2) == 1 + 2 + 8 + 8 + 16


def test_repr():
    assert repr(IntPolynomial([1, 0, 3])) == "1 + 3q^2"
    assert repr(IntPolynomial()) == "0"


def test_json_round_trip():
    p = IntPolynomial([1, -1, 1])
    assert IntPolynomial.from_json(p.to_json()) == p
    with pytest.raises(InputFormatError):
        IntPolynomial.from_json("1+q")


@given(coefficient_lists, coefficient_lists)
def test_reduction_is_ring_homomorphism(f, g):
    n = 6
    F, G = IntPolynomial(f), IntPolynomial(g)
    assert CyclotomicInt(n, (F * G).coefficients) == CyclotomicInt(n, f) * CyclotomicInt(n, g)
    assert CyclotomicInt(n, (F + G).coefficients) == CyclotomicInt(n, f) + CyclotomicInt(n, g)


@given(st.integers(1, 12))
def test_sum_of_all_roots(n):
    # 1 + ζ + ... + ζ^{n−1} vanishes unless n = 1
    total = CyclotomicInt(n, [1] * n)
    assert total == (1 if n == 1 else 0)


def test_root_of_unity_has_order_n():
    zeta = CyclotomicInt(5, [0, 1])
    power = CyclotomicInt.from_integer(5, 1)
    for _ in range(5):
        power = power * zeta
    assert power == 1
    assert abs(zeta.to_complex() - complex(0.30901699437494745, 0.9510565162951535)) < 1e-9


def test_as_integer():
    assert CyclotomicInt(4, [3]).as_integer() == 3
    assert CyclotomicInt(4, [0, 1]).as_integer() is None
    assert CyclotomicInt(4, []).as_integer() == 0


def test_orders_do_not_mix():
    with pytest.raises(ParameterError):
        CyclotomicInt(4, [1]) + CyclotomicInt(6, [1])


def test_cyclotomic_json_round_trip():
    z = CyclotomicInt(6, [2, -1])
    assert CyclotomicInt.from_json(z.to_json()) == z
    with pytest.raises(InputFormatError):
        CyclotomicInt.from_json({"coeffs": [1]})
