"""Integer Laurent polynomial ring: arithmetic and exact division."""

import pytest
from hypothesis import given, strategies as st

from hyperzeta.exactnum import InexactDivisionError, LaurentPoly, laurent, q_int, q_power


def test_product_example():
    assert (q_power(1) - q_power(-1)) * (q_power(1) + q_power(-1)) == laurent({2: 1, -2: -1})


def test_exact_division_example():
    quo = (q_power(3) - q_power(-3)).exact_div(q_power(1) - q_power(-1))
    assert quo == laurent({2: 1, 0: 1, -2: 1})


def test_inexact_division_reports_remainder():
    with pytest.raises(InexactDivisionError) as exc:
        (q_power(2) - q_power(-2)).exact_div(q_power(3) - q_power(-3))
    assert exc.value.remainder == q_power(2) - q_power(-2)


def test_q_integers():
    assert q_int(0).is_zero()
    assert q_int(1) == 1
    assert q_int(2) == laurent({1: 1, -1: 1})
    assert q_int(-2) == -q_int(2)
    assert str(q_int(-2)) == "-(q + q^-1)"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(q_int(2), laurent({}))


def test_integer_coercion():
    assert q_int(2) + 1 == laurent({1: 1, 0: 1, -1: 1})
    assert 2 * q_power(1) == laurent({1: 2})
    assert 1 - q_power(0) == laurent({})


def test_str_formats():
    assert str(laurent({})) == "0"
    assert str(laurent({2: 1, 0: -3})) == "q^2 - 3"
    assert str(laurent({-1: 2})) == "2q^-1"


def test_json_round_trip():
    p = laurent({3: -2, 0: 1, -4: 7})
    assert LaurentPoly.from_json(p.to_json()) == p


_terms = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(-4, 4)),
    max_size=5,
)
_polys = st.builds(lambda t: laurent(dict(t)), _terms)


@given(_polys, _polys, _polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(_polys, _polys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    quo, rem = divmod(a, b)
    assert b * quo + rem == a


@given(_polys)
def test_multiplicative_cancellation(a):
    if a.is_zero():
        return
    b = a * (q_power(2) + 3)
    assert b.exact_div(a) == q_power(2) + 3
