"""Cyclotomic field arithmetic: canonical forms, inverses, specialization."""

import pytest
from hypothesis import given, strategies as st

from hyperzeta.exactnum import (
    CycScalar,
    cyc_make,
    cyc_rat,
    laurent,
    q_int,
    q_power,
    rat,
    specialize,
    zeta,
)
from hyperzeta.exactnum.cyclotomic import cyclotomic_poly


def test_cyclotomic_polynomials_known_values():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_poly(7) == (1,) * 7
    assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_poly(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)


def test_zeta_order_and_reduction():
    for ell in (3, 5, 7, 9):
        z = zeta(ell)
        assert (z**ell) == 1
        assert cyc_make(ell, {ell: 1, 0: -1}).is_zero()
        # no proper smaller power hits 1 (primitivity)
        assert all(z**k != 1 for k in range(1, ell))


def test_minimal_polynomial_of_cos_term():
    # 2cos(2pi/5) = zeta + zeta^-1 satisfies t^2 + t - 1 = 0; derived by
    # brute-force expansion in the field itself.
    x = zeta(5) + zeta(5, 4)
    assert (x * x + x - 1).is_zero()


def test_inverse_and_division():
    a = zeta(5) - zeta(5, 4)
    assert (a * a.inv()) == 1
    lhs = (zeta(5, 2) - zeta(5, 3)) / a
    assert lhs == zeta(5) + zeta(5, 4)
    with pytest.raises(ZeroDivisionError):
        cyc_rat(5, 0).inv()


def test_rejects_bad_orders_and_mixing():
    with pytest.raises(ValueError):
        zeta(4)
    with pytest.raises(ValueError):
        zeta(1)
    with pytest.raises(ValueError):
        zeta(3) + zeta(5)
    with pytest.raises(ValueError):
        zeta(3) * zeta(9)


def test_rational_detection():
    assert cyc_rat(5, rat(2, 3)).is_rational()
    assert cyc_rat(5, rat(2, 3)).as_rational() == rat(2, 3)
    assert not zeta(5).is_rational()
    with pytest.raises(ValueError):
        zeta(5).as_rational()
    # a full orbit sum collapses to a rational
    s = sum((zeta(7, k) for k in range(1, 7)), cyc_rat(7, 0))
    assert s == -1


def test_specialize_kills_ell_th_q_integer():
    for ell in (3, 5, 7):
        assert specialize(q_int(ell), ell).is_zero()
        assert specialize(q_int(1), ell) == 1
    # d = 2 specialization: q -> zeta^2
    assert specialize(q_power(1), 5, 2) == zeta(5, 2)


def test_specialize_accumulates_colliding_exponents():
    # q^5 + 1 at zeta_5 is 2, not 1: both terms land on the same residue.
    assert specialize(laurent({5: 1, 0: 1}), 5) == 2


def test_power_negative_exponents():
    z = zeta(7)
    assert z**-3 == (z**3).inv() == zeta(7, 4)
    assert z**0 == 1


def test_json_round_trip():
    x = zeta(5) * rat(2, 3) - 1
    assert CycScalar.from_json(x.to_json()) == x
    assert x.to_json()["ell"] == 5


def test_hashable_and_usable_as_keys():
    d = {zeta(5): "a", zeta(5, 2): "b"}
    assert d[zeta(5, 6)] == "a"


_small = st.integers(min_value=-9, max_value=9)


def _cyc_elems(ell):
    return st.builds(
        lambda cs: cyc_make(ell, dict(enumerate(cs))),
        st.lists(_small, min_size=ell, max_size=ell),
    )


@given(_cyc_elems(5), _cyc_elems(5), _cyc_elems(5))
def test_field_axioms_ell5(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inv() == 1


@given(_cyc_elems(9), _cyc_elems(9))
def test_field_axioms_composite_order(a, b):
    assert a * b == b * a
    assert a - b == -(b - a)
    if not b.is_zero():
        assert (a / b) * b == a


_laurents = st.builds(
    lambda terms: laurent(dict(terms)),
    st.lists(st.tuples(st.integers(-6, 6), _small), max_size=6),
)


@given(_laurents, _laurents)
def test_specialize_is_a_ring_map(p1, p2):
    for ell in (3, 5):
        assert specialize(p1 * p2, ell) == specialize(p1, ell) * specialize(p2, ell)
        assert specialize(p1 + p2, ell) == specialize(p1, ell) + specialize(p2, ell)
