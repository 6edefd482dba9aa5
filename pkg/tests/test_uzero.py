"""Cartan subalgebra kG[B]: evaluation, interpolation, coproduct, primitive."""

import pytest
from hypothesis import given, settings, strategies as st

from hyperzeta.exactnum import cyc_rat, rat, zeta
from hyperzeta.qcomb import binom_shift_eval, gauss_binom_at, short_ladic
from hyperzeta.uzero import (
    TensorSq,
    UZeroElem,
    coproduct_B,
    coproduct_W,
    delta_defect,
    kshift_binom,
    primitive_element,
    primitive_kernel,
    sigma_shift,
    tensor_pair,
    uzero,
    uzero_B,
    uzero_eval,
    uzero_eval_weight,
    uzero_interpolate,
    uzero_K,
    uzero_one,
)


def test_eval_generators():
    assert uzero_eval(uzero_K(5), 7) == zeta(5, 2)
    assert uzero_eval(uzero_B(5), 7) == 1
    # K B^2 at m = -7: digits (3, -2), so zeta^3 * 4
    assert uzero_eval(uzero(5, {(1, 2): 1}), -7) == zeta(5, 3) * 4


def test_group_ring_relations():
    assert uzero_K(5, 5) == uzero_one(5)
    assert uzero_K(5, -1) == uzero_K(5, 4)
    assert uzero_K(5, 2) * uzero_K(5, 4) == uzero_K(5, 1)
    assert (uzero_B(5) ** 2) * uzero_K(5) == uzero(5, {(1, 2): 1})


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        uzero_K(5) * uzero_K(7)
    with pytest.raises(ValueError):
        uzero(5, {(0, 0): zeta(7)})


_elems = st.builds(
    lambda pairs: uzero(5, [((c, d), k) for (c, d, k) in pairs]),
    st.lists(
        st.tuples(st.integers(0, 4), st.integers(0, 2), st.integers(-3, 3)),
        max_size=4,
    ),
)


@given(_elems, _elems, st.integers(-15, 15))
def test_eval_is_an_algebra_map(u, v, m):
    assert uzero_eval(u * v, m) == uzero_eval(u, m) * uzero_eval(v, m)
    assert uzero_eval(u + v, m) == uzero_eval(u, m) + uzero_eval(v, m)


def test_eval_weight_extends_integer_eval():
    u = uzero(5, {(2, 1): zeta(5), (0, 0): 3})
    for m in range(-10, 11):
        m0, m1 = short_ladic(m, 5)
        assert uzero_eval_weight(u, m0, m1) == uzero_eval(u, m)
    assert uzero_eval_weight(uzero_B(5), 0, rat(1, 2)) == cyc_rat(5, rat(1, 2))


def test_interpolate_roundtrips():
    assert uzero_interpolate(lambda m: zeta(5, m % 5), 0, 5) == uzero_K(5)
    assert uzero_interpolate(lambda m: short_ladic(m, 5).m1, 1, 5) == uzero_B(5)
    u = uzero(7, {(3, 2): zeta(7, 2) + 1, (1, 0): rat(-1, 3)})
    assert uzero_interpolate(lambda m: uzero_eval(u, m), 2, 7) == u


def test_interpolate_group_ring_oracle():
    # Interpolating m -> [m]_zeta must give the inverse-transform coefficients
    # (1/l) sum_m [m]_zeta zeta^(-a*m) on K^a.
    ell = 5
    u = uzero_interpolate(lambda m: gauss_binom_at(m, 1, ell), 0, ell)
    for a in range(ell):
        expect = sum(
            (gauss_binom_at(m, 1, ell) * zeta(ell, (-a * m) % ell) for m in range(ell)),
            cyc_rat(ell, 0),
        ) * rat(1, ell)
        got = u.terms.get((a, 0), cyc_rat(ell, 0))
        assert got == expect


def test_interpolate_detects_wrong_degree_bound():
    with pytest.raises(ArithmeticError):
        uzero_interpolate(lambda m: short_ladic(m, 5).m1 ** 2, 1, 5)
    # an over-generous bound is harmless
    assert uzero_interpolate(lambda m: short_ladic(m, 5).m1, 3, 5) == uzero_B(5)


def test_kshift_binom_edges():
    assert kshift_binom(0, 5, 5) == uzero_B(5)
    assert kshift_binom(0, 0, 5) == uzero_one(5)
    for t in range(1, 5):
        assert kshift_binom(0, t, 5).in_group_ring()
    with pytest.raises(ValueError):
        kshift_binom(0, -1, 5)


def test_kshift_binom_matches_its_contract():
    for c in (-2, 0, 3, 7):
        for t in (1, 3, 5, 8, 10):
            u = kshift_binom(c, t, 5)
            for m in range(-10, 11):
                assert uzero_eval(u, m) == gauss_binom_at(m + c, t, 5)


def test_kshift_down_two_splits_as_B_plus_indicator():
    g = kshift_binom(-2, 5, 5) - uzero_B(5)
    assert g.in_group_ring()
    for m in range(-12, 13):
        expect = 0 if m % 5 >= 2 else -1
        assert uzero_eval(g, m) == cyc_rat(5, expect)


def _binom_expansion_sides(c, ell):
    down = uzero(ell, {})
    up = uzero(ell, {})
    for s in range(ell + 1):
        phase = zeta(ell, (c * (ell - s)) % ell)
        tail = kshift_binom(0, ell - s, ell)
        down = down + (
            (-1) ** s * phase * gauss_binom_at(c + s - 1, s, ell)
        ) * (uzero_K(ell, s) * tail)
        up = up + (phase * gauss_binom_at(c, s, ell)) * (uzero_K(ell, -s) * tail)
    return down, up


def test_shifted_binomial_expansions():
    # the two depth-l expansion identities, as exact element equalities
    for ell, cs in [(3, range(9)), (5, (0, 1, 4, 7, 12))]:
        for c in cs:
            down, up = _binom_expansion_sides(c, ell)
            assert kshift_binom(-c, ell, ell) == down, (ell, c, "down")
            assert kshift_binom(c, ell, ell) == up, (ell, c, "up")


def test_scalar_binomial_expansions():
    # the specialized scalar forms at K = zeta^m
    ell = 5
    for m in range(ell):
        for c in range(3 * ell):
            down = sum(
                (
                    (-1) ** s
                    * zeta(ell, (ell * c + s * (m - c)) % ell)
                    * gauss_binom_at(c + s - 1, s, ell)
                    * gauss_binom_at(m, ell - s, ell)
                    for s in range(ell + 1)
                ),
                cyc_rat(ell, 0),
            )
            assert down == gauss_binom_at(m - c, ell, ell)
            # phase l*c - s*(m+c): forced by specializing K -> zeta^m in the
            # element identity, where K^(-s) contributes zeta^(-s*m)
            up = sum(
                (
                    zeta(ell, (ell * c - s * (m + c)) % ell)
                    * gauss_binom_at(c, s, ell)
                    * gauss_binom_at(m, ell - s, ell)
                    for s in range(ell + 1)
                ),
                cyc_rat(ell, 0),
            )
            assert up == gauss_binom_at(m + c, ell, ell)


def test_coproduct_edge_terms():
    db = coproduct_B(5)
    assert db.terms[((0, 1), (0, 0))] == cyc_rat(5, 1)  # B (x) 1
    assert db.terms[((0, 0), (0, 1))] == cyc_rat(5, 1)  # 1 (x) B


def test_coproduct_carry_law():
    db = coproduct_B(5)
    for m in range(-7, 8):
        for mp in range(-7, 8):
            assert db.eval_pair(m, mp) == short_ladic(m + mp, 5).m1


def test_coproduct_is_cocommutative():
    for ell in (3, 5, 7):
        db = coproduct_B(ell)
        assert db.swap() == db


@given(
    st.integers(0, 4),
    st.integers(0, 4),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
)
def test_coproduct_cross_term_is_the_carry(l0, m0, l1, m1):
    db = coproduct_B(5)
    got = db.eval_pair_weight(l0, rat(str(l1)), m0, rat(str(m1)))
    carry = 1 if l0 + m0 >= 5 else 0
    assert got == cyc_rat(5, rat(str(l1)) + rat(str(m1)) + carry)


def test_group_likes_and_tensor_pairs():
    k = uzero_K(5, 2)
    assert coproduct_W(k) == tensor_pair(k, k)
    with pytest.raises(ValueError):
        tensor_pair(uzero_B(5) ** 2, uzero_one(5))


def test_primitive_element_coefficients():
    for ell in (3, 5, 7):
        p = primitive_element(ell)
        assert p.terms[(0, 1)] == cyc_rat(ell, 1)
        assert p.terms[(0, 0)] == cyc_rat(ell, rat(ell - 1, 2 * ell))
        # brute-force the stated coefficient sum
        for i in range(ell):
            expect = sum(
                (j * zeta(ell, (-i * j) % ell) for j in range(ell)), cyc_rat(ell, 0)
            ) * rat(1, ell * ell)
            got = p.terms.get((i, 0), cyc_rat(ell, 0))
            assert got == expect
    assert primitive_element(3).terms[(0, 0)] == cyc_rat(3, rat(1, 3))


def test_primitive_defect_vanishes():
    for ell in (3, 5, 7):
        assert delta_defect(primitive_element(ell)).is_zero()
    assert not delta_defect(uzero_B(5)).is_zero()
    assert delta_defect(uzero_one(5) * 0).is_zero()


def test_primitive_space_is_one_dimensional():
    for ell in (3, 5):
        ker = primitive_kernel(ell)
        assert len(ker) == 1
        scale = ker[0].terms.get((0, 1))
        assert scale and ker[0] == scale * primitive_element(ell)


@given(_elems, _elems, st.integers(-6, 6), st.integers(-6, 6))
@settings(max_examples=40)
def test_sigma_shift_properties(u, v, a, b):
    sa = sigma_shift(u, a)
    for m in range(-8, 9):
        assert uzero_eval(sa, m) == uzero_eval(u, m + 2 * a)
    assert sigma_shift(u * v, a) == sa * sigma_shift(v, a)
    assert sigma_shift(sigma_shift(u, b), a) == sigma_shift(u, a + b)
    assert sigma_shift(sa, -a) == u


def test_json_roundtrip():
    u = uzero(5, {(2, 1): zeta(5, 3) + 2, (0, 0): rat(-1, 2)})
    assert UZeroElem.from_json(u.to_json()) == u
    assert uzero(5, {}).to_json() == {"ell": 5, "terms": []}


def test_str_forms():
    assert str(uzero_one(5)) == "1"
    assert str(uzero(5, {})) == "0"
    assert str(uzero(5, {(1, 1): 1, (0, 0): rat(1, 2)})) == "1/2 + K B"
    assert str(uzero(5, {(2, 0): -1})) == "-K^2"
