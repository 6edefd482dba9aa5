"""Expression grammar: parsing, evaluation, and round-trip with printing."""

import random

import pytest

from hyperzeta.exactnum import cyc_rat, zeta
from hyperzeta.parser import (
    ParseError,
    ResourceCapError,
    eval_expr,
    parse,
    print_normal_form,
)
from hyperzeta.pbw import (
    PBWElem,
    pbw,
    pbw_B,
    pbw_E,
    pbw_F,
    pbw_K,
    pbw_mul,
    pbw_one,
)


def ev(text: str, ell: int) -> PBWElem:
    return eval_expr(parse(text), ell)


def test_divided_power_product():
    assert ev("E^(2) F^(3)", 5) == pbw_mul(pbw_E(5, 2), pbw_F(5, 3))


def test_conjugation_relation_collapses():
    for ell in (3, 5, 7):
        assert ev("K E - z^2 E K", ell).is_zero()
        assert ev("K F - z^-2 F K", ell).is_zero()


def test_malformed_divided_power_position():
    with pytest.raises(ParseError) as info:
        parse("E^(")
    assert info.value.position == 3
    assert "offset 3" in str(info.value)


def test_k_inverse_and_signed_powers():
    assert ev("K^-1", 5) == pbw_K(5, 4)
    assert ev("K^-1 K", 7) == pbw_one(7)
    assert ev("z^-1 z", 5) == pbw_one(5)
    assert ev("B^2", 3) == pbw_mul(pbw_B(3), pbw_B(3))


def test_rationals_juxtaposition_parentheses():
    assert ev("2/3 K", 5) == pbw(5, {(0, 1, 0, 0): cyc_rat(5, "2/3")})
    assert ev("2 * K", 5) == ev("2K", 5) == ev("2 K", 5)
    assert ev("(E + F) K", 5) == pbw_mul(pbw_E(5) + pbw_F(5), pbw_K(5))
    assert ev("K (E + F)", 5) != ev("(E + F) K", 5)


def test_whitespace_insensitive():
    assert ev("  E^( 2 )  F ", 5) == ev("E^(2)F", 5)


def test_unary_minus():
    assert ev("-E", 5) == pbw_E(5) * (-1)
    assert ev("- 2/5 B + B", 5) == pbw_B(5) * cyc_rat(5, "3/5")


def test_z_is_the_root_of_unity():
    assert ev("z", 7) == pbw_one(7) * zeta(7)
    assert ev("z^7", 7) == pbw_one(7)


def test_parse_errors_positions():
    for text, pos in (("E +", 3), ("(E", 2), ("E^", 2), ("E^(x)", 3), ("@", 0)):
        with pytest.raises(ParseError) as info:
            parse(text)
        assert info.value.position == pos, text
    with pytest.raises(ParseError):
        parse("")


def test_resource_cap_is_an_error():
    tree = parse("(E + F + K)^9")
    with pytest.raises(ResourceCapError):
        eval_expr(tree, 5, max_terms=20)
    eval_expr(tree, 5, max_terms=10000)


def random_pbw(rng: random.Random, ell: int) -> PBWElem:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        key = (
            rng.randint(0, 2 * ell),
            rng.randrange(ell),
            rng.randint(0, 2),
            rng.randint(0, 2 * ell),
        )
        num = rng.randint(-9, 9) or 1
        den = rng.randint(1, 9)
        k = rng.randrange(ell)
        terms[key] = terms.get(key, cyc_rat(ell, 0)) + zeta(ell, k) * num * (
            cyc_rat(ell, 1) / den
        )
    return pbw(ell, terms)


def test_print_parse_round_trip_100():
    rng = random.Random(20260822)
    for i in range(100):
        ell = rng.choice([3, 5, 7])
        x = random_pbw(rng, ell)
        text = print_normal_form(x)
        assert ev(text, ell) == x, f"case {i}: {text}"


def test_print_zero_and_one():
    assert print_normal_form(pbw(5, {})) == "0"
    assert ev(print_normal_form(pbw_one(5)), 5) == pbw_one(5)
