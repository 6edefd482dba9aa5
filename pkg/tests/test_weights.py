"""Weight group: carry law, embedding, negation, dominance, evaluation."""

import pytest
from hypothesis import given, strategies as st

from hyperzeta.exactnum import rat, zeta
from hyperzeta.weights import (
    Weight,
    cartan_data,
    dominance_leq,
    embed,
    eval_weight,
    simple_root,
    weight_add,
    weight_neg,
    weight_sub,
    weight_zero,
)


def test_cartan_factory_is_cached_by_identity():
    assert cartan_data("A", 1, 5) is cartan_data("A", 1, 5)
    assert cartan_data("A", 1, 5) is not cartan_data("A", 1, 7)


def test_symmetrizers_by_type():
    assert cartan_data("A", 3, 5).d == (1, 1, 1)
    assert cartan_data("B", 2, 5).d == (2, 1)
    assert cartan_data("C", 3, 5).d == (1, 1, 2)
    assert cartan_data("D", 4, 5).d == (1, 1, 1, 1)
    assert cartan_data("E", 6, 5).d == (1,) * 6
    assert cartan_data("F", 4, 5).d == (2, 2, 1, 1)
    assert cartan_data("G", 2, 5).d == (3, 1)


def test_cartan_symmetry_invariant():
    for letter, n in [("A", 4), ("B", 3), ("C", 2), ("D", 5), ("E", 7), ("F", 4), ("G", 2)]:
        c = cartan_data(letter, n, 5)
        for i in range(n):
            for j in range(n):
                assert c.d[i] * c.matrix[i][j] == c.d[j] * c.matrix[j][i]


def test_cartan_rejections():
    with pytest.raises(ValueError):
        cartan_data("A", 1, 4)  # even modulus
    with pytest.raises(ValueError):
        cartan_data("A", 1, 1)
    with pytest.raises(ValueError):
        cartan_data("G", 2, 9)  # triple bond needs l prime to 3
    with pytest.raises(ValueError):
        cartan_data("E", 5, 5)
    with pytest.raises(ValueError):
        cartan_data("D", 3, 5)
    with pytest.raises(ValueError):
        cartan_data("Z", 2, 5)


def test_raw_matrix_rejections():
    from hyperzeta.weights import CartanData

    with pytest.raises(ValueError):
        CartanData([[2, -1], [0, 2]], 5)  # asymmetric zero pattern
    with pytest.raises(ValueError):
        CartanData([[1, 0], [0, 2]], 5)  # bad diagonal
    with pytest.raises(ValueError):
        CartanData([[2, 1], [1, 2]], 5)  # positive off-diagonal
    with pytest.raises(ValueError):
        CartanData([[2, -2], [-2, 2]], 5)  # singular (affine)


def test_embed_frozen_examples():
    c = cartan_data("A", 1, 5)
    assert embed(c, [7]).lam0 == (2,) and embed(c, [7]).lam1 == (1,)
    assert str(embed(c, [-7])) == "((3),(-2))"
    assert embed(c, [0]) == weight_zero(c)


def test_carry_branches():
    c = cartan_data("A", 1, 5)
    assert weight_add(embed(c, [3]), embed(c, [4])) == embed(c, [7])  # carries
    assert weight_add(embed(c, [1]), embed(c, [2])) == embed(c, [3])  # does not
    lam = Weight(c, [3], [rat(1, 2)])
    assert weight_add(lam, embed(c, [4])).lam1 == (rat(3, 2),)


def test_negation_branches():
    c = cartan_data("A", 1, 5)
    assert weight_neg(embed(c, [7])) == embed(c, [-7])
    assert weight_neg(weight_zero(c)) == weight_zero(c)
    lam = Weight(c, [0], [rat(1, 2)])
    assert weight_neg(lam) == Weight(c, [0], [rat(-1, 2)])


def test_simple_root_frozen():
    c2 = cartan_data("A", 2, 5)
    assert str(simple_root(c2, 0)) == "((2,4),(0,-1))"
    assert simple_root(c2, 1) == embed(c2, [-1, 2])
    with pytest.raises(ValueError):
        simple_root(c2, 2)


_RANKED = [("A", 1, 3), ("A", 1, 5), ("A", 1, 7), ("A", 2, 3), ("A", 2, 5), ("B", 2, 7)]


@given(
    st.sampled_from(_RANKED),
    st.lists(st.integers(-40, 40), min_size=2, max_size=2),
    st.lists(st.integers(-40, 40), min_size=2, max_size=2),
)
def test_embedding_is_a_homomorphism(key, a, b):
    c = cartan_data(*key)
    a, b = a[: c.rank], b[: c.rank]
    lhs = weight_add(embed(c, a), embed(c, b))
    assert lhs == embed(c, [x + y for x, y in zip(a, b)])
    assert weight_neg(embed(c, a)) == embed(c, [-x for x in a])
    assert weight_sub(embed(c, a), embed(c, b)) == embed(c, [x - y for x, y in zip(a, b)])


_rational = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def _weights(c):
    return st.builds(
        lambda l0, l1: Weight(c, l0, [rat(str(x)) for x in l1]),
        st.lists(st.integers(0, c.ell - 1), min_size=c.rank, max_size=c.rank),
        st.lists(_rational, min_size=c.rank, max_size=c.rank),
    )


@given(st.data(), st.sampled_from(_RANKED))
def test_group_axioms(data, key):
    c = cartan_data(*key)
    lam = data.draw(_weights(c))
    mu = data.draw(_weights(c))
    nu = data.draw(_weights(c))
    assert weight_add(weight_add(lam, mu), nu) == weight_add(lam, weight_add(mu, nu))
    assert weight_add(lam, mu) == weight_add(mu, lam)
    assert weight_add(lam, weight_zero(c)) == lam
    assert weight_add(lam, weight_neg(lam)) == weight_zero(c)
    assert weight_sub(lam, mu) == weight_add(lam, weight_neg(mu))


def test_mixed_cartan_data_rejected():
    c5 = cartan_data("A", 1, 5)
    c7 = cartan_data("A", 1, 7)
    with pytest.raises(ValueError):
        weight_add(embed(c5, [1]), embed(c7, [1]))


def test_weight_validation():
    c = cartan_data("A", 1, 5)
    with pytest.raises(ValueError):
        Weight(c, [5], [0])  # bottom digit out of range
    with pytest.raises(ValueError):
        Weight(c, [-1], [0])
    with pytest.raises(ValueError):
        Weight(c, [1, 2], [0, 0])  # wrong length


def test_dominance_rank_one():
    c = cartan_data("A", 1, 5)
    assert dominance_leq(embed(c, [1]), embed(c, [7]))  # 7 - 1 = 3 * alpha
    assert not dominance_leq(embed(c, [1]), embed(c, [4]))  # odd difference
    assert not dominance_leq(embed(c, [7]), embed(c, [1]))  # negative coefficient
    assert dominance_leq(embed(c, [3]), embed(c, [3]))  # reflexive
    half = Weight(c, [0], [rat(1, 2)])
    assert not dominance_leq(weight_zero(c), half)  # non-integral difference


def test_dominance_rank_two():
    c = cartan_data("A", 2, 5)
    # (2,2) = 2*alpha_1 + 2*alpha_2
    assert dominance_leq(weight_zero(c), embed(c, [2, 2]))
    # (1,0) needs x_1 = 2/3: not an integer combination
    assert not dominance_leq(weight_zero(c), embed(c, [1, 0]))
    assert dominance_leq(embed(c, [1, 1]), embed(c, [1, 1]))


@given(st.integers(-10, 10), st.integers(0, 6))
def test_dominance_matches_root_shifts(m, k):
    c = cartan_data("A", 1, 7)
    lam = embed(c, [m])
    mu = embed(c, [m + 2 * k])
    assert dominance_leq(lam, mu)


def test_eval_weight():
    c = cartan_data("A", 1, 5)
    (k, b), = eval_weight(embed(c, [7]))
    assert k == zeta(5, 2) and b == 1
    g = cartan_data("G", 2, 5)
    pairs = eval_weight(embed(g, [1, 1]))
    assert pairs[0][0] == zeta(5, 3)  # first node has symmetrizer 3
    assert pairs[1][0] == zeta(5, 1)
    assert pairs[0][1] == 0 and pairs[1][1] == 0


def test_json_and_str():
    c = cartan_data("A", 2, 5)
    lam = Weight(c, [2, 0], [rat(1), rat(-1, 3)])
    assert lam.to_json() == {"lam0": [2, 0], "lam1": [1, "-1/3"]}
    assert str(lam) == "((2,0),(1,-1/3))"
    assert hash(lam) == hash(Weight(c, [2, 0], [1, rat(-1, 3)]))
