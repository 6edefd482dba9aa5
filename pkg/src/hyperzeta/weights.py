"""Weight combinatorics for symmetrizable Cartan data at an odd modulus l.

A weight is a pair (lam0, lam1) with lam0 in [0, l)^n and lam1 in Q^n.
Integral weights embed componentwise by the short l-adic decomposition,
and the group law carries between the two levels:

    (lam + mu)0_i = (lam0_i + mu0_i) mod l
    (lam + mu)1_i = lam1_i + mu1_i + [lam0_i + mu0_i >= l]

which makes the embedding of Z^n a group homomorphism.  Negation branches
on whether a bottom digit is zero.  Dominance is decided exactly: mu - lam
must be a nonnegative-integer combination of the simple-root images, found
by solving against the Cartan matrix over Q.

CartanData instances are cached per (type, rank, l) and weights hold their
datum by reference identity; mixing data is an error, never a coercion.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .exactnum import ExactMatrix, rat, rat_str, solve, zeta
from .exactnum import rank as matrix_rank
from .qcomb import short_ladic

__all__ = [
    "CartanData",
    "Weight",
    "cartan_data",
    "embed",
    "weight_add",
    "weight_neg",
    "weight_sub",
    "weight_zero",
    "simple_root",
    "dominance_leq",
    "eval_weight",
]


def _symmetrizers(matrix: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Minimal positive integers d with d_i a_ij = d_j a_ji, by propagation."""
    n = len(matrix)
    ratios: list = [None] * n
    for start in range(n):
        if ratios[start] is not None:
            continue
        ratios[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i == j or matrix[i][j] == 0:
                    continue
                if matrix[j][i] == 0:
                    raise ValueError("asymmetric zero pattern is not symmetrizable")
                want = ratios[i] * Fraction(matrix[i][j], matrix[j][i])
                if ratios[j] is None:
                    ratios[j] = want
                    queue.append(j)
                elif ratios[j] != want:
                    raise ValueError("Cartan matrix is not symmetrizable")
    denom_lcm = 1
    for r in ratios:
        denom_lcm = denom_lcm * r.denominator // _gcd(denom_lcm, r.denominator)
    scaled = [int(r * denom_lcm) for r in ratios]
    g = 0
    for v in scaled:
        g = _gcd(g, v)
    return tuple(v // g for v in scaled)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


class CartanData:
    """A symmetrizable Cartan matrix with symmetrizers and odd modulus l."""

    __slots__ = ("matrix", "d", "ell", "rank", "label")

    def __init__(self, matrix, ell: int, label: str = ""):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(matrix)
        if n == 0 or any(len(row) != n for row in matrix):
            raise ValueError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if matrix[i][i] != 2:
                raise ValueError(f"diagonal entry {matrix[i][i]} at {i}, expected 2")
            for j in range(n):
                if i != j and matrix[i][j] > 0:
                    raise ValueError(f"positive off-diagonal entry at ({i},{j})")
        if ell < 3 or ell % 2 == 0:
            raise ValueError(f"modulus must be odd and >= 3, got {ell}")
        d = _symmetrizers(matrix)
        if any(x not in (1, 2, 3) for x in d):
            raise ValueError(f"symmetrizers {d} outside {{1,2,3}}")
        if any(x == 3 for x in d) and ell % 3 == 0:
            raise ValueError(f"triple bond needs l prime to 3, got l={ell}")
        for i in range(n):
            for j in range(n):
                if d[i] * matrix[i][j] != d[j] * matrix[j][i]:
                    raise ValueError("symmetrization failed")
        exact = ExactMatrix([[rat(x) for x in row] for row in matrix])
        if matrix_rank(exact) != n:
            raise ValueError("Cartan matrix is singular")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "rank", n)
        object.__setattr__(self, "label", label or f"rank{n}")

    def __setattr__(self, *a):
        raise AttributeError("CartanData is immutable")

    def __repr__(self):
        return f"CartanData({self.label}, ell={self.ell})"


_CHAIN_TYPES = {"A": 1, "B": 2, "C": 2, "D": 4}
_E_EDGES = {
    6: [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
    7: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)],
    8: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)],
}


def _matrix_for(letter: str, n: int) -> list[list[int]]:
    def blank():
        return [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    m = blank()

    def bond(i, j, down=1, up=1):
        m[i][j] = -down
        m[j][i] = -up

    if letter == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif letter == "B":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, down=1, up=2)  # short root last: d = (2,..,2,1)
    elif letter == "C":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, down=2, up=1)  # long root last: d = (1,..,1,2)
    elif letter == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif letter == "E":
        for i, j in _E_EDGES[n]:
            bond(i, j)
    elif letter == "F":
        bond(0, 1)
        bond(1, 2, down=1, up=2)  # d = (2,2,1,1)
        bond(2, 3)
    elif letter == "G":
        bond(0, 1, down=1, up=3)  # d = (3,1)
    return m


@functools.lru_cache(maxsize=None)
def cartan_data(letter: str, rank: int, ell: int) -> CartanData:
    """Cached CartanData for a finite type; identical arguments share one
    instance, so weights built from the same call are interoperable.

    >>> cartan_data("A", 1, 5).d
    (1,)
    >>> cartan_data("G", 2, 5).d
    (3, 1)
    """
    letter = letter.upper()
    valid = {"A": rank >= 1, "B": rank >= 2, "C": rank >= 2, "D": rank >= 4,
             "E": rank in (6, 7, 8), "F": rank == 4, "G": rank == 2}
    if letter not in valid:
        raise ValueError(f"unknown type {letter!r}")
    if not valid[letter]:
        raise ValueError(f"rank {rank} invalid for type {letter}")
    return CartanData(_matrix_for(letter, rank), ell, label=f"{letter}{rank}")


class Weight:
    """A weight (lam0, lam1) over a fixed CartanData.

    >>> c = cartan_data("A", 1, 5)
    >>> print(embed(c, [7]))
    ((2),(1))
    """

    __slots__ = ("cartan", "lam0", "lam1")

    def __init__(self, cartan: CartanData, lam0, lam1):
        lam0 = tuple(int(x) for x in lam0)
        lam1 = tuple(rat(x) for x in lam1)
        if len(lam0) != cartan.rank or len(lam1) != cartan.rank:
            raise ValueError("weight length does not match rank")
        if any(not 0 <= x < cartan.ell for x in lam0):
            raise ValueError(f"bottom digits must lie in [0, {cartan.ell}): {lam0}")
        object.__setattr__(self, "cartan", cartan)
        object.__setattr__(self, "lam0", lam0)
        object.__setattr__(self, "lam1", lam1)

    def __setattr__(self, *a):
        raise AttributeError("Weight is immutable")

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return (
            self.cartan is other.cartan
            and self.lam0 == other.lam0
            and self.lam1 == other.lam1
        )

    def __hash__(self):
        return hash((id(self.cartan), self.lam0, self.lam1))

    def __add__(self, other):
        return weight_add(self, other)

    def __sub__(self, other):
        return weight_sub(self, other)

    def __neg__(self):
        return weight_neg(self)

    def is_integral(self) -> bool:
        return all(x == int(x) for x in self.lam1)

    def sort_key(self):
        return (self.lam0, tuple(Fraction(str(x)) for x in self.lam1))

    def __str__(self):
        l0 = ",".join(str(x) for x in self.lam0)
        l1 = ",".join(rat_str(x) for x in self.lam1)
        return f"(({l0}),({l1}))"

    def __repr__(self):
        return f"Weight{self}"

    def to_json(self) -> dict:
        lam1 = [int(x) if x == int(x) else rat_str(x) for x in self.lam1]
        return {"lam0": list(self.lam0), "lam1": lam1}


def _check_same(lam: Weight, mu: Weight):
    if lam.cartan is not mu.cartan:
        raise ValueError("weights over different Cartan data")


def weight_zero(cartan: CartanData) -> Weight:
    return Weight(cartan, (0,) * cartan.rank, (0,) * cartan.rank)


def embed(cartan: CartanData, m) -> Weight:
    """Componentwise short l-adic embedding of an integer vector.

    >>> c = cartan_data("A", 1, 5)
    >>> print(embed(c, [-7]))
    ((3),(-2))
    """
    m = tuple(int(x) for x in m)
    if len(m) != cartan.rank:
        raise ValueError("vector length does not match rank")
    digits = [short_ladic(x, cartan.ell) for x in m]
    return Weight(cartan, [t.m0 for t in digits], [t.m1 for t in digits])


def weight_add(lam: Weight, mu: Weight) -> Weight:
    """Carrying group law, matching the embedding of integer addition.

    >>> c = cartan_data("A", 1, 5)
    >>> weight_add(embed(c, [3]), embed(c, [4])) == embed(c, [7])
    True
    """
    _check_same(lam, mu)
    ell = lam.cartan.ell
    lam0, lam1 = [], []
    for a0, a1, b0, b1 in zip(lam.lam0, lam.lam1, mu.lam0, mu.lam1):
        s = a0 + b0
        carry = 1 if s >= ell else 0
        lam0.append(s - carry * ell)
        lam1.append(a1 + b1 + carry)
    return Weight(lam.cartan, lam0, lam1)


def weight_neg(lam: Weight) -> Weight:
    """Branching negation: zero bottom digits negate the top only; nonzero
    bottom digits flip to l - digit with a borrow on top."""
    lam0, lam1 = [], []
    for a0, a1 in zip(lam.lam0, lam.lam1):
        if a0 == 0:
            lam0.append(0)
            lam1.append(-a1)
        else:
            lam0.append(lam.cartan.ell - a0)
            lam1.append(-a1 - 1)
    return Weight(lam.cartan, lam0, lam1)


def weight_sub(lam: Weight, mu: Weight) -> Weight:
    _check_same(lam, mu)
    return weight_add(lam, weight_neg(mu))


def simple_root(cartan: CartanData, i: int) -> Weight:
    """Image of the i-th simple root: the embedded i-th Cartan column.

    >>> c2 = cartan_data("A", 2, 5)
    >>> print(simple_root(c2, 0))
    ((2,4),(0,-1))
    """
    if not 0 <= i < cartan.rank:
        raise ValueError(f"root index {i} out of range")
    return embed(cartan, [cartan.matrix[j][i] for j in range(cartan.rank)])


def dominance_leq(lam: Weight, mu: Weight) -> bool:
    """lam <= mu iff mu - lam is a nonnegative-integer combination of the
    simple-root images; decided by an exact solve against the Cartan matrix."""
    _check_same(lam, mu)
    diff = weight_sub(mu, lam)
    if not diff.is_integral():
        return False
    cartan = lam.cartan
    target = [d0 + cartan.ell * int(d1) for d0, d1 in zip(diff.lam0, diff.lam1)]
    a = ExactMatrix([[rat(x) for x in row] for row in cartan.matrix])
    b = ExactMatrix([[rat(t)] for t in target])
    x = solve(a, b)
    for row in x.rows:
        v = row[0]
        if v != int(v) or v < 0:
            return False
    return True


def eval_weight(lam: Weight) -> tuple:
    """Per-node scalars of the weight character: (zeta^(d_i * lam0_i), lam1_i).

    >>> c = cartan_data("A", 1, 5)
    >>> k, b = eval_weight(embed(c, [7]))[0]
    >>> k == zeta(5, 2) and b == 1
    True
    """
    cartan = lam.cartan
    out = []
    for i in range(cartan.rank):
        out.append((zeta(cartan.ell, cartan.d[i] * lam.lam0[i]), lam.lam1[i]))
    return tuple(out)
