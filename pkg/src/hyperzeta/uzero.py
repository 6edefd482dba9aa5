"""The rank-1 Cartan subalgebra at an odd root of unity: kG[B].

Elements live on the basis K^c B^d with K^ell = 1 and B a central
polynomial generator.  Evaluation at an integer m sends K to zeta^m and
B to the top digit m1 of the short l-adic decomposition m = m0 + m1*l.
Evaluation is injective on integers, so elements are manipulated
semantically: build by interpolation against prescribed values, compare
by coefficients.  That avoids any symbolic expansion of the shifted
binomials [K; c over t] for t >= l; their degree in B is bounded by
floor(t/l) and the bound is re-verified on an extra sample row every
time an interpolation claims exact degree.

The tensor-square type covers the coproduct of B, which is supported on
W tensor W for W = span{K^c, K^c B}: evaluating both legs at integers
m, m' returns the top digit of m + m', exposing the carry between the
two levels of the weight group.
"""

from __future__ import annotations

import functools

from .exactnum import (
    CycScalar,
    ExactMatrix,
    Rat,
    RAT_TYPES,
    cyc_rat,
    inverse,
    kernel,
    rat,
    zeta,
)
from .qcomb import gauss_binom_at, short_ladic

__all__ = [
    "UZeroElem",
    "TensorSq",
    "uzero",
    "uzero_one",
    "uzero_K",
    "uzero_B",
    "uzero_eval",
    "uzero_eval_weight",
    "uzero_interpolate",
    "kshift_binom",
    "sigma_shift",
    "tensor_pair",
    "coproduct_B",
    "coproduct_W",
    "delta_defect",
    "primitive_element",
    "primitive_kernel",
]


def _coeff(ell: int, x) -> CycScalar:
    if isinstance(x, CycScalar):
        if x.ell != ell:
            raise ValueError(f"coefficient over Q(zeta_{x.ell}), expected {ell}")
        return x
    if isinstance(x, RAT_TYPES):
        return cyc_rat(ell, x)
    raise TypeError(f"cannot use {type(x).__name__} as a coefficient")


class UZeroElem:
    """An element of kG[B] on the monomial basis K^c B^d, c in [0, ell)."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell: int, terms=()):
        if ell < 3 or ell % 2 == 0:
            raise ValueError(f"order must be odd and >= 3, got {ell}")
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (c, d), coeff in items:
            d = int(d)
            if d < 0:
                raise ValueError(f"negative B exponent {d}")
            key = (int(c) % ell, d)
            coeff = _coeff(ell, coeff)
            prev = acc.get(key)
            coeff = coeff if prev is None else prev + coeff
            if coeff.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = coeff
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, *a):
        raise AttributeError("UZeroElem is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Largest B exponent, -1 for zero."""
        return max((d for _, d in self.terms), default=-1)

    def in_group_ring(self) -> bool:
        return self.degree() <= 0

    def _check(self, other: "UZeroElem"):
        if self.ell != other.ell:
            raise ValueError("elements over different roots of unity")

    def __add__(self, other):
        if isinstance(other, RAT_TYPES + (CycScalar,)):
            other = uzero(self.ell, {(0, 0): other})
        if not isinstance(other, UZeroElem):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, coeff - coeff) + coeff
        return UZeroElem(self.ell, merged)

    __radd__ = __add__

    def __neg__(self):
        return UZeroElem(self.ell, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RAT_TYPES + (CycScalar,)):
            s = _coeff(self.ell, other)
            return UZeroElem(self.ell, {k: v * s for k, v in self.terms.items()})
        if not isinstance(other, UZeroElem):
            return NotImplemented
        self._check(other)
        out: list = []
        for (c, d), u in self.terms.items():
            for (cp, dp), v in other.terms.items():
                out.append((((c + cp) % self.ell, d + dp), u * v))
        return UZeroElem(self.ell, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = uzero_one(self.ell)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RAT_TYPES + (CycScalar,)):
            other = uzero(self.ell, {(0, 0): other})
        if not isinstance(other, UZeroElem):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def __hash__(self):
        return hash((self.ell, frozenset(self.terms.items())))

    def _sorted(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (c, d), coeff in self._sorted():
            mono = " ".join(
                p
                for p in (
                    "" if c == 0 else ("K" if c == 1 else f"K^{c}"),
                    "" if d == 0 else ("B" if d == 1 else f"B^{d}"),
                )
                if p
            )
            cs = str(coeff)
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append(f"-{mono}")
                elif " " in cs:
                    parts.append(f"({cs}) {mono}")
                else:
                    parts.append(f"{cs} {mono}")
            else:
                parts.append(f"({cs})" if " " in cs else cs)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"UZeroElem({self.ell}, {self})"

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "terms": [
                {"c": c, "d": d, "coeff": coeff.to_json()["coeffs"]}
                for (c, d), coeff in self._sorted()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "UZeroElem":
        ell = data["ell"]
        return cls(
            ell,
            [
                ((t["c"], t["d"]), CycScalar.from_json({"ell": ell, "coeffs": t["coeff"]}))
                for t in data["terms"]
            ],
        )


def uzero(ell: int, terms) -> UZeroElem:
    """Build an element from a map or item list (c, d) -> coefficient."""
    return UZeroElem(ell, terms)


def uzero_one(ell: int) -> UZeroElem:
    return UZeroElem(ell, {(0, 0): 1})


def uzero_K(ell: int, c: int = 1) -> UZeroElem:
    return UZeroElem(ell, {(c, 0): 1})


def uzero_B(ell: int) -> UZeroElem:
    return UZeroElem(ell, {(0, 1): 1})


def uzero_eval(u: UZeroElem, m: int) -> CycScalar:
    """Evaluate at the integer m: K -> zeta^m, B -> top digit of m.

    >>> print(uzero_eval(uzero_K(5), 7))
    z^2
    >>> print(uzero_eval(uzero_B(5), 7))
    1
    """
    m = int(m)
    m1 = short_ladic(m, u.ell).m1
    total = cyc_rat(u.ell, 0)
    for (c, d), coeff in u.terms.items():
        total = total + coeff * zeta(u.ell, (c * m) % u.ell) * (m1**d)
    return total


def uzero_eval_weight(u: UZeroElem, lam0: int, lam1) -> CycScalar:
    """Evaluate against a rank-1 weight: K -> zeta^lam0, B -> lam1."""
    if not 0 <= lam0 < u.ell:
        raise ValueError(f"bottom digit {lam0} outside [0, {u.ell})")
    lam1 = rat(lam1)
    total = cyc_rat(u.ell, 0)
    for (c, d), coeff in u.terms.items():
        total = total + coeff * zeta(u.ell, (c * lam0) % u.ell) * (lam1**d)
    return total


@functools.lru_cache(maxsize=None)
def _vandermonde_inverse(npoints: int) -> ExactMatrix:
    """Inverse of the integer-node Vandermonde on nodes 0..npoints-1."""
    v = ExactMatrix([[rat(i**j) for j in range(npoints)] for i in range(npoints)])
    return inverse(v)


def uzero_interpolate(values, dmax: int, ell: int, exact_degree: bool = True) -> UZeroElem:
    """The unique element of B-degree <= dmax matching values(m) on the grid
    m = m0 + l*m1, m0 in [0, l), m1 in [0, dmax].

    Two structured stages: an inverse root-of-unity transform per sample row
    recovers, for each K-exponent c, the values of a degree-<= dmax
    polynomial in m1; an integer-node Vandermonde solve recovers its
    coefficients.  With exact_degree, the result is re-evaluated on the
    independent row m1 = dmax + 1; disagreement means the claimed degree
    bound is wrong and raises ArithmeticError.

    >>> u = uzero_interpolate(lambda m: zeta(5, m % 5), 0, 5)
    >>> u == uzero_K(5)
    True
    >>> uzero_interpolate(lambda m: short_ladic(m, 5).m1, 1, 5) == uzero_B(5)
    True
    """
    if dmax < 0:
        raise ValueError(f"degree bound must be >= 0, got {dmax}")
    samples = [
        [_coeff(ell, values(m0 + ell * m1)) for m0 in range(ell)]
        for m1 in range(dmax + 1)
    ]
    inv_ell = rat(1, ell)
    # g[c][m1]: the inverse transform (1/l) sum_m0 values zeta^(-c*m0).
    g = [
        [
            sum(
                (row[m0] * zeta(ell, (-c * m0) % ell) for m0 in range(ell)),
                cyc_rat(ell, 0),
            )
            * inv_ell
            for row in samples
        ]
        for c in range(ell)
    ]
    terms = {}
    if dmax == 0:
        for c in range(ell):
            terms[(c, 0)] = g[c][0]
    else:
        vinv = _vandermonde_inverse(dmax + 1).rows
        for c in range(ell):
            for d in range(dmax + 1):
                coeff = sum(
                    (vinv[d][m1] * g[c][m1] for m1 in range(dmax + 1)),
                    cyc_rat(ell, 0),
                )
                terms[(c, d)] = coeff
    u = UZeroElem(ell, terms)
    if exact_degree:
        m1 = dmax + 1
        for m0 in range(ell):
            m = m0 + ell * m1
            if uzero_eval(u, m) != _coeff(ell, values(m)):
                raise ArithmeticError(
                    f"interpolation failed its check row at m={m}: "
                    f"the degree bound {dmax} is too small"
                )
    return u


@functools.lru_cache(maxsize=None)
def kshift_binom(c: int, t: int, ell: int) -> UZeroElem:
    """The element whose value at every integer m is gauss_binom_at(m+c, t).

    The B-degree is floor(t/l); below l the result lies in the group ring.

    >>> kshift_binom(0, 5, 5) == uzero_B(5)
    True
    >>> kshift_binom(0, 0, 5) == uzero_one(5)
    True
    """
    if t < 0:
        raise ValueError(f"binomial depth must be >= 0, got {t}")
    u = uzero_interpolate(lambda m: gauss_binom_at(m + c, t, ell), t // ell, ell)
    if t < ell and not u.in_group_ring():
        raise ArithmeticError("shifted binomial below depth l left the group ring")
    return u


@functools.lru_cache(maxsize=None)
def _carry_indicator(s0: int, ell: int) -> UZeroElem:
    """Group-ring element valued 1 exactly when m0 + s0 carries past l."""
    if not 0 <= s0 < ell:
        raise ValueError(f"carry offset {s0} outside [0, {ell})")
    return uzero_interpolate(lambda m: 1 if m % ell >= ell - s0 else 0, 0, ell)


@functools.lru_cache(maxsize=None)
def _shifted_B_pow(s0: int, s1: int, d: int, ell: int) -> UZeroElem:
    base = uzero_B(ell) + uzero(ell, {(0, 0): s1}) + _carry_indicator(s0, ell)
    return base**d


@functools.lru_cache(maxsize=None)
def _sigma_mono(c: int, d: int, s0: int, s1: int, ell: int) -> UZeroElem:
    phase = zeta(ell, (c * s0) % ell)
    body = _shifted_B_pow(s0, s1, d, ell)
    return UZeroElem(
        ell, {((c + cc) % ell, dd): phase * v for (cc, dd), v in body.terms.items()}
    )


def sigma_shift(u: UZeroElem, a: int) -> UZeroElem:
    """The algebra endomorphism with eval(sigma_shift(u, a), m) = eval(u, m + 2a).

    On monomials: K^c B^d maps to zeta^(c*s) K^c (B + s1 + carry_s0)^d where
    s = 2a = s0 + s1*l; the carry indicator accounts for bottom-digit overflow.
    Bijective, with inverse sigma_shift(-, -a).

    >>> sigma_shift(uzero_K(5), 1) == zeta(5, 2) * uzero_K(5)
    True
    """
    ell = u.ell
    s0, s1 = short_ladic(2 * a, ell)
    merged: dict = {}
    for (c, d), coeff in u.terms.items():
        for key, v in _sigma_mono(c, d, s0, s1, ell).terms.items():
            prev = merged.get(key)
            merged[key] = coeff * v if prev is None else prev + coeff * v
    return UZeroElem(ell, merged)


class TensorSq:
    """An element of W tensor W, W the 2l-dimensional span of K^c and K^c B."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell: int, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (left, right), coeff in items:
            left = (int(left[0]) % ell, int(left[1]))
            right = (int(right[0]) % ell, int(right[1]))
            if left[1] not in (0, 1) or right[1] not in (0, 1):
                raise ValueError("tensor legs must have B-degree 0 or 1")
            coeff = _coeff(ell, coeff)
            key = (left, right)
            prev = acc.get(key)
            coeff = coeff if prev is None else prev + coeff
            if coeff.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = coeff
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, *a):
        raise AttributeError("TensorSq is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if self.ell != other.ell:
            raise ValueError("tensors over different roots of unity")

    def __add__(self, other):
        if not isinstance(other, TensorSq):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, coeff - coeff) + coeff
        return TensorSq(self.ell, merged)

    def __neg__(self):
        return TensorSq(self.ell, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, TensorSq):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def __hash__(self):
        return hash((self.ell, frozenset(self.terms.items())))

    def swap(self) -> "TensorSq":
        return TensorSq(self.ell, {(r, l): v for (l, r), v in self.terms.items()})

    def eval_pair(self, m: int, mp: int) -> CycScalar:
        """Evaluate the left leg at m and the right leg at mp."""
        m1 = short_ladic(m, self.ell).m1
        mp1 = short_ladic(mp, self.ell).m1
        total = cyc_rat(self.ell, 0)
        for ((c, d), (cp, dp)), coeff in self.terms.items():
            total = total + (
                coeff
                * zeta(self.ell, (c * m) % self.ell)
                * (m1**d)
                * zeta(self.ell, (cp * mp) % self.ell)
                * (mp1**dp)
            )
        return total

    def eval_pair_weight(self, lam0: int, lam1, mu0: int, mu1) -> CycScalar:
        """Evaluate the legs against two rank-1 weights."""
        lam1, mu1 = rat(lam1), rat(mu1)
        total = cyc_rat(self.ell, 0)
        for ((c, d), (cp, dp)), coeff in self.terms.items():
            total = total + (
                coeff
                * zeta(self.ell, (c * lam0) % self.ell)
                * (lam1**d)
                * zeta(self.ell, (cp * mu0) % self.ell)
                * (mu1**dp)
            )
        return total

    def __str__(self):
        if not self.terms:
            return "0"

        def leg(c, d):
            s = "".join(
                ["" if c == 0 else ("K" if c == 1 else f"K^{c}"), "B" if d else ""]
            )
            return s or "1"

        parts = []
        for (l, r), coeff in sorted(self.terms.items()):
            cs = str(coeff)
            head = "" if cs == "1" else (f"({cs}) " if " " in cs else f"{cs} ")
            parts.append(f"{head}{leg(*l)}(x){leg(*r)}")
        return " + ".join(parts)


def tensor_pair(u: UZeroElem, v: UZeroElem) -> TensorSq:
    """u tensor v for two elements of W (B-degree <= 1)."""
    if u.ell != v.ell:
        raise ValueError("tensors over different roots of unity")
    if u.degree() > 1 or v.degree() > 1:
        raise ValueError("tensor legs must lie in W (B-degree <= 1)")
    out = []
    for ku, cu in u.terms.items():
        for kv, cv in v.terms.items():
            out.append(((ku, kv), cu * cv))
    return TensorSq(u.ell, out)


@functools.lru_cache(maxsize=None)
def coproduct_B(ell: int) -> TensorSq:
    """The coproduct of B on W tensor W:

        sum_{j=0}^{l} binom(K, l-j) K^(-j) tensor binom(K, j) K^(l-j)

    with the partial binomials expanded into the group ring.  The edge
    terms are B tensor 1 and 1 tensor B; evaluating both legs at integers
    m, m' returns the top digit of m + m' (the carry law).
    """
    total = TensorSq(ell)
    for j in range(ell + 1):
        left = kshift_binom(0, ell - j, ell) * uzero_K(ell, -j)
        right = kshift_binom(0, j, ell) * uzero_K(ell, ell - j)
        total = total + tensor_pair(left, right)
    return total


def coproduct_W(u: UZeroElem) -> TensorSq:
    """Coproduct of an element of W: K^c is group-like, B carries."""
    ell = u.ell
    db = coproduct_B(ell)
    total = TensorSq(ell)
    for (c, d), coeff in u.terms.items():
        if d == 0:
            total = total + TensorSq(ell, {((c, 0), (c, 0)): coeff})
        else:
            shifted = {
                (((lc + c) % ell, ld), ((rc + c) % ell, rd)): coeff * v
                for ((lc, ld), (rc, rd)), v in db.terms.items()
            }
            total = total + TensorSq(ell, shifted)
    return total


def delta_defect(u: UZeroElem) -> TensorSq:
    """Delta(u) - u tensor 1 - 1 tensor u; zero exactly on primitives."""
    one = uzero_one(u.ell)
    return coproduct_W(u) - tensor_pair(u, one) - tensor_pair(one, u)


@functools.lru_cache(maxsize=None)
def primitive_element(ell: int) -> UZeroElem:
    """The unique primitive element of W, normalized with coefficient 1 on B:

        B + sum_i a_i K^i,  a_i = (1/l^2) sum_j j zeta^(-i*j)

    so a_0 = (l-1)/(2l).  Verified primitive at construction.

    >>> primitive_element(3).terms[(0, 0)] == cyc_rat(3, rat(1, 3))
    True
    """
    inv = rat(1, ell * ell)
    terms: dict = {(0, 1): cyc_rat(ell, 1)}
    for i in range(ell):
        total = cyc_rat(ell, 0)
        for j in range(ell):
            total = total + j * zeta(ell, (-i * j) % ell)
        terms[(i, 0)] = total * inv
    p = UZeroElem(ell, terms)
    if not delta_defect(p).is_zero():
        raise ArithmeticError("claimed primitive element failed its defect check")
    return p


def primitive_kernel(ell: int) -> list:
    """Basis of the solutions x in W of Delta(x) = x tensor 1 + 1 tensor x.

    Found as the kernel of the defect map from W (dimension 2l) into
    W tensor W; the space is 1-dimensional.
    """
    basis = [(c, d) for d in (0, 1) for c in range(ell)]
    pair_index = {p: i for i, p in enumerate((l, r) for l in basis for r in basis)}
    zero = cyc_rat(ell, 0)
    cols = []
    for key in basis:
        defect = delta_defect(uzero(ell, {key: 1}))
        col = [zero] * len(pair_index)
        for pair, coeff in defect.terms.items():
            col[pair_index[pair]] = coeff
        cols.append(col)
    m = ExactMatrix(list(zip(*cols)))
    out = []
    for vec in kernel(m):
        out.append(uzero(ell, {basis[i]: vec[i] for i in range(len(basis))}))
    return out
