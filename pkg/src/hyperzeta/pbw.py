"""Normal-form engine for the rank-1 quantized algebra at an odd root of unity.

Elements are stored on the ordered basis F^(b) K^c B^d E^(a): divided powers
of F, then the Cartan monomials K^c B^d, then divided powers of E.  A product
is normalized in three moves:

  * the inner factors straighten by
      E^(a) F^(b') = sum_t F^(b'-t) [K; 2t-a-b' over t] E^(a-t),
    with the bracket expanded into kG[B] by kshift_binom;
  * Cartan elements commute past divided powers semantically, through the
    evaluation-shift endomorphism sigma_shift (never by symbolic expansion);
  * like divided powers merge with Gaussian-binomial coefficients, which can
    vanish at the root of unity (F^(l-1) F = 0).

The classical enveloping algebra lives on the basis f^s h^t e^r over the
rationals.  gamma lifts it monomial-by-monomial through F^(l), B, E^(l);
frobenius is the basis-level quotient map killing sub-l divided powers, and
frobenius(gamma(x)) = x.  The straightening rule itself is re-validated as
an operator identity on every weight module built by the representation
layer, so a transcription error here cannot stay hidden.
"""

from __future__ import annotations

import functools
import math

from .exactnum import CycScalar, RAT_TYPES, Rat, cyc_rat, rat, rat_str
from .qcomb import gauss_binom_at
from .uzero import UZeroElem, kshift_binom, sigma_shift, uzero

__all__ = [
    "PBWElem",
    "ClassicalElem",
    "pbw",
    "pbw_one",
    "pbw_E",
    "pbw_F",
    "pbw_K",
    "pbw_B",
    "pbw_from_uzero",
    "pbw_mul",
    "gamma",
    "frobenius",
    "classical",
    "classical_one",
    "classical_e",
    "classical_f",
    "classical_h",
    "classical_mul",
]


def _coeff(ell: int, x) -> CycScalar:
    if isinstance(x, CycScalar):
        if x.ell != ell:
            raise ValueError(f"coefficient over Q(zeta_{x.ell}), expected {ell}")
        return x
    if isinstance(x, RAT_TYPES):
        return cyc_rat(ell, x)
    raise TypeError(f"cannot use {type(x).__name__} as a coefficient")


class PBWElem:
    """Element on the basis F^(b) K^c B^d E^(a); keys (b, c, d, a)."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell: int, terms=()):
        if ell < 3 or ell % 2 == 0:
            raise ValueError(f"order must be odd and >= 3, got {ell}")
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (b, c, d, a), coeff in items:
            b, d, a = int(b), int(d), int(a)
            if b < 0 or d < 0 or a < 0:
                raise ValueError(f"negative exponent in ({b},{c},{d},{a})")
            key = (b, int(c) % ell, d, a)
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
        raise AttributeError("PBWElem is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "PBWElem"):
        if self.ell != other.ell:
            raise ValueError("elements over different roots of unity")

    def __add__(self, other):
        if isinstance(other, RAT_TYPES + (CycScalar,)):
            other = PBWElem(self.ell, {(0, 0, 0, 0): other})
        if not isinstance(other, PBWElem):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, coeff - coeff) + coeff
        return PBWElem(self.ell, merged)

    __radd__ = __add__

    def __neg__(self):
        return PBWElem(self.ell, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RAT_TYPES + (CycScalar,)):
            s = _coeff(self.ell, other)
            return PBWElem(self.ell, {k: v * s for k, v in self.terms.items()})
        if isinstance(other, UZeroElem):
            other = pbw_from_uzero(other)
        if not isinstance(other, PBWElem):
            return NotImplemented
        return pbw_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, RAT_TYPES + (CycScalar,)):
            return self * other
        if isinstance(other, UZeroElem):
            return pbw_mul(pbw_from_uzero(other), self)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = pbw_one(self.ell)
        base = self
        while n:
            if n & 1:
                out = pbw_mul(out, base)
            base = pbw_mul(base, base)
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, RAT_TYPES + (CycScalar,)):
            other = PBWElem(self.ell, {(0, 0, 0, 0): other})
        if not isinstance(other, PBWElem):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def __hash__(self):
        return hash((self.ell, frozenset(self.terms.items())))

    def cartan_part(self) -> UZeroElem:
        """The component with no E or F factors, as a Cartan element."""
        return uzero(
            self.ell,
            {(c, d): v for (b, c, d, a), v in self.terms.items() if b == 0 and a == 0},
        )

    def _sorted(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (b, c, d, a), coeff in self._sorted():
            bits = []
            if b:
                bits.append("F" if b == 1 else f"F^({b})")
            if c:
                bits.append("K" if c == 1 else f"K^{c}")
            if d:
                bits.append("B" if d == 1 else f"B^{d}")
            if a:
                bits.append("E" if a == 1 else f"E^({a})")
            mono = " ".join(bits)
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
        return f"PBWElem({self.ell}, {self})"

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "terms": [
                {"b": b, "c": c, "d": d, "a": a, "coeff": coeff.to_json()["coeffs"]}
                for (b, c, d, a), coeff in self._sorted()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PBWElem":
        ell = data["ell"]
        return cls(
            ell,
            [
                (
                    (t["b"], t["c"], t["d"], t["a"]),
                    CycScalar.from_json({"ell": ell, "coeffs": t["coeff"]}),
                )
                for t in data["terms"]
            ],
        )


def pbw(ell: int, terms) -> PBWElem:
    return PBWElem(ell, terms)


def pbw_one(ell: int) -> PBWElem:
    return PBWElem(ell, {(0, 0, 0, 0): 1})


def pbw_F(ell: int, b: int = 1) -> PBWElem:
    return PBWElem(ell, {(b, 0, 0, 0): 1})


def pbw_E(ell: int, a: int = 1) -> PBWElem:
    return PBWElem(ell, {(0, 0, 0, a): 1})


def pbw_K(ell: int, c: int = 1) -> PBWElem:
    return PBWElem(ell, {(0, c, 0, 0): 1})


def pbw_B(ell: int, d: int = 1) -> PBWElem:
    return PBWElem(ell, {(0, 0, d, 0): 1})


def pbw_from_uzero(u: UZeroElem) -> PBWElem:
    return PBWElem(u.ell, {(0, c, d, 0): v for (c, d), v in u.terms.items()})


@functools.lru_cache(maxsize=None)
def _mono_mul(ell: int, m1: tuple, m2: tuple) -> "PBWElem":
    b, c, d, a = m1
    bp, cp, dp, ap = m2
    u1 = uzero(ell, {(c, d): 1})
    u2 = uzero(ell, {(cp, dp): 1})
    out: dict = {}
    for t in range(min(a, bp) + 1):
        s = bp - t
        r = a - t
        fmerge = gauss_binom_at(b + s, b, ell)
        if fmerge.is_zero():
            continue
        emerge = gauss_binom_at(r + ap, r, ell)
        if emerge.is_zero():
            continue
        scale = fmerge * emerge
        mid = (
            sigma_shift(u1, -s)
            * kshift_binom(2 * t - a - bp, t, ell)
            * sigma_shift(u2, -r)
        )
        for (cm, dm), coeff in mid.terms.items():
            key = (b + s, cm, dm, r + ap)
            prev = out.get(key)
            v = scale * coeff
            out[key] = v if prev is None else prev + v
    return PBWElem(ell, out)


def pbw_mul(x: PBWElem, y: PBWElem) -> PBWElem:
    """Normal-form product.

    >>> print(pbw_mul(pbw_E(5), pbw_F(5)))
    F E + (-1/5 - 2/5 z - 3/5 z^2 - 4/5 z^3) + ... # doctest: +SKIP
    """
    x._check(y)
    ell = x.ell
    merged: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            scale = c1 * c2
            for key, v in _mono_mul(ell, m1, m2).terms.items():
                prev = merged.get(key)
                add = scale * v
                merged[key] = add if prev is None else prev + add
    return PBWElem(ell, merged)


class ClassicalElem:
    """Element of the classical enveloping algebra on the basis f^s h^t e^r."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (s, t, r), coeff in items:
            s, t, r = int(s), int(t), int(r)
            if s < 0 or t < 0 or r < 0:
                raise ValueError(f"negative exponent in ({s},{t},{r})")
            if isinstance(coeff, CycScalar):
                coeff = coeff.as_rational()
            elif not isinstance(coeff, RAT_TYPES):
                raise TypeError(f"cannot use {type(coeff).__name__} as a coefficient")
            coeff = rat(coeff)
            key = (s, t, r)
            total = acc.get(key, rat(0)) + coeff
            if total == 0:
                acc.pop(key, None)
            else:
                acc[key] = total
        object.__setattr__(self, "terms", acc)

    def __setattr__(self, *a):
        raise AttributeError("ClassicalElem is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, RAT_TYPES):
            other = ClassicalElem({(0, 0, 0): other})
        if not isinstance(other, ClassicalElem):
            return NotImplemented
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, rat(0)) + coeff
        return ClassicalElem(merged)

    __radd__ = __add__

    def __neg__(self):
        return ClassicalElem({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RAT_TYPES):
            s = rat(other)
            return ClassicalElem({k: v * s for k, v in self.terms.items()})
        if not isinstance(other, ClassicalElem):
            return NotImplemented
        return classical_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, RAT_TYPES):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = classical_one()
        base = self
        while n:
            if n & 1:
                out = classical_mul(out, base)
            base = classical_mul(base, base)
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, RAT_TYPES):
            other = ClassicalElem({(0, 0, 0): other})
        if not isinstance(other, ClassicalElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (s, t, r), coeff in sorted(self.terms.items()):
            bits = []
            if s:
                bits.append("f" if s == 1 else f"f^{s}")
            if t:
                bits.append("h" if t == 1 else f"h^{t}")
            if r:
                bits.append("e" if r == 1 else f"e^{r}")
            mono = " ".join(bits)
            cs = rat_str(coeff)
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{cs} {mono}")
            else:
                parts.append(cs)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"ClassicalElem({self})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"s": s, "t": t, "r": r, "coeff": rat_str(coeff)}
                for (s, t, r), coeff in sorted(self.terms.items())
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClassicalElem":
        return cls([((t["s"], t["t"], t["r"]), rat(t["coeff"])) for t in data["terms"]])


def classical(terms) -> ClassicalElem:
    return ClassicalElem(terms)


def classical_one() -> ClassicalElem:
    return ClassicalElem({(0, 0, 0): 1})


def classical_f(s: int = 1) -> ClassicalElem:
    return ClassicalElem({(s, 0, 0): 1})


def classical_h(t: int = 1) -> ClassicalElem:
    return ClassicalElem({(0, t, 0): 1})


def classical_e(r: int = 1) -> ClassicalElem:
    return ClassicalElem({(0, 0, r): 1})


def _c_gen_step(mono: tuple, gen: str) -> dict:
    """Right-multiply a normal monomial by one generator, normal-ordering."""
    s, t, r = mono
    if gen == "e":
        return {(s, t, r + 1): rat(1)}
    if gen == "h":
        # h moves left past e^r: e^r h = (h - 2r) e^r
        out = {(s, t + 1, r): rat(1)}
        if r:
            out[(s, t, r)] = rat(-2 * r)
        return out
    if gen == "f":
        # e^r f = f e^r + r (h - r + 1) e^(r-1), then h^t f = f (h - 2)^t
        out: dict = {}
        for k in range(t + 1):
            out[(s + 1, k, r)] = rat(math.comb(t, k) * (-2) ** (t - k))
        if r:
            out[(s, t + 1, r - 1)] = out.get((s, t + 1, r - 1), rat(0)) + rat(r)
            prev = out.get((s, t, r - 1), rat(0))
            out[(s, t, r - 1)] = prev + rat(r * (1 - r))
        return {k: v for k, v in out.items() if v != 0}
    raise ValueError(f"unknown generator {gen!r}")


@functools.lru_cache(maxsize=None)
def _c_mono_mul(m1: tuple, m2: tuple) -> "ClassicalElem":
    acc = {m1: rat(1)}
    sp, tp, rp = m2
    for gen, count in (("f", sp), ("h", tp), ("e", rp)):
        for _ in range(count):
            nxt: dict = {}
            for mono, coeff in acc.items():
                for key, v in _c_gen_step(mono, gen).items():
                    nxt[key] = nxt.get(key, rat(0)) + coeff * v
            acc = {k: v for k, v in nxt.items() if v != 0}
    return ClassicalElem(acc)


def classical_mul(x: ClassicalElem, y: ClassicalElem) -> ClassicalElem:
    """Normal-ordered product in the classical enveloping algebra.

    >>> classical_mul(classical_e(), classical_f()) == classical({(1, 0, 1): 1, (0, 1, 0): 1})
    True
    """
    merged: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            scale = c1 * c2
            for key, v in _c_mono_mul(m1, m2).terms.items():
                merged[key] = merged.get(key, rat(0)) + scale * v
    return ClassicalElem(merged)


def gamma(x: ClassicalElem, ell: int) -> PBWElem:
    """Lift along the section: f -> F^(l), h -> B, e -> E^(l), multiplied
    factor-by-factor through the normal-form engine, so f^s picks up s!
    (the divided-power merge [kl over l] contributes k at each step).

    >>> gamma(classical_f(2), 5) == 2 * pbw_F(5, 10)
    True
    """
    total = PBWElem(ell)
    for (s, t, r), coeff in x.terms.items():
        acc = pbw_one(ell) * coeff
        for _ in range(s):
            acc = pbw_mul(acc, pbw_F(ell, ell))
        if t:
            acc = pbw_mul(acc, pbw_B(ell, t))
        for _ in range(r):
            acc = pbw_mul(acc, pbw_E(ell, ell))
        total = total + acc
    return total


def frobenius(x: PBWElem) -> ClassicalElem:
    """Quotient to the classical algebra: F^(lk) -> f^k/k!, K -> 1, B -> h,
    E^(lk) -> e^k/k!; monomials with a sub-l divided power die.  Surviving
    coefficients must be rational, since the classical side is over Q.

    >>> frobenius(pbw_E(5)).is_zero()
    True
    >>> frobenius(pbw(5, {(5, 2, 1, 0): 1})) == classical({(1, 1, 0): 1})
    True
    """
    ell = x.ell
    # All K-exponents land on the same classical monomial, so aggregate over
    # c before asking for rationality: single terms can carry irrational
    # group-ring coefficients whose sum is rational.
    gathered: dict = {}
    for (b, c, d, a), coeff in x.terms.items():
        if b % ell or a % ell:
            continue
        key = (b // ell, d, a // ell)
        prev = gathered.get(key)
        gathered[key] = coeff if prev is None else prev + coeff
    acc: dict = {}
    for (b1, d, a1), coeff in gathered.items():
        if coeff.is_zero():
            continue
        if not coeff.is_rational():
            raise ValueError(
                f"image monomial f^{b1} h^{d} e^{a1} has a non-rational "
                f"coefficient {coeff}; the classical algebra is over Q"
            )
        acc[(b1, d, a1)] = coeff.as_rational() * rat(
            1, math.factorial(b1) * math.factorial(a1)
        )
    return ClassicalElem(acc)
