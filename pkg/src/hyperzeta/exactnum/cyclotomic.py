"""Exact arithmetic in the cyclotomic field Q(zeta_ell), ell odd and >= 3.

Elements are residues modulo the ell-th cyclotomic polynomial Phi_ell, kept
as coefficient vectors of length deg Phi_ell = euler_phi(ell).  Phi_ell is
computed by dividing x^ell - 1 by the product of Phi_d over proper divisors
d of ell, so no factorization oracle is needed.  Inverses come from the
extended Euclidean algorithm against Phi_ell; since Phi_ell is irreducible
over Q the gcd is a nonzero constant for every nonzero element.

The canonical form (reduced vector) makes equality a tuple comparison.
Everything is immutable and safe to share across threads.
"""

from __future__ import annotations

import functools

from .ground import Rat, RAT_TYPES, rat, rat_str

__all__ = ["CycScalar", "cyclotomic_poly", "cyc_make", "zeta", "cyc_rat", "specialize"]


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Dense ascending coefficients of the n-th cyclotomic polynomial.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(3)
    (1, 1, 1)
    >>> cyclotomic_poly(9)
    (1, 0, 0, 1, 0, 0, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    # x^n - 1 divided by all proper-divisor cyclotomics, exactly.
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _int_poly_exact_div(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1]
        if c % b[-1] != 0:
            raise ArithmeticError("inexact integer polynomial division")
        q[k] = c // b[-1]
        for i, bi in enumerate(b):
            a[k + i] -= q[k] * bi
    if any(a):
        raise ArithmeticError("nonzero remainder in cyclotomic construction")
    return q


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    # Dense lists of Rat over the field Q; b nonzero.
    a = a[:]
    if len(a) < len(b):
        return [], a
    inv_lead = 1 / Rat(b[-1])
    q = [Rat(0)] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv_lead
        q[k] = c
        if c:
            for i, bi in enumerate(b):
                a[k + i] -= c * bi
    return _trim(q), _trim(a)


class _Field:
    """Shared per-ell data: Phi_ell, power-reduction table, zeta powers."""

    __slots__ = ("ell", "phi", "phi_coeffs", "xpow", "zeta_pow")

    def __init__(self, ell: int):
        if ell < 3 or ell % 2 == 0:
            raise ValueError(f"root-of-unity order must be odd and >= 3, got {ell}")
        self.ell = ell
        self.phi_coeffs = tuple(Rat(c) for c in cyclotomic_poly(ell))
        self.phi = len(self.phi_coeffs) - 1
        # x^k mod Phi_ell for 0 <= k <= max(2*phi - 2, ell - 1): enough for
        # products of reduced vectors and for all zeta powers.
        top = max(2 * self.phi - 2, ell - 1)
        table = []
        cur = [Rat(0)] * self.phi
        cur[0] = Rat(1)
        table.append(tuple(cur))
        # x^phi == -(low-degree part of Phi) since Phi is monic
        wrap = tuple(-c for c in self.phi_coeffs[: self.phi])
        for _ in range(top):
            lead = cur[-1]
            nxt = [Rat(0)] + cur[:-1]
            if lead:
                nxt = [nxt[i] + lead * wrap[i] for i in range(self.phi)]
            cur = nxt
            table.append(tuple(cur))
        self.xpow = tuple(table)
        self.zeta_pow = tuple(table[k] for k in range(ell))


@functools.lru_cache(maxsize=None)
def _field(ell: int) -> _Field:
    return _Field(ell)


class CycScalar:
    """An element of Q(zeta_ell) in canonical reduced form.

    >>> x = zeta(5) + zeta(5, 4)          # zeta + zeta^-1
    >>> (x * x + x - 1).is_zero()         # 2cos(2pi/5) solves t^2 + t - 1
    True
    >>> (zeta(5, 2) - zeta(5, 3)) / (zeta(5) - zeta(5, 4)) == x
    True
    """

    __slots__ = ("ell", "coeffs")

    def __init__(self, ell: int, coeffs):
        f = _field(ell)
        coeffs = tuple(Rat(c) for c in coeffs)
        if len(coeffs) != f.phi:
            raise ValueError(f"expected {f.phi} coefficients for ell={ell}, got {len(coeffs)}")
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycScalar is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def _reduced(ell: int, vec: list) -> "CycScalar":
        out = CycScalar.__new__(CycScalar)
        object.__setattr__(out, "ell", ell)
        object.__setattr__(out, "coeffs", tuple(vec))
        return out

    # -- helpers --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.ell != self.ell:
                raise ValueError(f"mixed cyclotomic orders {self.ell} and {other.ell}")
            return other
        if isinstance(other, RAT_TYPES):
            return cyc_rat(self.ell, other)
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(f"not a rational element: {self}")
        return self.coeffs[0]

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar._reduced(self.ell, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._reduced(self.ell, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar._reduced(self.ell, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = _field(self.ell)
        n = f.phi
        a, b = self.coeffs, o.coeffs
        conv = [Rat(0)] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        vec = list(conv[:n])
        for k in range(n, 2 * n - 1):
            ck = conv[k]
            if ck:
                row = f.xpow[k]
                for i in range(n):
                    vec[i] += ck * row[i]
        return CycScalar._reduced(self.ell, vec)

    __rmul__ = __mul__

    def inv(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        f = _field(self.ell)
        phi = list(f.phi_coeffs)
        r0, r1 = _trim(list(self.coeffs)), phi
        s0, s1 = [Rat(1)], []
        while r1:
            q, r2 = _poly_divmod(r0, r1)
            qs = _pmul(q, s1)
            s2 = [x - y for x, y in _zip_pad(s0, qs)]
            r0, r1 = r1, r2
            s0, s1 = s1, _trim(s2)
        # r0 is a nonzero constant: Phi_ell is irreducible over Q
        c = r0[0]
        inv_vec = [x / c for x in s0]
        inv_vec += [Rat(0)] * (f.phi - len(inv_vec))
        return CycScalar._reduced(self.ell, inv_vec[: f.phi])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base, n = self.inv(), -n
        out = cyc_rat(self.ell, 1)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.ell == other.ell and self.coeffs == other.coeffs
        if isinstance(other, RAT_TYPES):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ell, self.coeffs))

    # -- presentation ---------------------------------------------------

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = c if c > 0 else -c
            if k == 0:
                body = rat_str(mag)
            else:
                v = "z" if k == 1 else f"z^{k}"
                body = v if mag == 1 else f"{rat_str(mag)} {v}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CycScalar({self.ell}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"ell": self.ell, "coeffs": [rat_str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj: dict) -> "CycScalar":
        return CycScalar(obj["ell"], [rat(c) for c in obj["coeffs"]])


def _zip_pad(a: list, b: list):
    n = max(len(a), len(b))
    za = a + [Rat(0)] * (n - len(a))
    zb = b + [Rat(0)] * (n - len(b))
    return zip(za, zb)


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Rat(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def cyc_make(ell: int, poly) -> CycScalar:
    """Element from a {exponent: coefficient} mapping in zeta; exponents
    are taken mod ell (zeta^ell = 1 holds by construction).

    >>> cyc_make(5, {0: 1, 5: -1}).is_zero()
    True
    """
    f = _field(ell)
    vec = [Rat(0)] * f.phi
    for e, c in poly.items():
        if not c:
            continue
        row = f.zeta_pow[e % ell]
        c = Rat(c)
        for i in range(f.phi):
            vec[i] += c * row[i]
    return CycScalar._reduced(ell, vec)


def zeta(ell: int, k: int = 1) -> CycScalar:
    """The root of unity zeta_ell^k in canonical form."""
    f = _field(ell)
    return CycScalar._reduced(ell, list(f.zeta_pow[k % ell]))


def cyc_rat(ell: int, r) -> CycScalar:
    """The rational constant r inside Q(zeta_ell)."""
    f = _field(ell)
    vec = [Rat(0)] * f.phi
    vec[0] = Rat(r)
    return CycScalar._reduced(ell, vec)


def specialize(p, ell: int, power: int = 1) -> CycScalar:
    """Evaluate a Laurent polynomial at q = zeta_ell^power.

    >>> from .laurent import laurent
    >>> specialize(laurent({1: 1, -1: 1, 0: 1}), 3).is_zero()  # [3]_q at zeta_3
    True
    """
    terms = p.terms if hasattr(p, "terms") else p
    folded: dict[int, int] = {}
    for e, c in terms.items():
        k = (power * e) % ell
        folded[k] = folded.get(k, 0) + c
    return cyc_make(ell, folded)
