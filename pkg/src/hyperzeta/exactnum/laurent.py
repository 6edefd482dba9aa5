"""Integer Laurent polynomials Z[q, q^-1].

Symbolic q-combinatorics lives here before any root-of-unity
specialization.  Terms are kept in a dict {exponent: nonzero int}; the
empty dict is zero.  Division is exact division with a zero-remainder
assertion: quotients of Gaussian-binomial products are genuine Laurent
polynomials, and the division algorithm checks that instead of assuming
it, raising InexactDivisionError (carrying quotient and remainder) when
the claim fails.
"""

from __future__ import annotations

__all__ = ["LaurentPoly", "laurent", "q_power", "q_int", "InexactDivisionError"]


class InexactDivisionError(ArithmeticError):
    """Raised when a supposedly exact Laurent division leaves a remainder."""

    def __init__(self, message, quotient=None, remainder=None):
        super().__init__(message)
        self.quotient = quotient
        self.remainder = remainder


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    >>> p = q_power(1) - q_power(-1)
    >>> print(p * p)
    q^2 - 2 + q^-2
    >>> print((q_power(3) - q_power(-3)).exact_div(p))
    q^2 + 1 + q^-2
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        clean = {e: c for e, c in terms.items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def coeff(self, e: int) -> int:
        return self.terms.get(e, 0)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out, base = laurent({0: 1}), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return LaurentPoly({}), LaurentPoly({})
        # Shift both operands to ordinary polynomials (lowest exponent 0);
        # top-down division then terminates by degree.  A failing integer
        # leading-coefficient step ends the division with the remainder.
        amin, bmin = self.min_exp(), o.min_exp()
        deg_a, deg_b = self.max_exp() - amin, o.max_exp() - bmin
        a = [self.coeff(amin + i) for i in range(deg_a + 1)]
        b = [o.coeff(bmin + i) for i in range(deg_b + 1)]
        lead = b[-1]
        quo: dict[int, int] = {}
        for k in range(deg_a - deg_b, -1, -1):
            c = a[k + deg_b]
            if c == 0:
                continue
            if c % lead != 0:
                break
            c //= lead
            quo[k + amin - bmin] = c
            for i, bi in enumerate(b):
                a[k + i] -= c * bi
        rem = {amin + i: c for i, c in enumerate(a) if c}
        return LaurentPoly(quo), LaurentPoly(rem)

    def exact_div(self, other) -> "LaurentPoly":
        quo, rem = divmod(self, other)
        if not rem.is_zero():
            raise InexactDivisionError(
                f"inexact Laurent division: remainder {rem}", quotient=quo, remainder=rem
            )
        return quo

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        if all(c < 0 for c in self.terms.values()):
            return f"-({-self})"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                v = "q" if e == 1 else f"q^{e}"
                body = v if mag == 1 else f"{mag}{v}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        return LaurentPoly({int(e): int(c) for e, c in obj.items()})


def laurent(terms: dict) -> LaurentPoly:
    """Build a Laurent polynomial from an {exponent: coefficient} dict."""
    return LaurentPoly(dict(terms))


def q_power(e: int) -> LaurentPoly:
    """The monomial q^e."""
    return LaurentPoly({e: 1})


def q_int(n: int) -> LaurentPoly:
    """Balanced q-integer [n] = (q^n - q^-n)/(q - q^-1).

    >>> print(q_int(3))
    q^2 + 1 + q^-2
    >>> print(q_int(-2))
    -(q + q^-1)
    """
    if n == 0:
        return LaurentPoly({})
    sign = 1 if n > 0 else -1
    n = abs(n)
    return LaurentPoly({sign * (n - 1 - 2 * k): sign for k in range(n)})
