"""Gaussian binomial combinatorics and root-of-unity evaluation rules.

Balanced convention throughout: [m] = (q^m - q^-m)/(q - q^-1), and

    [m over t] = prod_{s=1..t} (q^{m-s+1} - q^{-(m-s+1)}) / (q^s - q^-s)

for any integer m (negative allowed) and t >= 0.  Each partial quotient is
again a Laurent polynomial, so the product is computed stepwise with exact
division asserted at every step.

The short l-adic decomposition m = m0 + m1*l with 0 <= m0 < l (and m1 of
either sign, also for negative m) drives the evaluation shortcuts at a
primitive l-th root of unity with l odd: [m over l] evaluates to m1, shifted
top entries follow explicit two-branch carry formulas, and the general
factorization splits a binomial into its bottom q-part and an ordinary
integer binomial on the upper digits.  All of these are checked against the
symbolic product in the test suite rather than trusted.
"""

from __future__ import annotations

import functools
import math
from typing import NamedTuple

from .exactnum import CycScalar, LaurentPoly, cyc_rat, laurent, q_power, specialize

__all__ = [
    "LAdic",
    "short_ladic",
    "gauss_binom",
    "gauss_binom_at",
    "binom_shift_eval",
    "q_lucas",
]


class LAdic(NamedTuple):
    """Digits of the short l-adic decomposition m = m0 + m1*l, 0 <= m0 < l."""

    m0: int
    m1: int


def short_ladic(m: int, ell: int) -> LAdic:
    """Short l-adic digits of any integer, negative included.

    >>> short_ladic(7, 5)
    LAdic(m0=2, m1=1)
    >>> short_ladic(-7, 5)
    LAdic(m0=3, m1=-2)
    """
    if ell < 3 or ell % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {ell}")
    m0 = m % ell
    return LAdic(m0, (m - m0) // ell)


@functools.lru_cache(maxsize=None)
def gauss_binom(m: int, t: int) -> LaurentPoly:
    """Symbolic balanced Gaussian binomial [m over t] in Z[q, q^-1].

    >>> print(gauss_binom(4, 2))
    q^4 + q^2 + 2 + q^-2 + q^-4
    >>> print(gauss_binom(-2, 3))
    -(q^3 + q + q^-1 + q^-3)
    """
    if t < 0:
        raise ValueError(f"lower index must be nonnegative, got {t}")
    out = laurent({0: 1})
    for s in range(1, t + 1):
        e = m - s + 1
        numerator = q_power(e) - q_power(-e)
        out = (out * numerator).exact_div(q_power(s) - q_power(-s))
    return out


def gauss_binom_at(m: int, t: int, ell: int, d: int = 1) -> CycScalar:
    """[m over t] evaluated at q = zeta_ell^d, exactly.

    The symmetrizer exponent d must be invertible mod ell, otherwise
    zeta^d is not a primitive l-th root and the evaluation rules break.

    >>> gauss_binom_at(7, 5, 5) == 1
    True
    """
    if math.gcd(d, ell) != 1:
        raise ValueError(f"symmetrizer power {d} shares a factor with ell={ell}")
    return specialize(gauss_binom(m, t), ell, d)


def binom_shift_eval(m: int, c: int, sign: str, ell: int) -> int:
    """Closed-form value of [m -+ c over ell] at zeta_ell for 0 <= m < ell.

    With c = c0 + c1*ell in short l-adic digits:
      down: [m - c over ell] is -c1 when m >= c0, else -(c1 + 1)
      up:   [m + c over ell] is  c1 when m + c0 < ell, else c1 + 1

    >>> binom_shift_eval(3, 7, "down", 5)
    -1
    >>> binom_shift_eval(3, 7, "up", 5)
    2
    """
    if not 0 <= m < ell:
        raise ValueError(f"m must satisfy 0 <= m < ell, got m={m}, ell={ell}")
    if c < 0:
        raise ValueError(f"shift must be nonnegative, got {c}")
    c0, c1 = short_ladic(c, ell)
    if sign == "down":
        return -c1 if m >= c0 else -(c1 + 1)
    if sign == "up":
        return c1 if m + c0 < ell else c1 + 1
    raise ValueError(f"sign must be 'down' or 'up', got {sign!r}")


def q_lucas(a0: int, a1: int, c0: int, c1: int, ell: int, d: int = 1) -> CycScalar:
    """Root-of-unity factorization [a0 + a1*l over c0 + c1*l] =
    [a0 over c0] * binom(a1, c1), returned as the factored product.

    >>> q_lucas(2, 1, 1, 1, 5) == gauss_binom_at(2, 1, 5)
    True
    """
    if not (0 <= a0 < ell and 0 <= c0 < ell):
        raise ValueError(f"bottom digits must lie in [0, {ell}), got {a0}, {c0}")
    if a1 < 0 or c1 < 0:
        raise ValueError(f"upper digits must be nonnegative, got {a1}, {c1}")
    bottom = gauss_binom_at(a0, c0, ell, d)
    return bottom * cyc_rat(ell, math.comb(a1, c1))
