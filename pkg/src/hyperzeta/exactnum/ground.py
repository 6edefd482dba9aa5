"""Ground rational type for every exact scalar in the package.

All arithmetic is exact: rationals built on arbitrary-precision integers,
never floats.  gmpy2's mpq is used when importable (roughly an order of
magnitude faster than fractions.Fraction on small operands); the stdlib
Fraction is the fallback.  Both backends agree on str() ("p/q" or "p"),
hashing, and comparison, so the choice never leaks into results.

Selection is controlled by the HYPERZETA_GROUND environment variable:
"gmpy" insists on gmpy2 (ImportError if missing), "python" forces the
stdlib Fraction, anything else (or unset) auto-detects.
"""

from __future__ import annotations

import os
from fractions import Fraction

__all__ = ["GROUND", "Rat", "RAT_TYPES", "rat", "is_integral", "as_integer", "rat_str"]

_choice = os.environ.get("HYPERZETA_GROUND", "auto").strip().lower()

if _choice == "python":
    Rat = Fraction
    GROUND = "python"
elif _choice == "gmpy":
    from gmpy2 import mpq as Rat

    GROUND = "gmpy"
else:
    try:
        from gmpy2 import mpq as Rat

        GROUND = "gmpy"
    except ImportError:
        Rat = Fraction
        GROUND = "python"

# Values of either backend (plus plain int) are accepted anywhere a rational
# scalar is expected; isinstance checks go through RAT_TYPES.
try:
    from gmpy2 import mpq as _mpq

    RAT_TYPES = (int, Fraction, type(_mpq(0)))
except ImportError:
    RAT_TYPES = (int, Fraction)


def rat(p, q=None):
    """Build a ground rational from an int, a "p/q" string, or a pair.

    >>> str(rat(3, 6))
    '1/2'
    >>> str(rat("-7/3"))
    '-7/3'
    >>> rat(5) == 5
    True
    """
    if q is not None:
        if q == 0:
            raise ZeroDivisionError("rational with zero denominator")
        return Rat(p) / Rat(q)
    if isinstance(p, str):
        return Rat(p)
    return Rat(p)


def is_integral(r) -> bool:
    """True when the rational is an integer."""
    return r == int(r)


def as_integer(r) -> int:
    """Exact integer value of an integral rational; ValueError otherwise."""
    n = int(r)
    if n != r:
        raise ValueError(f"not an integer: {r}")
    return n


def rat_str(r) -> str:
    """Canonical "p/q" (or "p") serialization, identical on both backends."""
    return str(Rat(r))
