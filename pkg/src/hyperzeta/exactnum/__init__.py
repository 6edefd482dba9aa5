"""Exact scalar and matrix layer: rationals, Q(zeta_ell), Z[q,q^-1], linalg."""

from .ground import GROUND, Rat, RAT_TYPES, rat, is_integral, as_integer, rat_str
from .cyclotomic import CycScalar, cyclotomic_poly, cyc_make, cyc_rat, specialize, zeta
from .laurent import InexactDivisionError, LaurentPoly, laurent, q_int, q_power
from .linalg import ExactMatrix, SingularMatrixError, inverse, kernel, rank, rref, solve

__all__ = [
    "GROUND",
    "Rat",
    "RAT_TYPES",
    "rat",
    "is_integral",
    "as_integer",
    "rat_str",
    "CycScalar",
    "cyclotomic_poly",
    "cyc_make",
    "cyc_rat",
    "specialize",
    "zeta",
    "InexactDivisionError",
    "LaurentPoly",
    "laurent",
    "q_int",
    "q_power",
    "ExactMatrix",
    "SingularMatrixError",
    "inverse",
    "kernel",
    "rank",
    "rref",
    "solve",
]
