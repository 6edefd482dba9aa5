"""hyperzeta: exact computations for divided-power quantum sl2 at odd roots of unity.

Layers, bottom up: exactnum (rationals, cyclotomic fields, Laurent
polynomials, dense exact linear algebra), qcomb (Gaussian binomials and
their root-of-unity specializations), weights (the carrying weight group),
uzero (the commutative Cartan subalgebra with evaluation/interpolation),
pbw (divided-power normal forms, quantum Frobenius and its section), and
repn (finite-dimensional weight modules with tensor-product and
annihilator checks).  The hyperzeta CLI fronts the same operations.
"""

__version__ = "0.1.0"

from .exactnum import (
    CycScalar,
    ExactMatrix,
    InexactDivisionError,
    LaurentPoly,
    Rat,
    SingularMatrixError,
    cyc_make,
    cyc_rat,
    laurent,
    q_int,
    q_power,
    rat,
    specialize,
    zeta,
)

__all__ = [
    "__version__",
    "CycScalar",
    "ExactMatrix",
    "InexactDivisionError",
    "LaurentPoly",
    "Rat",
    "SingularMatrixError",
    "cyc_make",
    "cyc_rat",
    "laurent",
    "q_int",
    "q_power",
    "rat",
    "specialize",
    "zeta",
]
