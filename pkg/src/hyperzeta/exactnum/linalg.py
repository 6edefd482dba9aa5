"""Exact dense linear algebra over any exact field scalar.

Plain Gaussian elimination: entries only need +, -, *, / and truthiness
(zero is falsy), which CycScalar, Fraction, and gmpy2.mpq all provide.  Everything returns fresh immutable matrices; nothing is
modified in place aside from local working copies.
"""

from __future__ import annotations

__all__ = ["ExactMatrix", "SingularMatrixError", "rref", "rank", "kernel", "solve", "inverse"]


class SingularMatrixError(ArithmeticError):
    """Raised when inverting or solving against a singular matrix."""

    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


class ExactMatrix:
    """Immutable dense matrix with exact field entries.

    >>> m = ExactMatrix([[1, 2], [3, 4]])
    >>> (m @ m).rows[0]
    (7, 10)
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)

    def __setattr__(self, *a):
        raise AttributeError("ExactMatrix is immutable")

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_shape(other, same=True)
        return ExactMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_shape(other, same=True)
        return ExactMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape()} @ {other.shape()}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out.append([_dot(r, c) for c in cols])
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product; block (i,j) is self[i][j] * other."""
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([a * b for a in ra for b in rb])
        return ExactMatrix(out)

    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def _check_shape(self, other, same=False):
        if same and self.shape() != other.shape():
            raise ValueError(f"shape mismatch {self.shape()} vs {other.shape()}")

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape() == other.shape() and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"

    @staticmethod
    def identity(n: int, one) -> "ExactMatrix":
        zero = one - one
        return ExactMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(nrows: int, ncols: int, zero) -> "ExactMatrix":
        return ExactMatrix([[zero] * ncols for _ in range(nrows)])


def _exactify(rows) -> list[list]:
    # Plain ints are promoted to ground rationals so that elimination's
    # divisions stay exact; every other scalar type is already a field.
    from .ground import Rat

    return [[Rat(x) if isinstance(x, int) else x for x in r] for r in rows]


def _dot(u, v):
    it = iter(zip(u, v))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        if a and b:
            acc = acc + a * b
    return acc


def _eliminate(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    rows, pivots = _eliminate(_exactify(m.rows), m.ncols)
    return ExactMatrix(rows), pivots


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def kernel(m: ExactMatrix) -> list[list]:
    """Basis of the right null space {x : m x = 0}, one list per vector.

    Kernel dimension plus row-space dimension equals the column count.
    """
    red, pivots = rref(m)
    zero = m.rows[0][0] - m.rows[0][0]
    nz = next((e for r in m.rows for e in r if e), None)
    one = nz / nz if nz is not None else zero + 1
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [zero] * m.ncols
        vec[f] = one
        for r, p in enumerate(pivots):
            vec[p] = -red.rows[r][f]
        basis.append(vec)
    return basis


def solve(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """X with a @ X = b for square invertible a; SingularMatrixError otherwise."""
    if a.nrows != a.ncols:
        raise ValueError("solve needs a square coefficient matrix")
    if a.nrows != b.nrows:
        raise ValueError("right-hand side row count mismatch")
    n = a.nrows
    aug = _exactify([list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)])
    rows, pivots = _eliminate(aug, n)
    if len(pivots) < n:
        raise SingularMatrixError(f"singular system (rank {len(pivots)} of {n})", rank=len(pivots))
    return ExactMatrix([r[n:] for r in rows[:n]])


def inverse(a: ExactMatrix) -> ExactMatrix:
    """Exact inverse of a square matrix; SingularMatrixError reports the rank."""
    nz = next((e for r in a.rows for e in r if e), None)
    if nz is None:
        raise SingularMatrixError("singular system (rank 0 of %d)" % a.nrows, rank=0)
    one = nz / nz
    return solve(a, ExactMatrix.identity(a.nrows, one))
