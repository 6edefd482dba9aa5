"""Weight modules and the module-level theorems at desk scale.

Every module built here carries the six generator actions E, F, K,
El (= E^(l)), Fl (= F^(l)), B as exact matrices over Q(zeta), plus a
weight label per basis vector.  In all the constructions below each
generator sends a basis vector to a scalar multiple of a single basis
vector, so operators are stored internally as sparse column maps and
only converted to dense ``ExactMatrix`` objects at the public boundary.
That sparsity is what keeps the span-closure certificates and the
l^3-dimensional annihilator kernels cheap.

The construction-time invariant suite (diagonal K and B matching the
labels, the conjugation relations, the commutator identity, nilpotency
of the sub-l parts, and the divided-power commutation identities for B)
runs on every instance, including tensor products and direct sums; a
violation aborts construction.
"""

from __future__ import annotations

import functools
from collections import deque
from typing import NamedTuple

from .exactnum import CycScalar, ExactMatrix, cyc_rat, kernel, rat, zeta
from .qcomb import gauss_binom_at, short_ladic
from .uzero import UZeroElem, kshift_binom, uzero_eval_weight
from .pbw import PBWElem, pbw_from_uzero
from .weights import Weight, cartan_data, embed, weight_add

__all__ = [
    "ClassicalModule",
    "WeightModule",
    "Annihilator",
    "classical_simple",
    "restricted_simple",
    "frobenius_twist",
    "tensor_module",
    "direct_sum",
    "submodule_generated",
    "primitive_vectors",
    "is_simple",
    "uzeta_annihilator",
    "uzeta_apply",
    "commutant",
    "rep_of_pbw",
    "solve_intertwiner",
    "tensor_theorem_check",
    "duflo_check",
]

_GENERATORS = ("E", "F", "K", "El", "Fl", "B")


# ---------------------------------------------------------------------------
# sparse column maps: cols[j] = tuple of (row, coeff), coeffs nonzero, rows
# sorted; the zero map is the empty tuple in every column


def _sp_normalize(dim: int, accum: list) -> tuple:
    cols = []
    for col in accum:
        entries = [(i, c) for i, c in sorted(col.items()) if not c.is_zero()]
        cols.append(tuple(entries))
    if len(cols) != dim:
        raise ValueError("column count mismatch")
    return tuple(cols)


def _sp_zero(dim: int) -> tuple:
    return ((),) * dim


def _sp_diag(values) -> tuple:
    cols = []
    for j, v in enumerate(values):
        cols.append(() if v.is_zero() else ((j, v),))
    return tuple(cols)


def _sp_identity(dim: int, ell: int) -> tuple:
    one = cyc_rat(ell, 1)
    return tuple(((j, one),) for j in range(dim))


def _sp_mul(a: tuple, b: tuple) -> tuple:
    accum = [dict() for _ in b]
    for j, col in enumerate(b):
        out = accum[j]
        for k, c in col:
            for i, c2 in a[k]:
                prod = c2 * c
                if i in out:
                    out[i] = out[i] + prod
                else:
                    out[i] = prod
    return _sp_normalize(len(b), accum)


def _sp_add(a: tuple, b: tuple) -> tuple:
    accum = []
    for col_a, col_b in zip(a, b):
        out = dict(col_a)
        for i, c in col_b:
            if i in out:
                out[i] = out[i] + c
            else:
                out[i] = c
        accum.append(out)
    return _sp_normalize(len(a), accum)


def _sp_scale(a: tuple, s: CycScalar) -> tuple:
    if s.is_zero():
        return _sp_zero(len(a))
    return tuple(tuple((i, c * s) for i, c in col) for col in a)


def _sp_pow(a: tuple, n: int, dim: int, ell: int) -> tuple:
    out = _sp_identity(dim, ell)
    for _ in range(n):
        out = _sp_mul(a, out)
    return out


def _sp_apply(a: tuple, vec: dict) -> dict:
    out: dict = {}
    for j, c in vec.items():
        for i, c2 in a[j]:
            prod = c2 * c
            if i in out:
                out[i] = out[i] + prod
            else:
                out[i] = prod
    return {i: c for i, c in out.items() if not c.is_zero()}


def _sp_is_zero(a: tuple) -> bool:
    return all(not col for col in a)


def _sp_to_matrix(a: tuple, ell: int) -> ExactMatrix:
    dim = len(a)
    z = cyc_rat(ell, 0)
    rows = [[z] * dim for _ in range(dim)]
    for j, col in enumerate(a):
        for i, c in col:
            rows[i][j] = c
    return ExactMatrix(rows)


def _sp_from_matrix(mat: ExactMatrix, ell: int) -> tuple:
    if mat.nrows != mat.ncols:
        raise ValueError("generator matrices must be square")
    accum = [dict() for _ in range(mat.ncols)]
    for i, row in enumerate(mat.rows):
        for j, entry in enumerate(row):
            c = entry if isinstance(entry, CycScalar) else cyc_rat(ell, entry)
            if not c.is_zero():
                accum[j][i] = c
    return _sp_normalize(mat.ncols, accum)


class _Echelon:
    """Sparse echelon basis keyed by leading coordinate.

    With ``track=True`` each inserted vector carries a combination tag; a
    vector that reduces to zero hands back the linear combination of
    previously inserted tags that produced it, which is exactly a kernel
    vector of the column family.
    """

    def __init__(self, ell: int, track: bool = False):
        self.pivots: dict = {}
        self.track = track
        self.one = cyc_rat(ell, 1)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def insert(self, vec: dict, tag=None):
        comb = {tag: self.one} if self.track else None
        vec = dict(vec)
        while vec:
            lead = min(vec)
            hit = self.pivots.get(lead)
            if hit is None:
                scale = vec[lead].inv()
                norm = {k: c * scale for k, c in vec.items()}
                normcomb = (
                    {k: c * scale for k, c in comb.items()} if self.track else None
                )
                self.pivots[lead] = (norm, normcomb)
                return True, None
            pvec, pcomb = hit
            factor = vec[lead]
            for k, c in pvec.items():
                nxt = vec.get(k)
                nxt = (-factor * c) if nxt is None else nxt - factor * c
                if nxt.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = nxt
            if self.track:
                for k, c in pcomb.items():
                    nxt = comb.get(k)
                    nxt = (-factor * c) if nxt is None else nxt - factor * c
                    if nxt.is_zero():
                        comb.pop(k, None)
                    else:
                        comb[k] = nxt
        return False, comb


# ---------------------------------------------------------------------------
# classical modules over Q


class ClassicalModule:
    """Finite-dimensional module over the classical rank-1 enveloping algebra.

    Holds exact rational matrices e, f, h with the bracket relations
    [h,e] = 2e, [h,f] = -2f, [e,f] = h checked at construction; h must be
    diagonal with integer entries so the module is a weight module.
    """

    __slots__ = ("dim", "e", "f", "h")

    def __init__(self, e: ExactMatrix, f: ExactMatrix, h: ExactMatrix):
        dim = e.nrows
        for name, mat in (("e", e), ("f", f), ("h", h)):
            if mat.nrows != dim or mat.ncols != dim:
                raise ValueError(f"matrix {name} is not {dim}x{dim}")
        two_e = e.scale(rat(2))
        if (h @ e) - (e @ h) != two_e:
            raise ArithmeticError("[h, e] != 2e")
        if (h @ f) - (f @ h) != f.scale(rat(-2)):
            raise ArithmeticError("[h, f] != -2f")
        if (e @ f) - (f @ e) != h:
            raise ArithmeticError("[e, f] != h")
        for i in range(dim):
            for j in range(dim):
                if i != j and h.entry(i, j) != 0:
                    raise ArithmeticError("h is not diagonal")
            v = rat(h.entry(i, i))
            if v.denominator != 1:
                raise ArithmeticError("h has a non-integer eigenvalue")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "h", h)

    def __setattr__(self, *a):
        raise AttributeError("ClassicalModule is immutable")

    def __repr__(self):
        return f"ClassicalModule(dim={self.dim})"


def classical_simple(p: int) -> ClassicalModule:
    """Simple module of highest weight p: h w_j = (p-2j) w_j,
    f w_j = (j+1) w_{j+1}, e w_j = (p-j+1) w_{j-1}."""
    if p < 0:
        raise ValueError("highest weight must be nonnegative")
    dim = p + 1
    zero = rat(0)
    e_rows = [[zero] * dim for _ in range(dim)]
    f_rows = [[zero] * dim for _ in range(dim)]
    h_rows = [[zero] * dim for _ in range(dim)]
    for j in range(dim):
        h_rows[j][j] = rat(p - 2 * j)
        if j + 1 < dim:
            f_rows[j + 1][j] = rat(j + 1)
            e_rows[j][j + 1] = rat(p - j)
    return ClassicalModule(ExactMatrix(e_rows), ExactMatrix(f_rows), ExactMatrix(h_rows))


# ---------------------------------------------------------------------------
# weight modules


class WeightModule:
    """Module with the six generator actions and per-vector weight labels.

    ``El`` and ``Fl`` hold the actions of the l-th divided powers.  The
    labels are rank-1 weights; K acts diagonally by zeta^(lam0) and B by
    lam1, and both facts are verified rather than assumed.
    """

    __slots__ = ("ell", "dim", "weights", "_cols", "_mats", "_pows", "_uops")

    def __init__(self, ell: int, weights, cols: dict):
        weights = tuple(weights)
        dim = len(weights)
        if dim == 0:
            raise ValueError("a module needs at least one basis vector")
        cd = cartan_data("A", 1, ell)
        for w in weights:
            if not isinstance(w, Weight) or w.cartan is not cd:
                raise ValueError("weight labels must be rank-1 weights at the same ell")
        store = {}
        for name in _GENERATORS:
            mat = cols[name]
            if isinstance(mat, ExactMatrix):
                mat = _sp_from_matrix(mat, ell)
            if len(mat) != dim:
                raise ValueError(f"generator {name} has wrong dimension")
            store[name] = mat
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_cols", store)
        object.__setattr__(self, "_mats", {})
        object.__setattr__(self, "_pows", {})
        object.__setattr__(self, "_uops", None)
        self._validate()

    def __setattr__(self, *a):
        raise AttributeError("WeightModule is immutable")

    def __repr__(self):
        return f"WeightModule(ell={self.ell}, dim={self.dim})"

    # -- public matrices ----------------------------------------------------

    def matrix(self, name: str) -> ExactMatrix:
        if name not in self._cols:
            raise KeyError(f"unknown generator {name!r}")
        mat = self._mats.get(name)
        if mat is None:
            mat = _sp_to_matrix(self._cols[name], self.ell)
            self._mats[name] = mat
        return mat

    @property
    def E(self) -> ExactMatrix:
        return self.matrix("E")

    @property
    def F(self) -> ExactMatrix:
        return self.matrix("F")

    @property
    def K(self) -> ExactMatrix:
        return self.matrix("K")

    @property
    def El(self) -> ExactMatrix:
        return self.matrix("El")

    @property
    def Fl(self) -> ExactMatrix:
        return self.matrix("Fl")

    @property
    def B(self) -> ExactMatrix:
        return self.matrix("B")

    # -- internal helpers ---------------------------------------------------

    def _diag_uzero(self, u: UZeroElem) -> tuple:
        vals = [
            uzero_eval_weight(u, w.lam0[0], w.lam1[0]) for w in self.weights
        ]
        return _sp_diag(vals)

    def _diag_cartan(self, c: int, d: int) -> tuple:
        ell = self.ell
        vals = []
        for w in self.weights:
            v = zeta(ell, (c * w.lam0[0]) % ell)
            if d:
                v = v * cyc_rat(ell, rat(w.lam1[0]) ** d)
            vals.append(v)
        return _sp_diag(vals)

    def _gen_power(self, name: str, n: int) -> tuple:
        key = (name, n)
        hit = self._pows.get(key)
        if hit is None:
            if n == 0:
                hit = _sp_identity(self.dim, self.ell)
            else:
                hit = _sp_mul(self._cols[name], self._gen_power(name, n - 1))
            self._pows[key] = hit
        return hit

    def _divided_power(self, letter: str, n: int) -> tuple:
        """Action of E^(n) or F^(n) via the digit factorization
        X^(n0 + n1*l) = X^(n0) * (X^(l))^(n1), an exact product because the
        balanced binomial [n over n0] at zeta is 1 by the Lucas factorization."""
        ell = self.ell
        n0, n1 = n % ell, n // ell
        sub = self._gen_power(letter, n0)
        top = self._gen_power(letter + "l", n1)
        op = _sp_mul(sub, top)
        return _sp_scale(op, _divided_scale(ell, n0, n1))

    # -- construction-time invariant suite ----------------------------------

    def _validate(self):
        ell, dim = self.ell, self.dim
        cols = self._cols
        one = cyc_rat(ell, 1)
        k_expected = []
        b_expected = []
        for w in self.weights:
            k_expected.append(zeta(ell, w.lam0[0]))
            b_expected.append(cyc_rat(ell, w.lam1[0]))
        if cols["K"] != _sp_diag(k_expected):
            raise ArithmeticError("K does not act diagonally by zeta^(lam0)")
        if cols["B"] != _sp_diag(b_expected):
            raise ArithmeticError("B does not act diagonally by lam1")
        if _sp_pow(cols["K"], ell, dim, ell) != _sp_identity(dim, ell):
            raise ArithmeticError("K^l != 1")
        z2 = zeta(ell, 2)
        if _sp_mul(cols["K"], cols["E"]) != _sp_scale(_sp_mul(cols["E"], cols["K"]), z2):
            raise ArithmeticError("K E K^-1 != zeta^2 E")
        if _sp_mul(cols["K"], cols["F"]) != _sp_scale(
            _sp_mul(cols["F"], cols["K"]), zeta(ell, ell - 2)
        ):
            raise ArithmeticError("K F K^-1 != zeta^-2 F")
        commutator = _sp_add(
            _sp_mul(cols["E"], cols["F"]), _sp_scale(_sp_mul(cols["F"], cols["E"]), -one)
        )
        if commutator != self._diag_uzero(kshift_binom(0, 1, ell)):
            raise ArithmeticError("[E, F] does not match the Cartan binomial")
        if not _sp_is_zero(_sp_pow(cols["E"], ell, dim, ell)):
            raise ArithmeticError("E^l != 0")
        if not _sp_is_zero(_sp_pow(cols["F"], ell, dim, ell)):
            raise ArithmeticError("F^l != 0")
        for t in (1, ell):
            ft = self._divided_power("F", t)
            lhs = _sp_mul(cols["B"], ft)
            rhs = _sp_mul(ft, self._diag_uzero(kshift_binom(-2 * t, ell, ell)))
            if lhs != rhs:
                raise ArithmeticError(f"B commutation past F^({t}) fails")
            et = self._divided_power("E", t)
            lhs = _sp_mul(cols["B"], et)
            rhs = _sp_mul(et, self._diag_uzero(kshift_binom(2 * t, ell, ell)))
            if lhs != rhs:
                raise ArithmeticError(f"B commutation past E^({t}) fails")


@functools.lru_cache(maxsize=None)
def _divided_scale(ell: int, n0: int, n1: int) -> CycScalar:
    """1 / ([n0]!_zeta * n1!), the normalization in X^(n) = X^n0 (X^(l))^n1 / (...)."""
    fact = cyc_rat(ell, 1)
    for i in range(1, n0 + 1):
        fact = fact * gauss_binom_at(i, 1, ell)
    intfact = 1
    for i in range(1, n1 + 1):
        intfact *= i
    return (fact * cyc_rat(ell, intfact)).inv()


# ---------------------------------------------------------------------------
# constructors


def restricted_simple(m0: int, ell: int) -> WeightModule:
    """Simple restricted module of highest weight m0 in [0, l).

    Basis v_0 .. v_m0 with K v_j = zeta^(m0-2j) v_j, F v_j = [j+1] v_{j+1},
    E v_j = [m0-j+1] v_{j-1}, and both l-th divided powers acting by zero.
    """
    if not 0 <= m0 < ell:
        raise ValueError(f"highest weight {m0} outside [0, {ell})")
    cd = cartan_data("A", 1, ell)
    dim = m0 + 1
    weights = [embed(cd, [m0 - 2 * j]) for j in range(dim)]
    e_cols = [dict() for _ in range(dim)]
    f_cols = [dict() for _ in range(dim)]
    for j in range(dim):
        if j + 1 < dim:
            f_cols[j][j + 1] = gauss_binom_at(j + 1, 1, ell)
            e_cols[j + 1][j] = gauss_binom_at(m0 - j, 1, ell)
    cols = {
        "E": _sp_normalize(dim, e_cols),
        "F": _sp_normalize(dim, f_cols),
        "K": _sp_diag([zeta(ell, w.lam0[0]) for w in weights]),
        "El": _sp_zero(dim),
        "Fl": _sp_zero(dim),
        "B": _sp_diag([cyc_rat(ell, w.lam1[0]) for w in weights]),
    }
    return WeightModule(ell, weights, cols)


def frobenius_twist(v: ClassicalModule, ell: int) -> WeightModule:
    """Pull a classical module back through the Frobenius map: E and F act
    by zero, K by the identity, El by e, Fl by f, and B by h."""
    dim = v.dim
    cd = cartan_data("A", 1, ell)
    weights = [Weight(cd, (0,), (int(rat(v.h.entry(j, j))),)) for j in range(dim)]
    cols = {
        "E": _sp_zero(dim),
        "F": _sp_zero(dim),
        "K": _sp_identity(dim, ell),
        "El": _sp_from_matrix(v.e, ell),
        "Fl": _sp_from_matrix(v.f, ell),
        "B": _sp_from_matrix(v.h, ell),
    }
    return WeightModule(ell, weights, cols)


def _is_restricted_type(m: WeightModule) -> bool:
    return _sp_is_zero(m._cols["El"]) and _sp_is_zero(m._cols["Fl"])


def _is_twisted_type(m: WeightModule) -> bool:
    return (
        _sp_is_zero(m._cols["E"])
        and _sp_is_zero(m._cols["F"])
        and m._cols["K"] == _sp_identity(m.dim, m.ell)
    )


def _sp_kron(a: tuple, b: tuple, bdim: int) -> tuple:
    accum = [dict() for _ in range(len(a) * bdim)]
    for j, col_a in enumerate(a):
        for k, col_b in enumerate(b):
            out = accum[j * bdim + k]
            for i, c in col_a:
                for i2, c2 in col_b:
                    out[i * bdim + i2] = c * c2
    return _sp_normalize(len(a) * bdim, accum)


def tensor_module(left: WeightModule, right: WeightModule) -> WeightModule:
    """Tensor product of a restricted module and a Frobenius twist, in
    either order, with the comultiplication actions

        K -> K (x) K            E -> E (x) K + 1 (x) E
        F -> F (x) 1 + K^-1 (x) F
        El -> El (x) 1 + 1 (x) El,  likewise Fl,  B -> B (x) 1 + 1 (x) B

    and weight labels added with carrying.  The full invariant suite is
    re-checked on the result; a violation aborts construction.
    """
    if left.ell != right.ell:
        raise ValueError("tensor factors live at different ell")
    ok = (_is_restricted_type(left) and _is_twisted_type(right)) or (
        _is_twisted_type(left) and _is_restricted_type(right)
    )
    if not ok:
        raise ValueError(
            "tensor factors must be one restricted module (zero l-th divided "
            "powers) and one twist (zero E and F, identity K), in either order"
        )
    ell = left.ell
    dl, dr = left.dim, right.dim
    ident_l = _sp_identity(dl, ell)
    ident_r = _sp_identity(dr, ell)
    kinv = _sp_diag([zeta(ell, (-w.lam0[0]) % ell) for w in left.weights])
    weights = [
        weight_add(wl, wr) for wl in left.weights for wr in right.weights
    ]
    lc, rc = left._cols, right._cols
    cols = {
        "K": _sp_kron(lc["K"], rc["K"], dr),
        "E": _sp_add(_sp_kron(lc["E"], rc["K"], dr), _sp_kron(ident_l, rc["E"], dr)),
        "F": _sp_add(_sp_kron(lc["F"], ident_r, dr), _sp_kron(kinv, rc["F"], dr)),
        "El": _sp_add(_sp_kron(lc["El"], ident_r, dr), _sp_kron(ident_l, rc["El"], dr)),
        "Fl": _sp_add(_sp_kron(lc["Fl"], ident_r, dr), _sp_kron(ident_l, rc["Fl"], dr)),
        "B": _sp_add(_sp_kron(lc["B"], ident_r, dr), _sp_kron(ident_l, rc["B"], dr)),
    }
    return WeightModule(ell, weights, cols)


def direct_sum(a: WeightModule, b: WeightModule) -> WeightModule:
    """Block sum; exists as a negative control for simplicity and commutant
    computations."""
    if a.ell != b.ell:
        raise ValueError("summands live at different ell")
    ell = a.ell
    da = a.dim
    cols = {}
    for name in _GENERATORS:
        accum = [dict(col) for col in a._cols[name]]
        for col in b._cols[name]:
            accum.append({i + da: c for i, c in col})
        cols[name] = _sp_normalize(da + b.dim, accum)
    return WeightModule(ell, a.weights + b.weights, cols)


def submodule_generated(m: WeightModule, coords) -> WeightModule:
    """Submodule generated by one vector (coordinates in the module basis).

    The closure under the six generators is computed exactly; because K and
    B act diagonally the closure is graded by weight label, so a basis can
    be chosen with each vector supported in a single label class and the
    generator actions restrict to honest sparse matrices.  Negative control
    alongside ``direct_sum``.
    """
    ell = m.ell
    vec = {}
    for j, c in enumerate(coords):
        c = c if isinstance(c, CycScalar) else cyc_rat(ell, c)
        if not c.is_zero():
            vec[j] = c
    if not vec:
        raise ValueError("the generating vector is zero")
    ech = _Echelon(ell)
    queue = deque([vec])
    ech.insert(dict(vec))
    closure = [dict(vec)]
    while queue:
        cur = queue.popleft()
        for name in _GENERATORS:
            img = _sp_apply(m._cols[name], cur)
            if not img:
                continue
            added, _ = ech.insert(dict(img))
            if added:
                closure.append(dict(img))
                queue.append(img)
    by_label: dict = {}
    for v in closure:
        split: dict = {}
        for j, c in v.items():
            split.setdefault(m.weights[j], {})[j] = c
        for w, part in split.items():
            by_label.setdefault(w, _Echelon(ell))
            by_label[w].insert(part)
    basis = []
    labels = []
    for w in sorted(by_label, key=lambda x: x.sort_key()):
        for lead in sorted(by_label[w].pivots):
            basis.append(by_label[w].pivots[lead][0])
            labels.append(w)
    coord_ech = _Echelon(ell, track=True)
    for t, bvec in enumerate(basis):
        added, _ = coord_ech.insert(dict(bvec), tag=t)
        if not added:
            raise ArithmeticError("graded basis is not independent")
    k = len(basis)
    cols = {}
    probe = -1
    for name in _GENERATORS:
        accum = [dict() for _ in range(k)]
        for t, bvec in enumerate(basis):
            img = _sp_apply(m._cols[name], bvec)
            if not img:
                continue
            added, comb = coord_ech.insert(dict(img), tag=probe)
            if added:
                raise ArithmeticError("closure is not invariant; basis extraction failed")
            for tag, c in comb.items():
                if tag != probe:
                    accum[t][tag] = -c
        cols[name] = _sp_normalize(k, accum)
    return WeightModule(ell, labels, cols)


# ---------------------------------------------------------------------------
# structural computations


def primitive_vectors(m: WeightModule):
    """Joint kernel of E and El split by weight label.

    Returns a list of (weight, vectors) pairs sorted by weight, with each
    vector a list of cyclotomic coordinates in the module basis; labels with
    trivial kernel are omitted.
    """
    ell = m.ell
    groups: dict = {}
    for j, w in enumerate(m.weights):
        groups.setdefault(w, []).append(j)
    out = []
    zero = cyc_rat(ell, 0)
    for w in sorted(groups, key=lambda x: x.sort_key()):
        idxs = groups[w]
        rows = []
        for name in ("E", "El"):
            cols = m._cols[name]
            for r in range(m.dim):
                row = [zero] * len(idxs)
                nonzero = False
                for pos, j in enumerate(idxs):
                    for i, c in cols[j]:
                        if i == r:
                            row[pos] = c
                            nonzero = True
                if nonzero:
                    rows.append(row)
        if not rows:
            rows = [[zero] * len(idxs)]
        basis = kernel(ExactMatrix(rows))
        if not basis:
            continue
        vectors = []
        for small in basis:
            full = [zero] * m.dim
            for pos, j in enumerate(idxs):
                full[j] = small[pos]
            vectors.append(full)
        out.append((w, vectors))
    return out


def is_simple(m: WeightModule):
    """Span closure of the unital algebra generated by the six actions.

    Returns (simple, certificate) where the certificate is the exact
    dimension reached; the module is absolutely simple precisely when the
    certificate equals dim^2.
    """
    ell, dim = m.ell, m.dim
    target = dim * dim
    ech = _Echelon(ell)

    def flatten(cols: tuple) -> dict:
        return {i * dim + j: c for j, col in enumerate(cols) for i, c in col}

    ident = _sp_identity(dim, ell)
    ech.insert(flatten(ident))
    queue = deque([ident])
    while queue and ech.dim < target:
        word = queue.popleft()
        for name in _GENERATORS:
            cand = _sp_mul(m._cols[name], word)
            vec = flatten(cand)
            if not vec:
                continue
            added, _ = ech.insert(vec)
            if added:
                queue.append(cand)
                if ech.dim >= target:
                    break
    return ech.dim == target, ech.dim


class Annihilator(NamedTuple):
    """Kernel of the small quantum group action on a module.

    ``kernel`` holds coefficient dictionaries keyed by (b, c, a) for the
    basis monomials F^b K^c E^a with all exponents below l; ``codim`` is
    l^3 minus the kernel dimension, i.e. the dimension of the image algebra.
    """

    ell: int
    kernel: tuple
    codim: int

    @property
    def dimension(self) -> int:
        return self.ell**3


def _uzeta_ops(m: WeightModule) -> list:
    """Sparse actions of the l^3 basis monomials F^b K^c E^a, lex order."""
    if m._uops is not None:
        return m._uops
    ell = m.ell
    epow = [m._gen_power("E", a) for a in range(ell)]
    fpow = [m._gen_power("F", b) for b in range(ell)]
    kdiag = [m._diag_cartan(c, 0) for c in range(ell)]
    ops = []
    for b in range(ell):
        for c in range(ell):
            mid = _sp_mul(fpow[b], kdiag[c])
            for a in range(ell):
                ops.append(((b, c, a), _sp_mul(mid, epow[a])))
    object.__setattr__(m, "_uops", ops)
    return ops


def uzeta_annihilator(m: WeightModule) -> Annihilator:
    """Exact kernel of the l^3-dimensional small quantum group on m.

    The operators of the basis monomials are echeloned with combination
    tracking; every dependency found is a kernel vector.  The codimension
    is the dimension of the image algebra.
    """
    ell, dim = m.ell, m.dim
    ech = _Echelon(ell, track=True)
    kernel_vecs = []
    for key, op in _uzeta_ops(m):
        vec = {i * dim + j: c for j, col in enumerate(op) for i, c in col}
        added, comb = ech.insert(vec, tag=key)
        if not added:
            kernel_vecs.append(dict(comb))
    codim = ell**3 - len(kernel_vecs)
    if codim != ech.dim:
        raise ArithmeticError("rank bookkeeping disagrees with the kernel count")
    return Annihilator(ell, tuple(kernel_vecs), codim)


def _uzeta_apply_cols(m: WeightModule, coeffs: dict) -> tuple:
    ell, dim = m.ell, m.dim
    accum = [dict() for _ in range(dim)]
    epow = {a: m._gen_power("E", a) for a in range(ell)}
    fpow = {b: m._gen_power("F", b) for b in range(ell)}
    for (b, c, a), coeff in coeffs.items():
        op = _sp_mul(fpow[b], _sp_mul(m._diag_cartan(c, 0), epow[a]))
        for j, col in enumerate(op):
            out = accum[j]
            for i, cc in col:
                prod = coeff * cc
                if i in out:
                    out[i] = out[i] + prod
                else:
                    out[i] = prod
    return _sp_normalize(dim, accum)


def uzeta_apply(m: WeightModule, coeffs: dict) -> ExactMatrix:
    """Matrix of a small-quantum-group element given as coefficients on the
    basis monomials F^b K^c E^a (keys (b, c, a), exponents below l)."""
    return _sp_to_matrix(_uzeta_apply_cols(m, coeffs), m.ell)


def commutant(m: WeightModule, subset: str = "uzeta") -> int:
    """Dimension of the commutant of the chosen operator family.

    ``subset='uzeta'`` commutes against E, F, K (which generate the small
    quantum group); ``'all'`` adds El, Fl, B.  Solved as an exact kernel in
    the dim^2 unknowns of the commuting matrix.
    """
    if subset == "uzeta":
        names = ("E", "F", "K")
    elif subset == "all":
        names = _GENERATORS
    else:
        raise ValueError("subset must be 'uzeta' or 'all'")
    ell, dim = m.ell, m.dim
    zero = cyc_rat(ell, 0)
    rows = []
    for name in names:
        g = m._cols[name]
        dense = [[zero] * dim for _ in range(dim)]
        for j, col in enumerate(g):
            for i, c in col:
                dense[i][j] = c
        for i in range(dim):
            for j in range(dim):
                row = [zero] * (dim * dim)
                for k in range(dim):
                    row[i * dim + k] = row[i * dim + k] + dense[k][j]
                    row[k * dim + j] = row[k * dim + j] - dense[i][k]
                rows.append(row)
    if not rows:
        rows = [[zero] * (dim * dim)]
    return len(kernel(ExactMatrix(rows)))


def rep_of_pbw(m: WeightModule, x) -> ExactMatrix:
    """Matrix of a normal-form element: linear extension over the monomials
    F^(b) K^c B^d E^(a), with divided powers built from the stored generator
    actions through the digit factorization."""
    if isinstance(x, UZeroElem):
        x = pbw_from_uzero(x)
    if not isinstance(x, PBWElem):
        raise TypeError("expected a normal-form element")
    if x.ell != m.ell:
        raise ValueError("element and module live at different ell")
    ell, dim = m.ell, m.dim
    accum = [dict() for _ in range(dim)]
    for (b, c, d, a), coeff in x.terms.items():
        op = _sp_mul(
            m._divided_power("F", b),
            _sp_mul(m._diag_cartan(c, d), m._divided_power("E", a)),
        )
        for j, col in enumerate(op):
            out = accum[j]
            for i, cc in col:
                prod = coeff * cc
                if i in out:
                    out[i] = out[i] + prod
                else:
                    out[i] = prod
    return _sp_to_matrix(_sp_normalize(dim, accum), ell)


# ---------------------------------------------------------------------------
# theorem-level checks


def _label_positions(m: WeightModule) -> dict:
    out: dict = {}
    for j, w in enumerate(m.weights):
        if w in out:
            return {}
        out[w] = j
    return out


def solve_intertwiner(src: WeightModule, dst: WeightModule):
    """Equivariant maps src -> dst when both have multiplicity-free labels.

    Equivariance for K and B forces such a map to send each weight line to
    the matching weight line, so the unknowns reduce to one scalar per basis
    vector; the remaining generators impose a sparse linear system.  Returns
    (solution space dimension, one verified intertwiner as an ExactMatrix or
    None); the matrix, when present, satisfies phi g = g phi for all six
    generators, and is invertible iff none of its diagonal scalars vanish.
    """
    if src.ell != dst.ell:
        raise ValueError("modules live at different ell")
    if src.dim != dst.dim:
        return 0, None
    ell, dim = src.ell, src.dim
    src_pos = _label_positions(src)
    dst_pos = _label_positions(dst)
    if not src_pos or not dst_pos:
        raise ValueError("intertwiner solver needs multiplicity-free weight labels")
    if set(src_pos) != set(dst_pos):
        return 0, None
    tau = [dst_pos[w] for w in src.weights]
    tau_inv = {t: j for j, t in enumerate(tau)}
    zero = cyc_rat(ell, 0)
    rows = [[zero] * dim]
    for name in ("E", "F", "El", "Fl"):
        gs = src._cols[name]
        gd = dst._cols[name]
        for j in range(dim):
            per_row: dict = {}
            for i, c in gs[j]:
                per_row.setdefault(tau[i], [zero, zero])[0] = c
            for i2, c2 in gd[tau[j]]:
                per_row.setdefault(i2, [zero, zero])[1] = c2
            for r, (lhs, rhs) in per_row.items():
                row = [zero] * dim
                src_of_r = tau_inv[r]
                row[src_of_r] = row[src_of_r] + lhs
                row[j] = row[j] - rhs
                rows.append(row)
    basis = kernel(ExactMatrix(rows))
    if not basis:
        return 0, None
    x = basis[0]
    accum = [dict() for _ in range(dim)]
    for j in range(dim):
        if not x[j].is_zero():
            accum[j][tau[j]] = x[j]
    phi = _sp_normalize(dim, accum)
    for name in _GENERATORS:
        if _sp_mul(phi, src._cols[name]) != _sp_mul(dst._cols[name], phi):
            raise ArithmeticError("solved intertwiner fails equivariance recheck")
    return len(basis), _sp_to_matrix(phi, ell)


def _tensor_pair(m: int, ell: int):
    m0, m1 = short_ladic(m, ell)
    lmod = restricted_simple(m0, ell)
    vmod = frobenius_twist(classical_simple(m1), ell)
    return m0, m1, lmod, vmod


def tensor_theorem_check(m: int, ell: int) -> dict:
    """Factorization of the simple of highest weight m = m0 + m1*l.

    Builds L(m0) (x) V(m1)-twist, certifies dimension, absolute simplicity
    via span closure, uniqueness of the primitive line and its weight, and
    solves an explicit invertible intertwiner against the reversed tensor
    order.  Returns a report dictionary with an overall ``ok``.
    """
    if m < 0:
        raise ValueError("highest weight must be nonnegative")
    m0, m1, lmod, vmod = _tensor_pair(m, ell)
    tens = tensor_module(lmod, vmod)
    expected_dim = (m0 + 1) * (m1 + 1)
    dim_ok = tens.dim == expected_dim
    simple, certificate = is_simple(tens)
    prim = primitive_vectors(tens)
    cd = cartan_data("A", 1, ell)
    target = embed(cd, [m])
    prim_count = sum(len(vecs) for _, vecs in prim)
    prim_ok = prim_count == 1 and len(prim) == 1 and prim[0][0] == target
    mirrored = tensor_module(vmod, lmod)
    space_dim, phi = solve_intertwiner(mirrored, tens)
    invertible = False
    if phi is not None:
        dim = tens.dim
        invertible = all(any(not phi.entry(i, j).is_zero() for i in range(dim)) for j in range(dim))
    report = {
        "m": m,
        "ell": ell,
        "m0": m0,
        "m1": m1,
        "dim": tens.dim,
        "dim_ok": dim_ok,
        "simple": simple,
        "certificate": certificate,
        "primitive_count": prim_count,
        "primitive_weight": str(prim[0][0]) if prim else None,
        "primitive_ok": prim_ok,
        "intertwiner_space_dim": space_dim,
        "intertwiner_invertible": invertible,
    }
    report["ok"] = bool(
        dim_ok and simple and prim_ok and space_dim == 1 and invertible
    )
    return report


def duflo_check(m: int, ell: int) -> dict:
    """Annihilator comparison for T = L(m0) (x) V(m1)-twist.

    Certifies that T is a simple highest weight module and that its small
    quantum group annihilator equals that of L(m0): the kernel dimensions
    agree and every kernel element of the L(m0) annihilator kills T.
    Reports both kernel dimensions and the common codimension.
    """
    if m < 0:
        raise ValueError("highest weight must be nonnegative")
    m0, m1, lmod, vmod = _tensor_pair(m, ell)
    tens = tensor_module(lmod, vmod)
    simple, certificate = is_simple(tens)
    prim = primitive_vectors(tens)
    cd = cartan_data("A", 1, ell)
    prim_ok = (
        len(prim) == 1
        and len(prim[0][1]) == 1
        and prim[0][0] == embed(cd, [m])
    )
    ann_t = uzeta_annihilator(tens)
    ann_l = uzeta_annihilator(lmod)
    contained = all(
        _sp_is_zero(_uzeta_apply_cols(tens, vec)) for vec in ann_l.kernel
    )
    equal = contained and len(ann_t.kernel) == len(ann_l.kernel)
    report = {
        "m": m,
        "ell": ell,
        "m0": m0,
        "m1": m1,
        "dim": tens.dim,
        "simple": simple,
        "certificate": certificate,
        "primitive_ok": prim_ok,
        "ann_tensor_kernel_dim": len(ann_t.kernel),
        "ann_restricted_kernel_dim": len(ann_l.kernel),
        "codim": ann_l.codim,
        "codim_expected": (m0 + 1) ** 2,
        "annihilators_equal": equal,
    }
    report["ok"] = bool(
        simple
        and prim_ok
        and equal
        and ann_l.codim == (m0 + 1) ** 2
        and ann_t.codim == ann_l.codim
    )
    return report
