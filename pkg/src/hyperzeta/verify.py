"""Deterministic verification suites behind the ``verify`` subcommand.

Each suite re-runs the load-bearing identities of one layer on fixed grids
plus seeded random samples and returns a list of check records.  A record
carries the suite name, a stable check id, the case count, a pass flag,
and, on failure, the exact offending values.  Reports are byte-stable for
a fixed seed: no timestamps, no ordering dependence (checks are sorted by
suite then id before they are returned).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactnum import cyc_rat, q_power, specialize, zeta
from .qcomb import (
    binom_shift_eval,
    gauss_binom,
    gauss_binom_at,
    q_lucas,
    short_ladic,
)
from .uzero import (
    coproduct_B,
    delta_defect,
    kshift_binom,
    primitive_element,
    primitive_kernel,
    sigma_shift,
    uzero,
    uzero_eval,
    uzero_interpolate,
)
from .pbw import (
    classical,
    classical_mul,
    frobenius,
    gamma,
    pbw,
    pbw_B,
    pbw_E,
    pbw_F,
    pbw_K,
    pbw_from_uzero,
    pbw_mul,
    pbw_one,
)
from .repn import (
    classical_simple,
    commutant,
    duflo_check,
    frobenius_twist,
    rep_of_pbw,
    restricted_simple,
    tensor_module,
    tensor_theorem_check,
)
from .weights import (
    cartan_data,
    dominance_leq,
    embed,
    weight_add,
    weight_neg,
    weight_sub,
)

__all__ = ["SUITES", "run"]


def _rng(seed: int, suite: str, cid: str) -> random.Random:
    return random.Random(f"{seed}:{suite}:{cid}")


class _Collector:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks = []

    def record(self, cid: str, count: int, failures: list):
        self.checks.append(
            {
                "suite": self.suite,
                "id": cid,
                "ok": not failures,
                "count": count,
                "detail": "" if not failures else "; ".join(failures[:3]),
            }
        )


# ---------------------------------------------------------------------------


def suite_qcomb(ells, seed: int):
    col = _Collector("qcomb")

    count, bad = 0, []
    for m in range(-6, 7):
        for t in range(7):
            count += 1
            lhs = gauss_binom(m, t)
            rhs = gauss_binom(-m + t - 1, t)
            if t % 2:
                rhs = -rhs
            if lhs != rhs:
                bad.append(f"m={m} t={t}")
    col.record("negation-symmetry", count, bad)

    rng = _rng(seed, "qcomb", "pascal")
    count, bad = 0, []
    for _ in range(150):
        m = rng.randint(-10, 10)
        t = rng.randint(1, 8)
        count += 1
        lhs = gauss_binom(m, t)
        rhs = q_power(t) * gauss_binom(m - 1, t) + q_power(t - m) * gauss_binom(
            m - 1, t - 1
        )
        if lhs != rhs:
            bad.append(f"m={m} t={t}")
    col.record("pascal", count, bad)

    count, bad = 0, []
    for ell in ells:
        for m in range(-2 * ell, 2 * ell + 1):
            count += 1
            if gauss_binom_at(m, ell, ell) != cyc_rat(ell, short_ladic(m, ell).m1):
                bad.append(f"ell={ell} m={m}")
    col.record("top-digit", count, bad)

    count, bad = 0, []
    for ell in ells:
        for m in range(ell):
            for c in range(3 * ell):
                count += 1
                down = binom_shift_eval(m, c, "down", ell)
                up = binom_shift_eval(m, c, "up", ell)
                if gauss_binom_at(m - c, ell, ell) != cyc_rat(ell, down):
                    bad.append(f"down ell={ell} m={m} c={c}")
                if gauss_binom_at(m + c, ell, ell) != cyc_rat(ell, up):
                    bad.append(f"up ell={ell} m={m} c={c}")
    col.record("carry-branches", count, bad)

    rng = _rng(seed, "qcomb", "lucas")
    count, bad = 0, []
    for ell in ells:
        for _ in range(60):
            a0, c0 = rng.randrange(ell), rng.randrange(ell)
            a1, c1 = rng.randint(0, 4), rng.randint(0, 4)
            count += 1
            if q_lucas(a0, a1, c0, c1, ell) != gauss_binom_at(
                a0 + a1 * ell, c0 + c1 * ell, ell
            ):
                bad.append(f"ell={ell} a=({a0},{a1}) c=({c0},{c1})")
    col.record("lucas", count, bad)

    rng = _rng(seed, "qcomb", "specialize")
    count, bad = 0, []
    for ell in ells:
        for _ in range(60):
            m = rng.randint(-12, 12)
            t = rng.randint(0, 9)
            count += 1
            if gauss_binom_at(m, t, ell) != specialize(gauss_binom(m, t), ell):
                bad.append(f"ell={ell} m={m} t={t}")
    col.record("specialize", count, bad)
    return col.checks


def suite_weights(ells, seed: int):
    col = _Collector("weights")

    rng = _rng(seed, "weights", "embedding-homomorphism")
    count, bad = 0, []
    for ell in ells:
        for letter, n in (("A", 1), ("A", 2), ("B", 2)):
            cd = cartan_data(letter, n, ell)
            for _ in range(120):
                a = [rng.randint(-100, 100) for _ in range(n)]
                b = [rng.randint(-100, 100) for _ in range(n)]
                count += 1
                lhs = weight_add(embed(cd, a), embed(cd, b))
                if lhs != embed(cd, [x + y for x, y in zip(a, b)]):
                    bad.append(f"ell={ell} {letter}{n} a={a} b={b}")
    col.record("embedding-homomorphism", count, bad)

    count, bad = 0, []
    for ell in ells:
        cd = cartan_data("A", 1, ell)
        for m in range(-30, 31):
            count += 1
            if weight_neg(embed(cd, [m])) != embed(cd, [-m]):
                bad.append(f"ell={ell} m={m}")
    col.record("negation", count, bad)

    rng = _rng(seed, "weights", "difference")
    count, bad = 0, []
    for ell in ells:
        cd = cartan_data("A", 1, ell)
        for _ in range(80):
            m, mp = rng.randint(-60, 60), rng.randint(-60, 60)
            count += 1
            if weight_sub(embed(cd, [m]), embed(cd, [mp])) != embed(cd, [m - mp]):
                bad.append(f"ell={ell} m={m} mp={mp}")
    col.record("difference", count, bad)

    rng = _rng(seed, "weights", "dominance-root-shift")
    count, bad = 0, []
    for ell in ells:
        cd = cartan_data("A", 1, ell)
        for _ in range(50):
            m = rng.randint(-20, 20)
            k = rng.randint(0, 6)
            lam = embed(cd, [m])
            count += 1
            if not dominance_leq(lam, weight_add(lam, embed(cd, [2 * k]))):
                bad.append(f"ell={ell} m={m} k={k}")
            if k > 0 and dominance_leq(lam, weight_sub(lam, embed(cd, [2 * k]))):
                bad.append(f"ell={ell} m={m} -k={k}")
    col.record("dominance-root-shift", count, bad)
    return col.checks


def _random_uzero(rng: random.Random, ell: int, dmax: int):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        c = rng.randrange(ell)
        d = rng.randint(0, dmax)
        terms[(c, d)] = terms.get((c, d), 0) + rng.randint(-4, 4)
    return uzero(ell, terms)


def suite_uzero(ells, seed: int):
    col = _Collector("uzero")

    rng = _rng(seed, "uzero", "interpolation-round-trip")
    count, bad = 0, []
    for ell in ells:
        for _ in range(25):
            x = _random_uzero(rng, ell, 3)
            dmax = max([d for (_, d) in x.terms] or [0])
            count += 1
            if uzero_interpolate(lambda m: uzero_eval(x, m), dmax, ell) != x:
                bad.append(f"ell={ell} x={x}")
    col.record("interpolation-round-trip", count, bad)

    rng = _rng(seed, "uzero", "evaluation-algebra-map")
    count, bad = 0, []
    for ell in ells:
        for _ in range(60):
            x = _random_uzero(rng, ell, 2)
            y = _random_uzero(rng, ell, 2)
            m = rng.randint(-3 * ell, 3 * ell)
            count += 1
            if uzero_eval(x * y, m) != uzero_eval(x, m) * uzero_eval(y, m):
                bad.append(f"ell={ell} m={m}")
    col.record("evaluation-algebra-map", count, bad)

    rng = _rng(seed, "uzero", "cartan-binomial-contract")
    count, bad = 0, []
    for ell in ells:
        for _ in range(40):
            c = rng.randint(-8, 8)
            t = rng.choice([0, 1, ell - 1, ell, ell + 1, 2 * ell])
            m = rng.randint(-2 * ell, 2 * ell)
            count += 1
            try:
                u = kshift_binom(c, t, ell)
            except ArithmeticError:
                bad.append(f"ell={ell} c={c} t={t} left the group ring")
                continue
            if uzero_eval(u, m) != gauss_binom_at(m + c, t, ell):
                bad.append(f"ell={ell} c={c} t={t} m={m}")
    col.record("cartan-binomial-contract", count, bad)

    rng = _rng(seed, "uzero", "shift-automorphism")
    count, bad = 0, []
    for ell in ells:
        for _ in range(60):
            x = _random_uzero(rng, ell, 3)
            a = rng.randint(-5, 5)
            m = rng.randint(-10, 10)
            count += 1
            if uzero_eval(sigma_shift(x, a), m) != uzero_eval(x, m + 2 * a):
                bad.append(f"ell={ell} a={a} m={m}")
    col.record("shift-automorphism", count, bad)

    rng = _rng(seed, "uzero", "coproduct-carry")
    count, bad = 0, []
    for ell in ells:
        cb = coproduct_B(ell)
        for _ in range(60):
            m, mp = rng.randint(-3 * ell, 3 * ell), rng.randint(-3 * ell, 3 * ell)
            count += 1
            if cb.eval_pair(m, mp) != cyc_rat(ell, short_ladic(m + mp, ell).m1):
                bad.append(f"ell={ell} m={m} mp={mp}")
    col.record("coproduct-carry", count, bad)

    count, bad = 0, []
    for ell in ells:
        count += 1
        p = primitive_element(ell)
        if not delta_defect(p).is_zero():
            bad.append(f"ell={ell} residual nonzero")
        if len(primitive_kernel(ell)) != 1:
            bad.append(f"ell={ell} primitive space not a line")
        if p.terms.get((0, 0)) != cyc_rat(ell, Fraction(ell - 1, 2 * ell)):
            bad.append(f"ell={ell} constant coefficient")
    col.record("primitive-element", count, bad)
    return col.checks


def _random_pbw(rng: random.Random, ell: int, hi: int):
    terms = {}
    for _ in range(rng.randint(1, 2)):
        key = (
            rng.randint(0, hi),
            rng.randrange(ell),
            rng.randint(0, 2),
            rng.randint(0, hi),
        )
        terms[key] = terms.get(key, 0) + rng.randint(-3, 3)
    return pbw(ell, terms)


def suite_pbw(ells, seed: int):
    col = _Collector("pbw")

    count, bad = 0, []
    for ell in ells:
        count += 1
        ke = pbw_mul(pbw_mul(pbw_K(ell), pbw_E(ell)), pbw_K(ell, ell - 1))
        if ke != pbw_E(ell) * zeta(ell, 2):
            bad.append(f"ell={ell} K E K^-1")
        kf = pbw_mul(pbw_mul(pbw_K(ell), pbw_F(ell)), pbw_K(ell, ell - 1))
        if kf != pbw_F(ell) * zeta(ell, ell - 2):
            bad.append(f"ell={ell} K F K^-1")
        kpow = pbw_one(ell)
        for _ in range(ell):
            kpow = pbw_mul(kpow, pbw_K(ell))
        if kpow != pbw_one(ell):
            bad.append(f"ell={ell} K^l")
    col.record("conjugation", count, bad)

    count, bad = 0, []
    for ell in ells:
        for t in (1, 2, ell, ell + 1):
            count += 1
            ft = pbw_F(ell, t)
            lhs = pbw_mul(pbw_B(ell), ft)
            rhs = pbw_mul(ft, pbw_from_uzero(kshift_binom(-2 * t, ell, ell)))
            if lhs != rhs:
                bad.append(f"ell={ell} t={t} F side")
            et = pbw_E(ell, t)
            lhs = pbw_mul(pbw_B(ell), et)
            rhs = pbw_mul(et, pbw_from_uzero(kshift_binom(2 * t, ell, ell)))
            if lhs != rhs:
                bad.append(f"ell={ell} t={t} E side")
    col.record("cartan-commutation", count, bad)

    count, bad = 0, []
    for ell in ells:
        for x in range(ell + 3):
            for y in range(ell + 3):
                count += 1
                merged = gauss_binom_at(x + y, x, ell)
                if pbw_mul(pbw_F(ell, x), pbw_F(ell, y)) != pbw_F(ell, x + y) * merged:
                    bad.append(f"ell={ell} F {x},{y}")
                if pbw_mul(pbw_E(ell, x), pbw_E(ell, y)) != pbw_E(ell, x + y) * merged:
                    bad.append(f"ell={ell} E {x},{y}")
    col.record("divided-power-merge", count, bad)

    rng = _rng(seed, "pbw", "associativity")
    count, bad = 0, []
    for ell in ells:
        for _ in range(15):
            x = _random_pbw(rng, ell, ell + 2)
            y = _random_pbw(rng, ell, ell + 2)
            z = _random_pbw(rng, ell, ell + 2)
            count += 1
            if pbw_mul(pbw_mul(x, y), z) != pbw_mul(x, pbw_mul(y, z)):
                bad.append(f"ell={ell} x={x} y={y} z={z}")
    col.record("associativity", count, bad)

    count, bad = 0, []
    for ell in ells:
        for s in range(3):
            for t in range(3):
                for r in range(3):
                    count += 1
                    mono = classical({(s, t, r): 1})
                    if frobenius(gamma(mono, ell)) != mono:
                        bad.append(f"ell={ell} ({s},{t},{r})")
    col.record("frobenius-section", count, bad)

    rng = _rng(seed, "pbw", "frobenius-multiplicative")
    count, bad = 0, []
    for ell in ells:
        for _ in range(6):
            x = _random_pbw(rng, ell, 2 * ell)
            y = _random_pbw(rng, ell, 2 * ell)
            count += 1
            if frobenius(pbw_mul(x, y)) != classical_mul(frobenius(x), frobenius(y)):
                bad.append(f"ell={ell}")
    col.record("frobenius-multiplicative", count, bad)
    return col.checks


def suite_repn(ells, seed: int):
    col = _Collector("repn")

    count, bad = 0, []
    for ell in ells:
        for m in range(4 * ell + 1):
            count += 1
            report = tensor_theorem_check(m, ell)
            if not report["ok"]:
                bad.append(f"ell={ell} m={m}: {report}")
    col.record("tensor-factorization", count, bad)

    count, bad = 0, []
    for ell in ells:
        for m0 in range(ell):
            for p in range(4):
                count += 1
                report = duflo_check(m0 + p * ell, ell)
                if not (report["ok"] and report["codim"] == (m0 + 1) ** 2):
                    bad.append(f"ell={ell} m0={m0} p={p}: {report}")
    col.record("annihilator-stability", count, bad)

    count, bad = 0, []
    for ell in ells:
        for m0 in range(ell):
            count += 1
            if commutant(restricted_simple(m0, ell), "uzeta") != 1:
                bad.append(f"ell={ell} m0={m0}")
    col.record("restricted-commutant", count, bad)

    count, bad = 0, []
    for ell in ells:
        gens = [
            pbw_E(ell),
            pbw_F(ell),
            pbw_K(ell),
            pbw_E(ell, ell),
            pbw_F(ell, ell),
            pbw_B(ell),
            pbw_E(ell, 2),
            pbw_F(ell, 2),
        ]
        mods = [
            restricted_simple(ell - 1, ell),
            tensor_module(
                restricted_simple(1, ell), frobenius_twist(classical_simple(2), ell)
            ),
        ]
        for mod in mods:
            reps = [rep_of_pbw(mod, g) for g in gens]
            for x, rx in zip(gens, reps):
                for y, ry in zip(gens, reps):
                    count += 1
                    if rep_of_pbw(mod, pbw_mul(x, y)) != rx @ ry:
                        bad.append(f"ell={ell} dim={mod.dim} x={x} y={y}")
    col.record("operator-compatibility", count, bad)

    count, bad = 0, []
    for ell in ells:
        mod = tensor_module(
            restricted_simple(min(2, ell - 1), ell),
            frobenius_twist(classical_simple(3), ell),
        )
        cd = cartan_data("A", 1, ell)
        for t in range(1, 2 * ell + 1):
            for letter, sign in ((pbw_F, -1), (pbw_E, 1)):
                mat = rep_of_pbw(mod, letter(ell, t))
                for j in range(mod.dim):
                    target = weight_add(mod.weights[j], embed(cd, [sign * 2 * t]))
                    for i in range(mod.dim):
                        count += 1
                        if not mat.entry(i, j).is_zero() and mod.weights[i] != target:
                            bad.append(f"ell={ell} t={t} entry ({i},{j})")
    col.record("weight-mapping", count, bad)
    return col.checks


SUITES = {
    "qcomb": suite_qcomb,
    "weights": suite_weights,
    "uzero": suite_uzero,
    "pbw": suite_pbw,
    "repn": suite_repn,
}

_ORDER = ("qcomb", "weights", "uzero", "pbw", "repn")


def run(suite: str, ells, seed: int) -> dict:
    """Run one named suite (or 'all') and assemble the report."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    ells = list(ells)
    checks = []
    for name in _ORDER:
        if suite in (name, "all"):
            checks.extend(SUITES[name](ells, seed))
    checks.sort(key=lambda c: (c["suite"], c["id"]))
    failed = sum(1 for c in checks if not c["ok"])
    return {
        "suite": suite,
        "ell": ells,
        "seed": seed,
        "checks": checks,
        "counts": {
            "total": len(checks),
            "passed": len(checks) - failed,
            "failed": failed,
            "cases": sum(c["count"] for c in checks),
        },
        "ok": failed == 0,
    }
