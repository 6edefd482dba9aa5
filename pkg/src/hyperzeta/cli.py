"""Command line interface.

Six subcommands over the exact kernel: ``qbinom`` (balanced Gaussian
binomials, symbolic or at a root of unity), ``weight`` (group arithmetic
with carrying), ``nf`` (parse an expression and print its normal form),
``module`` (matrices, weight labels, and primitive vectors of the
constructed simples), ``primitive`` (the canonical primitive element and
its residual), and ``verify`` (the deterministic check suites).

JSON goes to standard output; ``--pretty`` switches to human-readable
text where a command has one.  Exit codes: 0 success, 1 failed check or
exceeded resource cap, 2 usage or syntax error.  ``HYPERZETA_SEED`` in
the environment is the fallback for ``verify --seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .exactnum import CycScalar
from .qcomb import gauss_binom, gauss_binom_at
from .uzero import delta_defect, primitive_element
from .weights import Weight, cartan_data, dominance_leq, weight_add, weight_neg
from .weights import embed as weight_embed

__all__ = ["main"]


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hyperzeta",
        description="exact arithmetic for the small quantum group at odd roots of unity",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbinom", help="balanced Gaussian binomial [m over t]")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--d", type=int, default=1, help="evaluate at zeta^d")
    p.add_argument("--symbolic", action="store_true", help="print the Laurent polynomial in q")
    p.set_defaults(func=cmd_qbinom)

    p = sub.add_parser("weight", help="weight group arithmetic")
    p.add_argument("op", choices=["add", "neg", "embed", "leq"])
    p.add_argument("operands", nargs="+", help="weight literals like '(3)(0)', or integer coordinates for embed")
    p.add_argument("--type", default="A", dest="cartan_type", help="Cartan type letter")
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("nf", help="normal form of an expression in E, F, K, B, z")
    p.add_argument("expr")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max-terms", type=int, default=10000, help="abort if a product exceeds this many terms")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("module", help="matrices, weights, or primitive vectors of a simple module")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--m0", type=int, help="restricted simple of highest weight m0 in [0, ell)")
    which.add_argument("--m", type=int, help="tensor simple of highest weight m >= 0")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--action", choices=["matrices", "weights", "primitive"], default="matrices")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("primitive", help="primitive element of the Cartan part and its residual")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_primitive)

    p = sub.add_parser("verify", help="run the deterministic check suites")
    p.add_argument(
        "--suite",
        choices=["qcomb", "weights", "uzero", "pbw", "repn", "all"],
        default="all",
    )
    p.add_argument("--ell", default="3,5", help="comma-separated odd orders, e.g. 3,5,7")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)
    return top


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_qbinom(args) -> int:
    if args.t < 0:
        return _usage_error("--t must be nonnegative")
    if args.symbolic:
        print(gauss_binom(args.m, args.t))
        return 0
    if args.ell is None:
        return _usage_error("qbinom needs --ell unless --symbolic is given")
    try:
        value = gauss_binom_at(args.m, args.t, args.ell, args.d)
    except ValueError as exc:
        return _usage_error(str(exc))
    print(value)
    return 0


def _parse_weight_literal(text: str, cd) -> Weight:
    """Literal '(a,b)(c,d)': integer part coordinates, then rational parts."""
    depth, groups, buf = 0, [], ""
    for ch in text:
        if ch == "(":
            if depth:
                raise ValueError(f"nested parenthesis in weight literal {text!r}")
            depth, buf = 1, ""
        elif ch == ")":
            if not depth:
                raise ValueError(f"unbalanced parenthesis in weight literal {text!r}")
            depth = 0
            groups.append(buf)
        elif depth:
            buf += ch
        elif not ch.isspace():
            raise ValueError(f"unexpected {ch!r} outside parentheses in {text!r}")
    if depth or len(groups) != 2:
        raise ValueError(f"weight literal {text!r} needs two parenthesized groups")
    lam0 = tuple(int(tok) for tok in groups[0].split(",") if tok.strip())
    lam1 = tuple(Fraction(tok) for tok in groups[1].split(",") if tok.strip())
    return Weight(cd, lam0, lam1)


def _emit_weight(w: Weight, pretty: bool):
    print(w if pretty else json.dumps(w.to_json()))


def cmd_weight(args) -> int:
    try:
        cd = cartan_data(args.cartan_type, args.rank, args.ell)
    except ValueError as exc:
        return _usage_error(str(exc))
    try:
        if args.op == "embed":
            coords = [int(tok) for tok in args.operands]
            if len(coords) != args.rank:
                return _usage_error(f"embed needs {args.rank} integer coordinates")
            _emit_weight(weight_embed(cd, coords), args.pretty)
            return 0
        arity = 1 if args.op == "neg" else 2
        if len(args.operands) != arity:
            return _usage_error(f"{args.op} takes {arity} weight operand(s)")
        ws = [_parse_weight_literal(tok, cd) for tok in args.operands]
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.op == "add":
        _emit_weight(weight_add(ws[0], ws[1]), args.pretty)
    elif args.op == "neg":
        _emit_weight(weight_neg(ws[0]), args.pretty)
    else:
        print(json.dumps(dominance_leq(ws[0], ws[1])))
    return 0


def cmd_nf(args) -> int:
    from .parser import ParseError, ResourceCapError, eval_expr, parse, print_normal_form

    if args.ell < 3 or args.ell % 2 == 0:
        return _usage_error(f"order must be odd and >= 3, got {args.ell}")
    try:
        tree = parse(args.expr)
    except ParseError as exc:
        return _usage_error(str(exc))
    try:
        x = eval_expr(tree, args.ell, max_terms=args.max_terms)
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        return _usage_error(str(exc))
    print(print_normal_form(x) if args.pretty else json.dumps(x.to_json()))
    return 0


def _coeff_list(x: CycScalar) -> list:
    return [str(c) for c in x.coeffs]


def cmd_module(args) -> int:
    from .qcomb import short_ladic
    from .repn import (
        classical_simple,
        frobenius_twist,
        primitive_vectors,
        restricted_simple,
        tensor_module,
    )

    ell = args.ell
    if ell < 3 or ell % 2 == 0:
        return _usage_error(f"order must be odd and >= 3, got {ell}")
    try:
        if args.m0 is not None:
            mod = restricted_simple(args.m0, ell)
        else:
            if args.m < 0:
                return _usage_error(f"--m must be nonnegative, got {args.m}")
            la = short_ladic(args.m, ell)
            mod = tensor_module(
                restricted_simple(la.m0, ell),
                frobenius_twist(classical_simple(la.m1), ell),
            )
    except ValueError as exc:
        return _usage_error(str(exc))

    if args.action == "weights":
        labels = [str(w) for w in mod.weights]
        print("\n".join(labels) if args.pretty else json.dumps(labels))
        return 0

    if args.action == "primitive":
        lines = [
            {"weight": str(w), "vectors": [[ _coeff_list(c) for c in vec] for vec in vecs]}
            for w, vecs in primitive_vectors(mod)
        ]
        if args.pretty:
            for line in lines:
                print(f"weight {line['weight']}: {len(line['vectors'])} vector(s)")
        else:
            print(json.dumps(lines))
        return 0

    out = {"ell": ell, "dim": mod.dim, "weights": [str(w) for w in mod.weights]}
    for name in ("E", "F", "K", "El", "Fl", "B"):
        mat = mod.matrix(name)
        out[name] = [
            [_coeff_list(mat.entry(i, j)) for j in range(mod.dim)]
            for i in range(mod.dim)
        ]
    if args.pretty:
        print(f"dim {mod.dim}, weights {' '.join(out['weights'])}")
        for name in ("E", "F", "K", "El", "Fl", "B"):
            print(f"{name}:")
            mat = mod.matrix(name)
            for i in range(mod.dim):
                print("  " + "  ".join(str(mat.entry(i, j)) for j in range(mod.dim)))
    else:
        print(json.dumps(out))
    return 0


def cmd_primitive(args) -> int:
    ell = args.ell
    if ell < 3 or ell % 2 == 0:
        return _usage_error(f"order must be odd and >= 3, got {ell}")
    p = primitive_element(ell)
    residual = str(delta_defect(p))
    coeffs = [p.terms.get((c, 0)) for c in range(ell)]
    if args.pretty:
        for c, a in enumerate(coeffs):
            print(f"a_{c} = {a if a is not None else 0}")
        print(f"residual = {residual}")
    else:
        out = {
            "ell": ell,
            "a": [[] if a is None else _coeff_list(a) for a in coeffs],
            "residual": residual,
        }
        print(json.dumps(out))
    return 0


def cmd_verify(args) -> int:
    from .verify import run

    try:
        ells = [int(tok) for tok in args.ell.split(",") if tok.strip()]
    except ValueError:
        return _usage_error(f"cannot parse --ell list {args.ell!r}")
    if not ells or any(ell < 3 or ell % 2 == 0 for ell in ells):
        return _usage_error(f"orders must be odd and >= 3, got {args.ell!r}")
    seed = args.seed
    if seed is None:
        try:
            seed = int(os.environ.get("HYPERZETA_SEED", "0"))
        except ValueError:
            return _usage_error("HYPERZETA_SEED must be an integer")
    report = run(args.suite, ells, seed)
    if args.pretty:
        for check in report["checks"]:
            state = "PASS" if check["ok"] else "FAIL"
            line = f"[{check['suite']}] {check['id']}: {state} ({check['count']} cases)"
            if check["detail"]:
                line += f" {check['detail']}"
            print(line)
        counts = report["counts"]
        print(
            f"{counts['passed']}/{counts['total']} checks passed, "
            f"{counts['cases']} cases, seed {seed}"
        )
    else:
        print(json.dumps(report))
    return 0 if report["ok"] else 1


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
