"""Expression grammar for generator words, plus the matching printer.

Grammar (whitespace insensitive, juxtaposition is multiplication):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*'? factor)*
    factor := atom ('^' ['-'] integer)?
    atom   := 'E' | 'F' | 'K' | 'B' | 'z' | 'E^(' nat ')' | 'F^(' nat ')'
            | integer ('/' integer)? | '(' expr ')'

The leading minus is an extension of the binary-only core so that printed
normal forms with a negative first coefficient parse back; ``parse`` builds
a plain tagged-tuple tree and ``eval_expr`` folds it into a normal-form
element.  ``print_normal_form`` emits only grammar-valid text, giving the
round-trip guarantee parse(print(x)) == x after evaluation.

Syntax errors carry the byte offset of the offending token.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import zeta
from .pbw import PBWElem, pbw, pbw_B, pbw_E, pbw_F, pbw_K, pbw_mul, pbw_one

__all__ = ["ParseError", "ResourceCapError", "parse", "eval_expr", "print_normal_form"]


class ParseError(ValueError):
    """Malformed input; ``position`` is the byte offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class ResourceCapError(RuntimeError):
    """An evaluation grew past the configured term cap."""


_LETTERS = frozenset("EFKBz")
_SYMBOLS = frozenset("+-*^()/")


def _tokenize(text: str) -> list:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _LETTERS:
            tokens.append(("letter", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unknown character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0):
        idx = min(self.pos + ahead, len(self.tokens) - 1)
        return self.tokens[idx]

    def take(self):
        tok = self.tokens[self.pos]
        if tok[0] != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {what}", tok[2])
        return tok

    # expr := ['-'] term (('+'|'-') term)*
    def expr(self):
        parts = []
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        parts.append((sign, self.term()))
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            parts.append((1 if op == "+" else -1, self.term()))
        return ("add", tuple(parts))

    # term := factor ('*'? factor)*
    def term(self):
        factors = [self.factor()]
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                factors.append(self.factor())
            elif kind in ("letter", "int", "("):
                factors.append(self.factor())
            else:
                break
        return ("mul", tuple(factors))

    # factor := atom ('^' ['-'] integer)?
    def factor(self):
        node = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.expect("int", "an integer exponent")
            node = ("pow", node, sign * tok[1])
        return node

    def atom(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "letter":
            if value in ("E", "F") and self.peek()[0] == "^" and self.peek(1)[0] == "(":
                self.take()
                self.take()
                ntok = self.expect("int", "a divided-power index")
                self.expect(")", "')'")
                return ("dp", value, ntok[1])
            if value == "z":
                return ("z",)
            return ("gen", value)
        if kind == "int":
            if self.peek()[0] == "/":
                self.take()
                dtok = self.expect("int", "a denominator")
                if dtok[1] == 0:
                    raise ParseError("zero denominator", dtok[2])
                return ("num", Fraction(value, dtok[1]))
            return ("num", Fraction(value))
        if kind == "(":
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        raise ParseError("syntax error", pos)


def parse(text: str):
    """Parse to a tagged-tuple tree: add/mul/pow/gen/dp/num/z nodes."""
    p = _Parser(text)
    tree = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError("syntax error", tok[2])
    return tree


def _invert(x: PBWElem) -> PBWElem:
    if len(x.terms) == 1:
        ((b, c, d, a), coeff) = next(iter(x.terms.items()))
        if b == 0 and d == 0 and a == 0:
            return pbw(x.ell, {(0, (-c) % x.ell, 0, 0): coeff.inv()})
    raise ValueError(
        "negative powers are only defined for nonzero scalar multiples of K^c"
    )


def eval_expr(tree, ell: int, max_terms: int = 0) -> PBWElem:
    """Fold a parse tree into a normal-form element at the given ell.

    A positive ``max_terms`` caps the term count of every intermediate;
    crossing it raises ResourceCapError rather than truncating.
    """

    def guard(x: PBWElem) -> PBWElem:
        if max_terms and len(x.terms) > max_terms:
            raise ResourceCapError(
                f"normal form exceeded {max_terms} terms; raise --max-terms"
            )
        return x

    def walk(node) -> PBWElem:
        tag = node[0]
        if tag == "add":
            total = pbw(ell, {})
            for sign, part in node[1]:
                piece = walk(part)
                total = guard(total + piece if sign > 0 else total - piece)
            return total
        if tag == "mul":
            total = pbw_one(ell)
            for part in node[1]:
                total = guard(pbw_mul(total, walk(part)))
            return total
        if tag == "pow":
            base = walk(node[1])
            n = node[2]
            if n < 0:
                base = _invert(base)
                n = -n
            total = pbw_one(ell)
            for _ in range(n):
                total = guard(pbw_mul(total, base))
            return total
        if tag == "gen":
            return {"E": pbw_E, "F": pbw_F, "K": pbw_K, "B": pbw_B}[node[1]](ell)
        if tag == "dp":
            return pbw_E(ell, node[2]) if node[1] == "E" else pbw_F(ell, node[2])
        if tag == "num":
            return pbw(ell, {(0, 0, 0, 0): node[1]})
        if tag == "z":
            return pbw(ell, {(0, 0, 0, 0): zeta(ell, 1)})
        raise ValueError(f"unknown node {tag!r}")

    return walk(tree)


def _coeff_pieces(coeff) -> list:
    """Split a cyclotomic scalar into signed printable pieces p/q z^k."""
    data = coeff.to_json()
    pieces = []
    for k, s in enumerate(data["coeffs"]):
        if s == "0":
            continue
        negative = s.startswith("-")
        mag = s[1:] if negative else s
        if k == 0:
            body = mag
        elif mag == "1":
            body = "z" if k == 1 else f"z^{k}"
        else:
            body = f"{mag} z" if k == 1 else f"{mag} z^{k}"
        pieces.append((negative, body))
    return pieces


def _mono_text(b: int, c: int, d: int, a: int) -> str:
    parts = []
    if b == 1:
        parts.append("F")
    elif b:
        parts.append(f"F^({b})")
    if c == 1:
        parts.append("K")
    elif c:
        parts.append(f"K^{c}")
    if d == 1:
        parts.append("B")
    elif d:
        parts.append(f"B^{d}")
    if a == 1:
        parts.append("E")
    elif a:
        parts.append(f"E^({a})")
    return " ".join(parts)


def print_normal_form(x: PBWElem) -> str:
    """Grammar-valid rendering; parse + eval returns the same element."""
    if not x.terms:
        return "0"
    rendered = []
    for key in sorted(x.terms):
        mono = _mono_text(*key)
        pieces = _coeff_pieces(x.terms[key])
        if len(pieces) == 1:
            negative, body = pieces[0]
            if body == "1" and mono:
                text = mono
            else:
                text = f"{body} {mono}".strip()
            rendered.append((negative, text))
        else:
            joined = ""
            for i, (neg, body) in enumerate(pieces):
                if i == 0:
                    joined = f"-{body}" if neg else body
                else:
                    joined += f" - {body}" if neg else f" + {body}"
            text = f"({joined}) {mono}".strip()
            rendered.append((False, text))
    out = ""
    for i, (negative, text) in enumerate(rendered):
        if i == 0:
            out = f"-{text}" if negative else text
        else:
            out += f" - {text}" if negative else f" + {text}"
    return out
