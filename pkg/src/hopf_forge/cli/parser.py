"""Expression parser: text -> Element of a chosen algebra.

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ("^" ["-"] int)?
    atom   := GEN | int | "q" | qint(n) | qfac(n) | qbinom(n, k) | "(" expr ")"

Division is only by nonzero scalars.  Negative exponents are allowed on K
generators and on scalars.  Rendered elements parse back to themselves.
"""
from __future__ import annotations

import os

from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from ..pbw import AlgebraError, Element, normal_form
from ..pbw.algebra import ONE_MONO, Algebra
from ..qfield import q_binomial, q_factorial, q_int

DEFAULT_EXPONENT_CAP = 64

_GRAMMAR = r"""
?sum: term
    | sum "+" term      -> add
    | sum "-" term      -> sub
?term: unary
    | term "*" unary    -> mul
    | term "/" unary    -> div
?unary: power
    | "-" unary         -> neg
?power: atom
    | atom "^" INT      -> pow
    | atom "^" "-" INT  -> negpow
    | atom "^" "(" "-" INT ")" -> negpow
?atom: GEN              -> gen
    | INT               -> number
    | "q"               -> q
    | FUNC "(" INT ("," INT)* ")" -> call
    | "(" sum ")"

GEN.2: /Kt[12]|K[12]|E12|E[12]|F12|F[12]/
FUNC.2: "qbinom" | "qint" | "qfac"
INT: /[0-9]+/

%import common.WS
%ignore WS
"""

_LARK = Lark(_GRAMMAR, start="sum", parser="lalr", propagate_positions=True)


class ParseError(ValueError):
    """Syntax or evaluation error with a 1-based position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")

    def to_json(self) -> dict:
        return {"type": "ParseError", "message": self.message, "line": self.line, "column": self.column}


def exponent_cap() -> int:
    raw = os.environ.get("HOPF_FORGE_CAP")
    return int(raw) if raw else DEFAULT_EXPONENT_CAP


def _pos(node) -> tuple[int | None, int | None]:
    if isinstance(node, Token):
        return node.line, node.column
    meta = getattr(node, "meta", None)
    if meta is None or meta.empty:
        return None, None
    return meta.line, meta.column


def _fail(msg: str, node):
    raise ParseError(msg, *_pos(node))


class _Evaluator:
    def __init__(self, algebra: Algebra, cap: int):
        self.alg = algebra
        self.f = algebra.field
        self.cap = cap

    def scalar_of(self, x: Element):
        """The scalar value of x, or None when x has a non-constant term."""
        if not x.terms:
            return self.f.zero
        if set(x.terms) == {ONE_MONO}:
            return x.terms[ONE_MONO]
        return None

    def eval(self, node) -> Element:
        alg = self.alg
        kind = node.data
        kids = node.children
        if kind == "add":
            return self.eval(kids[0]) + self.eval(kids[1])
        if kind == "sub":
            return self.eval(kids[0]) - self.eval(kids[1])
        if kind == "mul":
            return self.eval(kids[0]) * self.eval(kids[1])
        if kind == "neg":
            return -self.eval(kids[0])
        if kind == "div":
            den = self.scalar_of(self.eval(kids[1]))
            if den is None:
                _fail("division by a non-scalar", kids[1])
            if den.is_zero():
                _fail("division by zero", kids[1])
            return self.eval(kids[0]).scale(den.inverse())
        if kind in ("pow", "negpow"):
            base, tok = kids
            n = int(tok)
            if n > self.cap:
                _fail(f"exponent {n} exceeds the cap {self.cap}", tok)
            if kind == "pow":
                if isinstance(base, Tree) and base.data == "gen":
                    return self._word([str(base.children[0])] * n, base)
                return self.eval(base) ** n
            if isinstance(base, Tree) and base.data == "gen":
                sym = str(base.children[0])
                if not sym.startswith("K"):
                    _fail(f"negative exponent on {sym}", base)
                return self._word([sym + "^-1"] * n, base)
            c = self.scalar_of(self.eval(base))
            if c is None:
                _fail("negative exponents need a K generator or a scalar", base)
            if c.is_zero():
                _fail("zero to a negative power", base)
            return alg.scalar(c.inverse() ** n)
        if kind == "gen":
            return self._word([str(kids[0])], kids[0])
        if kind == "number":
            return alg.scalar(int(kids[0]))
        if kind == "q":
            return alg.scalar(self.f.q)
        if kind == "call":
            name = str(kids[0])
            args = [int(t) for t in kids[1:]]
            want = 2 if name == "qbinom" else 1
            if len(args) != want:
                _fail(f"{name} takes {want} argument(s)", kids[0])
            if any(a > self.cap for a in args):
                _fail(f"argument exceeds the cap {self.cap}", kids[0])
            if name == "qint":
                return alg.scalar(q_int(args[0], self.f))
            if name == "qfac":
                return alg.scalar(q_factorial(args[0], self.f))
            return alg.scalar(q_binomial(args[0], args[1], self.f))
        raise AssertionError(f"unhandled node {kind}")

    def _word(self, word, node) -> Element:
        try:
            return normal_form(word, self.alg)
        except AlgebraError:
            _fail(f"generator {word[0].split('^')[0]} is not legal in {self.alg.kind}", node)


def parse_tree(text: str) -> Tree:
    try:
        return _LARK.parse(text)
    except UnexpectedCharacters as exc:
        raise ParseError(f"unexpected character {text[exc.pos_in_stream]!r}", exc.line, exc.column) from None
    except UnexpectedEOF:
        lines = text.split("\n")
        raise ParseError("unexpected end of input", len(lines), len(lines[-1]) + 1) from None
    except UnexpectedToken as exc:
        tok = exc.token
        if tok.type == "$END":
            lines = text.split("\n")
            raise ParseError("unexpected end of input", len(lines), len(lines[-1]) + 1) from None
        raise ParseError(f"unexpected {str(tok)!r}", tok.line, tok.column) from None
    except UnexpectedInput as exc:
        raise ParseError("syntax error", exc.line, exc.column) from None


def parse(text: str, algebra: Algebra, cap: int | None = None) -> Element:
    """Normal form of the expression ``text`` in ``algebra``."""
    tree = parse_tree(text)
    if isinstance(tree, Token):
        tree = Tree("number", [tree])
    return _Evaluator(algebra, exponent_cap() if cap is None else cap).eval(tree)


def parse_scalar(text: str, field, cap: int | None = None):
    """An expression without generators, as a scalar of ``field``."""
    from ..pbw import get_algebra

    alg = get_algebra("U", field.l)
    x = parse(text, alg, cap)
    ev = _Evaluator(alg, 0)
    c = ev.scalar_of(x)
    if c is None:
        raise ParseError("expected a scalar expression")
    return c
