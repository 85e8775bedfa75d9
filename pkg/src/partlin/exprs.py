"""Expression language over partition combinations.

Grammar (function-call style, no infix tensor/compose):

    expr   := term (('+' | '-') term)*
    term   := [coeff '*'] factor
    factor := call | literal | '(' expr ')'
    call   := NAME '(' [expr (',' expr)*] ')'  |  NAME

Nullary names: pi, tau, id, pair (lower pair), copair (upper pair),
up, down, empty.  Unary: star, rotl, rotr, lrotinv, rrotinv, cyc,
Vplus, Vminus, Psb, Tsb.  Binary: tensor, compose.  Integer-argument:
block(k), cutsum(k,i), idn(n).

Coefficients use the field literal grammar with `r` for sqrt(N);
partition literals look like P(1,2){1,2}{3}.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .field import FieldElem, parse_field_elem
from .lincomb import GradeError, LinComb, lc_compose, lc_involute, lc_rotate, lc_tensor
from .partitions import Partition, parse_partition
from .transforms import (
    P_transform,
    T_transform,
    V_transform,
    block,
    block_cut_sum,
    pi,
    tau,
)


class ExprError(ValueError):
    """Syntax or grading error, annotated with a source position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<partition>P\(\d+,\d+\)(?:\{[\d,\s]*\})*)
      | (?P<number>\d+/\d+|\d+)
      | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
      | (?P<sym>[-+*(),r])
    )""",
    re.VERBOSE,
)


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise ExprError(f"unexpected character {text[pos]!r}", pos)
            break
        for kind in ("partition", "number", "name", "sym"):
            val = m.group(kind)
            if val is not None:
                tokens.append((kind, val, m.start(kind)))
                break
        pos = m.end()
    return tokens


_NULLARY = {"pi", "tau", "id", "pair", "copair", "up", "down", "empty"}
_UNARY = {"star", "rotl", "rotr", "lrotinv", "rrotinv", "cyc",
          "Vplus", "Vminus", "Psb", "Tsb"}
_BINARY = {"tensor", "compose"}
_INTARG = {"block", "cutsum", "idn"}


class Parser:
    """Recursive-descent parser producing evaluable syntax trees."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ExprError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value:
            raise ExprError(f"expected {value!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ExprError(f"trailing input {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while True:
            tok = self.peek()
            if tok and tok[1] in "+-":
                self.next()
                rhs = self.term()
                node = ("add" if tok[1] == "+" else "sub", node, rhs, tok[2])
            else:
                return node

    def term(self):
        # optional leading sign
        sign = 1
        tok = self.peek()
        while tok and tok[1] in "+-":
            if tok[1] == "-":
                sign = -sign
            self.next()
            tok = self.peek()
        start = self.i
        coeff = self.try_coeff()
        if coeff is not None:
            tok = self.peek()
            if tok and tok[1] == "*":
                self.next()
                node = self.factor()
                return ("scale", coeff, node, sign)
            # bare coefficient with no partition: not a diagram
            self.i = start
        node = self.factor()
        if sign == -1:
            return ("neg", node, None, None)
        return node

    def try_coeff(self):
        """Greedily read a coefficient literal like 1/3 + 2/3 r, if any."""
        start = self.i
        pieces = []
        while True:
            tok = self.peek()
            if tok and tok[0] == "number":
                self.next()
                frac = tok[1]
                nxt = self.peek()
                if nxt and nxt[1] == "r":
                    self.next()
                    frac += " r"
                pieces.append(frac)
            elif tok and tok[1] == "r":
                self.next()
                pieces.append("r")
            else:
                break
            nxt = self.peek()
            if nxt and nxt[1] in "+-":
                after = (
                    self.tokens[self.i + 1]
                    if self.i + 1 < len(self.tokens)
                    else None
                )
                if after and (after[0] == "number" or after[1] == "r"):
                    self.next()
                    pieces.append(nxt[1])
                    continue
            break
        if not pieces:
            self.i = start
            return None
        return " ".join(pieces)

    def factor(self):
        tok = self.next()
        kind, val, pos = tok
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "partition":
            try:
                return ("part", parse_partition(val), None, pos)
            except ValueError as exc:
                raise ExprError(str(exc), pos) from None
        if kind == "number":
            if "/" in val:
                raise ExprError("fraction is not a diagram expression", pos)
            return ("int", int(val), None, pos)
        if kind == "name" or val == "r":
            name = val
            nxt = self.peek()
            if nxt and nxt[1] == "(":
                self.next()
                args = []
                if self.peek() and self.peek()[1] != ")":
                    args.append(self.expr())
                    while self.peek() and self.peek()[1] == ",":
                        self.next()
                        args.append(self.expr())
                self.expect(")")
                return ("call", name, args, pos)
            return ("call", name, [], pos)
        raise ExprError(f"unexpected token {val!r}", pos)


def _int_arg(node, pos):
    if node[0] == "int":
        return node[1]
    raise ExprError("expected an integer argument", pos)


def evaluate(node, N: int, rad: int = None):
    """Evaluate a parsed tree to a LinComb at dimension N."""
    if rad is None:
        rad = N
    kind = node[0]
    if kind == "part":
        return LinComb.of(node[1])
    if kind in ("add", "sub"):
        a = evaluate(node[1], N, rad)
        b = evaluate(node[2], N, rad)
        try:
            return a + b if kind == "add" else a - b
        except GradeError as exc:
            raise ExprError(str(exc), node[3]) from None
    if kind == "neg":
        return evaluate(node[1], N, rad).scale(-1)
    if kind == "scale":
        coeff = parse_field_elem(node[1], rad)
        sign = node[3]
        return evaluate(node[2], N, rad).scale(coeff * sign)
    if kind == "call":
        return _eval_call(node, N, rad)
    if kind == "int":
        raise ExprError("bare integer is not a diagram expression", node[3])
    raise AssertionError(f"unknown node {kind}")


def _literal_int(args, pos, n):
    vals = []
    for a in args:
        if a[0] == "int":
            vals.append(a[1])
        else:
            raise ExprError("expected a plain integer argument", pos)
    if len(vals) != n:
        raise ExprError(f"expected {n} integer arguments", pos)
    return vals


def _eval_call(node, N, rad):
    _, name, args, pos = node

    def arity(n):
        if len(args) != n:
            raise ExprError(f"{name} expects {n} argument(s)", pos)

    if name in _NULLARY:
        arity(0)
        table = {
            "pi": lambda: pi(N),
            "tau": lambda: tau(N),
            "id": lambda: LinComb.of(Partition.identity()),
            "pair": lambda: LinComb.of(Partition.pair_lower()),
            "copair": lambda: LinComb.of(Partition.pair_upper()),
            "up": lambda: LinComb.of(Partition.singleton_lower()),
            "down": lambda: LinComb.of(Partition.singleton_upper()),
            "empty": lambda: LinComb.of(Partition.empty()),
        }
        return table[name]()
    if name in _INTARG:
        if name == "block":
            (k,) = _literal_int(args, pos, 1)
            return LinComb.of(block(k))
        if name == "idn":
            (n,) = _literal_int(args, pos, 1)
            return LinComb.of(Partition.identity(n))
        k, i = _literal_int(args, pos, 2)
        try:
            return block_cut_sum(k, i, N)
        except ValueError as exc:
            raise ExprError(str(exc), pos) from None
    if name in _UNARY:
        arity(1)
        x = evaluate(args[0], N, rad)
        try:
            if name == "star":
                return lc_involute(x)
            if name == "rotl":
                return lc_rotate(x, "left")
            if name == "rotr":
                return lc_rotate(x, "right")
            if name == "lrotinv":
                return lc_rotate(x, "left-inv")
            if name == "rrotinv":
                return lc_rotate(x, "right-inv")
            if name == "cyc":
                return lc_rotate(x, "cycle")
            if name == "Vplus":
                return V_transform(x, N, 1)
            if name == "Vminus":
                return V_transform(x, N, -1)
            if name == "Psb":
                return P_transform(x, N)
            if name == "Tsb":
                return T_transform(x, N)
        except (ValueError, GradeError) as exc:
            raise ExprError(str(exc), pos) from None
    if name in _BINARY:
        arity(2)
        a = evaluate(args[0], N, rad)
        b = evaluate(args[1], N, rad)
        try:
            if name == "tensor":
                return lc_tensor(a, b)
            return lc_compose(a, b, N)
        except (ValueError, GradeError) as exc:
            raise ExprError(str(exc), pos) from None
    if name.isdigit():
        raise ExprError("bare integer is not a diagram expression", pos)
    raise ExprError(f"unknown function {name!r}", pos)


def parse(text: str):
    return Parser(text).parse()


def eval_text(text: str, N: int, rad: int = None) -> LinComb:
    return evaluate(parse(text), N, rad)
