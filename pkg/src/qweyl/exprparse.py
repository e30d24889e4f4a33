"""A small expression language for operators, elements and q-brackets.

Grammar (whitespace-insensitive):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor factor*                 -- juxtaposition composes/multiplies
    factor := atom | '(' expr ')' | '[' expr ',' expr ']' qtag?
    qtag   := '_q' | '_{q^-1}'
    atom   := [xdsef]N | KN | sN^-1 | KN^-1 | t(ints) | E(int,int)
            | q | q^int | int | x^(ints)

Indices are 1-based.  x/d/s/t atoms and the named generator atoms e/f/K
live in operator context; x^(...) monomials live in element context; q
powers and integers are scalars valid in both.  Printing any parsed value
and re-parsing it reproduces the value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .aqn import Element, mul
from .errors import ContextMix, ExprSyntaxError, InvalidIndex, RankMismatch
from .qindex import MultiIndex
from .qring import LaurentPoly, q_power
from .rootvec import FormalUq, root_op
from .uqrealize import build_realization
from .weylops import D, GenSymbol, Operator, S, T, X, compose, q_bracket

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<monomial>x\^\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\))
      | (?P<theta>t\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\))
      | (?P<rootop>E\(\s*\d+\s*,\s*\d+\s*\))
      | (?P<gen>[xdsef]\d+(?:\^-1)?|K\d+(?:\^-1)?)
      | (?P<qpow>q(?:\^-?\d+)?)
      | (?P<int>\d+)
      | (?P<qtag_inv>_\{q\^-1\})
      | (?P<qtag>_q)
      | (?P<punct>[+\-()\[\],])
    """, re.VERBOSE)

_INTS_RE = re.compile(r"-?\d+")


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(src: str) -> list[_Token]:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append(_Token(kind, m.group(), pos))
        pos = m.end()
    return out


# AST ------------------------------------------------------------------------

@dataclass
class ANum:
    value: int
    pos: int


@dataclass
class AQPow:
    k: int
    pos: int


@dataclass
class AGen:
    letter: str
    index: int
    inv: bool
    pos: int


@dataclass
class ATheta:
    mu: tuple
    pos: int


@dataclass
class ARoot:
    i: int
    j: int
    pos: int


@dataclass
class AMono:
    entries: tuple
    pos: int


@dataclass
class ASum:
    items: list  # (sign, node) pairs


@dataclass
class AJuxt:
    factors: list


@dataclass
class ABracket:
    a: object
    b: object
    qexp: int  # the c in [a,b]_c = ab - c ba, as a power of q


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.pos = 0

    def peek(self) -> _Token | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> _Token:
        t = self.peek()
        if t is None:
            raise ExprSyntaxError("unexpected end of input", len(self.src))
        self.pos += 1
        return t

    def expect(self, text: str) -> _Token:
        t = self.peek()
        if t is None or t.text != text:
            where = t.pos if t else len(self.src)
            raise ExprSyntaxError(f"expected {text!r}", where, expected=(text,))
        return self.next()

    def parse(self):
        node = self.expr()
        t = self.peek()
        if t is not None:
            raise ExprSyntaxError(f"unexpected {t.text!r}", t.pos)
        return node

    def expr(self):
        items = []
        sign = 1
        t = self.peek()
        if t is not None and t.text == "-":
            self.next()
            sign = -1
            if not self._at_factor():
                raise ExprSyntaxError("expected a term after '-'", t.pos)
        items.append((sign, self.term()))
        while True:
            t = self.peek()
            if t is None or t.text not in ("+", "-"):
                break
            self.next()
            if not self._at_factor():
                raise ExprSyntaxError(f"expected a term after {t.text!r}", t.pos)
            items.append((1 if t.text == "+" else -1, self.term()))
        if len(items) == 1 and items[0][0] == 1:
            return items[0][1]
        return ASum(items)

    def _at_factor(self) -> bool:
        t = self.peek()
        if t is None:
            return False
        return (t.kind in ("monomial", "theta", "rootop", "gen", "qpow", "int")
                or t.text in ("(", "["))

    def term(self):
        factors = [self.factor()]
        while self._at_factor():
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else AJuxt(factors)

    def factor(self):
        t = self.next()
        if t.kind == "int":
            return ANum(int(t.text), t.pos)
        if t.kind == "qpow":
            k = 1 if t.text == "q" else int(t.text[2:])
            return AQPow(k, t.pos)
        if t.kind == "gen":
            inv = t.text.endswith("^-1")
            body = t.text[:-3] if inv else t.text
            letter, index = body[0], int(body[1:])
            if inv and letter not in ("s", "K"):
                raise ExprSyntaxError(f"{letter}{index} is not invertible", t.pos)
            return AGen(letter, index, inv, t.pos)
        if t.kind == "theta":
            mu = tuple(int(x) for x in _INTS_RE.findall(t.text))
            return ATheta(mu, t.pos)
        if t.kind == "rootop":
            i, j = (int(x) for x in _INTS_RE.findall(t.text))
            return ARoot(i, j, t.pos)
        if t.kind == "monomial":
            entries = tuple(int(x) for x in _INTS_RE.findall(t.text))
            return AMono(entries, t.pos)
        if t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        if t.text == "[":
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            qexp = 0
            nxt = self.peek()
            if nxt is not None and nxt.kind in ("qtag", "qtag_inv"):
                self.next()
                qexp = 1 if nxt.kind == "qtag" else -1
            return ABracket(a, b, qexp)
        raise ExprSyntaxError(f"unexpected {t.text!r}", t.pos)


@lru_cache(maxsize=None)
def _realization(n: int):
    return build_realization(n)


def _elab_operator(node, n: int) -> Operator:
    if isinstance(node, ANum):
        return Operator.identity(n).scale(node.value)
    if isinstance(node, AQPow):
        return Operator.identity(n).scale(q_power(node.k))
    if isinstance(node, AGen):
        letter, i = node.letter, node.index
        if not 1 <= i <= n:
            raise InvalidIndex(f"index {i} outside 1..{n}")
        if letter == "x":
            return Operator.from_word(n, [X(i)])
        if letter == "d":
            return Operator.from_word(n, [D(i)])
        if letter == "s":
            return Operator.from_word(n, [S(i, -1 if node.inv else 1)])
        r = _realization(n)
        if letter == "e":
            return r.e[i - 1]
        if letter == "f":
            return r.f[i - 1]
        return r.K_inv[i - 1] if node.inv else r.K[i - 1]
    if isinstance(node, ATheta):
        if len(node.mu) != n:
            raise RankMismatch(f"t(...) takes {n} entries, got {len(node.mu)}")
        return Operator.from_word(n, [T(node.mu)])
    if isinstance(node, ARoot):
        return root_op(node.i, node.j, n)
    if isinstance(node, AMono):
        raise ContextMix("monomial x^(...) in an operator expression")
    if isinstance(node, ASum):
        out = Operator.zero(n)
        for sign, sub in node.items:
            part = _elab_operator(sub, n)
            out = out + (part if sign > 0 else -part)
        return out
    if isinstance(node, AJuxt):
        out = _elab_operator(node.factors[0], n)
        for sub in node.factors[1:]:
            out = compose(out, _elab_operator(sub, n))
        return out
    if isinstance(node, ABracket):
        return q_bracket(_elab_operator(node.a, n), _elab_operator(node.b, n),
                         q_power(node.qexp))
    raise ContextMix(f"cannot use {node!r} in an operator expression")


def _elab_element(node, n: int) -> Element:
    if isinstance(node, ANum):
        return Element.unit(n).scale(node.value)
    if isinstance(node, AQPow):
        return Element.unit(n).scale(q_power(node.k))
    if isinstance(node, AMono):
        if len(node.entries) != n:
            raise RankMismatch(f"x^(...) takes {n} entries, got {len(node.entries)}")
        return Element.monomial(MultiIndex(node.entries))
    if isinstance(node, (AGen, ATheta, ARoot)):
        raise ContextMix("operator atom in an element expression")
    if isinstance(node, ASum):
        out = Element.zero(n)
        for sign, sub in node.items:
            part = _elab_element(sub, n)
            out = out + (part if sign > 0 else -part)
        return out
    if isinstance(node, AJuxt):
        out = _elab_element(node.factors[0], n)
        for sub in node.factors[1:]:
            out = mul(out, _elab_element(sub, n))
        return out
    if isinstance(node, ABracket):
        a = _elab_element(node.a, n)
        b = _elab_element(node.b, n)
        return mul(a, b) - mul(b, a).scale(q_power(node.qexp))
    raise ContextMix(f"cannot use {node!r} in an element expression")


def parse_operator(src: str, n: int) -> Operator:
    """Parse operator-context source text at rank n."""
    return _elab_operator(_Parser(src).parse(), n)


def parse_element(src: str, n: int) -> Element:
    """Parse element-context source text at rank n."""
    return _elab_element(_Parser(src).parse(), n)


# printing --------------------------------------------------------------------

def _coeff_prefix(c: LaurentPoly) -> tuple[str, str]:
    """Split a coefficient into (sign, printable prefix ending in a space,
    or '' when the coefficient is 1)."""
    if len(c.terms) == 1:
        ((k, v),) = c.terms.items()
        sign = "-" if v < 0 else "+"
        body = str(LaurentPoly({k: abs(v)}))
        return sign, "" if body == "1" else body + " "
    return "+", f"({c}) "


def _symbol_text(g: GenSymbol) -> str:
    if g.kind == "X":
        return f"x{g.i}"
    if g.kind == "D":
        return f"d{g.i}"
    if g.kind == "S":
        unit = f"s{g.i}" if g.e > 0 else f"s{g.i}^-1"
        return " ".join([unit] * abs(g.e))
    return "t(" + ",".join(str(v) for v in g.mu) + ")"


def _join_terms(parts: list[tuple[str, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for t, (sign, body) in enumerate(parts):
        if t == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append((" + " if sign == "+" else " - ") + body)
    return "".join(out)


def format_element(e: Element) -> str:
    parts = []
    for beta, c in e.sorted_terms():
        sign, prefix = _coeff_prefix(c)
        body = prefix + "x^(" + ",".join(str(v) for v in beta.entries) + ")"
        parts.append((sign, body))
    return _join_terms(parts)


def format_operator(op: Operator) -> str:
    parts = []
    for word, c in op.sorted_terms():
        sign, prefix = _coeff_prefix(c)
        body = " ".join(_symbol_text(g) for g in word)
        if not body:
            body = prefix.strip() or "1"
        else:
            body = prefix + body
        parts.append((sign, body))
    return _join_terms(parts)


def format_formal(expr: FormalUq) -> str:
    """Display form of a formal expression (not re-parseable: E/F/K words
    are abstract generators, not operator atoms)."""
    parts = []
    for word, c in expr.sorted_terms():
        sign, prefix = _coeff_prefix(c)
        syms = []
        for s in word:
            if s.kind == "K":
                syms.append("K(" + ",".join(str(v) for v in s.v) + ")")
            else:
                syms.append(f"{s.kind}{s.i}")
        body = " ".join(syms)
        if not body:
            body = prefix.strip() or "1"
        else:
            body = prefix + body
        parts.append((sign, body))
    return _join_terms(parts)
