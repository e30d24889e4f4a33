"""Operator words over the alphabet {x_i, d_i, sigma_i^e, Theta(mu)} acting on
the quantum divided power algebra.

Words act right-to-left (the rightmost symbol is applied first), matching the
usual composition order x_i d_{i+1} sigma_i.  Equality of operators is decided
by comparing actions on all basis monomials up to a degree bound; that action
oracle is the authority everywhere, including for the rewriting system that
produces normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .aqn import Element, monomials_up_to
from .errors import InvalidArgs, NotDivisible, RankMismatch
from .qindex import MultiIndex, theta_exponent
from .qring import LaurentPoly, exact_div, q_int, q_power
from .report import RelationResult, VerificationReport

_CLASS = {"X": 0, "D": 1, "S": 2, "T": 3}


@dataclass(frozen=True)
class GenSymbol:
    """One letter of an operator word.

    kind "X": left multiplication by x^(eps_i);  "D": the q-derivative d_i;
    "S": the diagonal automorphism sigma_i^e (e any nonzero integer, +-1 for
    the generators themselves);  "T": the diagonal automorphism Theta(mu).
    """

    kind: str
    i: int = 0
    e: int = 0
    mu: tuple[int, ...] = ()

    def degree_shift(self) -> int:
        return {"X": 1, "D": -1}.get(self.kind, 0)

    def __repr__(self) -> str:
        if self.kind == "X":
            return f"x{self.i}"
        if self.kind == "D":
            return f"d{self.i}"
        if self.kind == "S":
            return f"s{self.i}^{self.e}" if self.e != 1 else f"s{self.i}"
        return f"t{list(self.mu)}"


def X(i: int) -> GenSymbol:
    return GenSymbol("X", i=i)


def D(i: int) -> GenSymbol:
    return GenSymbol("D", i=i)


def S(i: int, e: int = 1) -> GenSymbol:
    if e == 0:
        raise InvalidArgs("sigma exponent must be nonzero")
    return GenSymbol("S", i=i, e=e)


def T(mu) -> GenSymbol:
    return GenSymbol("T", mu=tuple(int(v) for v in mu))


def _symbol_key(g: GenSymbol):
    return (_CLASS[g.kind], g.i, g.e, g.mu)


def _word_key(word):
    return tuple(_symbol_key(g) for g in word)


def _check_symbol(g: GenSymbol, n: int) -> None:
    if g.kind in ("X", "D", "S"):
        if not 1 <= g.i <= n:
            raise RankMismatch(f"generator index {g.i} outside 1..{n}")
    elif g.kind == "T":
        if len(g.mu) != n:
            raise RankMismatch(f"Theta weight has length {len(g.mu)}, rank {n}")
    else:
        raise InvalidArgs(f"unknown symbol kind {g.kind!r}")


def degree_shift(word) -> int:
    return sum(g.degree_shift() for g in word)


class Operator:
    """A finite Laurent-coefficient combination of operator words.

    terms maps a word (tuple of GenSymbol, written left-to-right) to a
    nonzero coefficient; the empty word is the identity.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        cleaned: dict[tuple, LaurentPoly] = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            for g in word:
                _check_symbol(g, n)
            if coeff:
                cleaned[word] = coeff
        self.terms = cleaned

    @staticmethod
    def zero(n: int) -> "Operator":
        return Operator(n)

    @staticmethod
    def identity(n: int) -> "Operator":
        return Operator(n, {(): LaurentPoly.one()})

    @staticmethod
    def from_word(n: int, symbols, coeff: LaurentPoly | int = 1) -> "Operator":
        if isinstance(coeff, int):
            coeff = LaurentPoly({0: coeff})
        return Operator(n, {tuple(symbols): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Operator") -> None:
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} vs {other.n}")

    def __add__(self, other: "Operator") -> "Operator":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, LaurentPoly.zero()) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return _raw(self.n, out)

    def __neg__(self) -> "Operator":
        return _raw(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Operator") -> "Operator":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "Operator":
        if isinstance(c, int):
            c = LaurentPoly({0: c})
        if not c:
            return Operator.zero(self.n)
        return _raw(self.n, {w: co * c for w, co in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Operator):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Operator) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[tuple, LaurentPoly]]:
        return sorted(self.terms.items(), key=lambda t: _word_key(t[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "Operator(0)"
        body = " + ".join(
            f"({c}) {' '.join(map(repr, w)) if w else '1'}"
            for w, c in self.sorted_terms())
        return f"Operator({body})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"word": [_symbol_json(g) for g in w], "coeff": c.to_json()}
                      for w, c in self.sorted_terms()],
        }

    @staticmethod
    def from_json(obj: dict) -> "Operator":
        terms = {}
        for t in obj["terms"]:
            word = tuple(_symbol_from_json(s) for s in t["word"])
            terms[word] = LaurentPoly.from_json(t["coeff"])
        return Operator(int(obj["n"]), terms)


def _raw(n: int, terms: dict) -> Operator:
    op = Operator.__new__(Operator)
    op.n = n
    op.terms = terms
    return op


def _symbol_json(g: GenSymbol) -> dict:
    if g.kind == "S":
        return {"k": "S", "i": g.i, "e": g.e}
    if g.kind == "T":
        return {"k": "T", "mu": list(g.mu)}
    return {"k": g.kind, "i": g.i}


def _symbol_from_json(obj: dict) -> GenSymbol:
    k = obj["k"]
    if k == "S":
        return S(obj["i"], obj["e"])
    if k == "T":
        return T(obj["mu"])
    if k == "X":
        return X(obj["i"])
    if k == "D":
        return D(obj["i"])
    raise InvalidArgs(f"unknown symbol kind {k!r}")


# ---------------------------------------------------------------------------
# actions


def apply_generator(g: GenSymbol, elem: Element) -> Element:
    """Act with a single generator on an element.

    d_i sends x^(beta) to q^(-sum_{s<i} beta_s) x^(beta - eps_i) and kills
    monomials with beta_i = 0; x_i multiplies by x^(eps_i); sigma_i^e and
    Theta(mu) are diagonal with eigenvalues q^(e beta_i) and theta(mu, beta).
    """
    n = elem.n
    _check_symbol(g, n)
    out: dict[MultiIndex, LaurentPoly] = {}

    def put(beta, coeff):
        s = out.get(beta, LaurentPoly.zero()) + coeff
        if s:
            out[beta] = s
        else:
            out.pop(beta, None)

    if g.kind == "D":
        i = g.i
        for beta, c in elem.terms.items():
            if beta.entries[i - 1] == 0:
                continue
            shift = -sum(beta.entries[: i - 1])
            put(beta.bump(i, -1), c.shift(shift))
    elif g.kind == "X":
        i = g.i
        for beta, c in elem.terms.items():
            shift = sum(beta.entries[: i - 1])
            coeff = c.shift(shift) * q_int(beta.entries[i - 1] + 1)
            put(beta.bump(i, 1), coeff)
    elif g.kind == "S":
        i, e = g.i, g.e
        for beta, c in elem.terms.items():
            put(beta, c.shift(e * beta.entries[i - 1]))
    else:  # T
        mu = MultiIndex(g.mu)
        for beta, c in elem.terms.items():
            put(beta, c.shift(theta_exponent(mu, beta)))
    return Element(n, out)


def apply(op: Operator, elem: Element) -> Element:
    """Act with an operator: linear over terms, words applied right-to-left."""
    if op.n != elem.n:
        raise RankMismatch(f"operator rank {op.n}, element rank {elem.n}")
    total = Element.zero(elem.n)
    for word, coeff in op.terms.items():
        cur = elem
        for g in reversed(word):
            cur = apply_generator(g, cur)
            if cur.is_zero():
                break
        total = total + cur.scale(coeff)
    return total


def compose(a: Operator, b: Operator) -> Operator:
    """Word concatenation, distributed bilinearly: (a b)(v) = a(b(v))."""
    a._check(b)
    out: dict[tuple, LaurentPoly] = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            w = w1 + w2
            s = out.get(w, LaurentPoly.zero()) + c1 * c2
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return _raw(a.n, out)


def add(a: Operator, b: Operator) -> Operator:
    return a + b


def scale(a: Operator, c) -> Operator:
    return a.scale(c)


def q_bracket(a: Operator, b: Operator, c: LaurentPoly | int) -> Operator:
    """The deformed commutator [a, b]_c = a b - c b a."""
    a._check(b)
    return compose(a, b) - compose(b, a).scale(c)


# ---------------------------------------------------------------------------
# normal form

def _theta_pair_exp(mu: tuple, j: int) -> int:
    # exponent of theta(mu, eps_j)
    return sum(mu[j:]) - sum(mu[: j - 1])


def _rewrite_pair(a: GenSymbol, b: GenSymbol, n: int):
    """Rewrite the adjacent product a·b into canonically ordered terms.

    Returns a list of (coefficient, replacement subword) pairs.  The d_i x_i
    case uses the orientation d_i x_i -> q x_i d_i + sigma_i^{-1}; all other
    rules are plain twisted swaps or merges of diagonal symbols.
    """
    ka, kb = a.kind, b.kind
    if ka == "D" and kb == "X":
        if a.i == b.i:
            return [(q_power(1), (b, a)), (LaurentPoly.one(), (S(a.i, -1),))]
        exp = 1 if b.i > a.i else -1  # theta(eps_{b.i}, eps_{a.i})
        return [(q_power(exp), (b, a))]
    if ka == kb == "X" or ka == kb == "D":
        # a.i > b.i here; theta(eps_{a.i}, eps_{b.i}) = q
        return [(q_power(1), (b, a))]
    if ka == "S" and kb in ("X", "D"):
        sign = 1 if kb == "X" else -1
        exp = sign * a.e if a.i == b.i else 0
        return [(q_power(exp), (b, a))]
    if ka == "T" and kb in ("X", "D"):
        exp = _theta_pair_exp(a.mu, b.i)
        if kb == "D":
            exp = -exp
        return [(q_power(exp), (b, a))]
    if ka == "T" and kb == "S":
        return [(LaurentPoly.one(), (b, a))]
    if ka == kb == "S":
        if a.i > b.i:
            return [(LaurentPoly.one(), (b, a))]
        e = a.e + b.e
        return [(LaurentPoly.one(), (S(a.i, e),) if e else ())]
    if ka == kb == "T":
        mu = tuple(x + y for x, y in zip(a.mu, b.mu))
        return [(LaurentPoly.one(), (T(mu),) if any(mu) else ())]
    raise InvalidArgs(f"no rewrite for pair {a!r} {b!r}")


def _pair_violates(a: GenSymbol, b: GenSymbol) -> bool:
    ca, cb = _CLASS[a.kind], _CLASS[b.kind]
    if ca != cb:
        return ca > cb
    if a.kind in ("X", "D"):
        return a.i > b.i
    if a.kind == "S":
        return a.i >= b.i
    return True  # two Theta symbols always merge


def _first_violation(word) -> int | None:
    for k in range(len(word) - 1):
        if _pair_violates(word[k], word[k + 1]):
            return k
    return None


def normalize(op: Operator) -> Operator:
    """Rewrite every word into the canonical order: x-block (indices
    ascending), then d-block, then one sigma power per index, then at most
    one Theta symbol.  The action is preserved; like terms are collected.
    """
    out: dict[tuple, LaurentPoly] = {}
    stack = []
    for word, coeff in op.terms.items():
        word = tuple(g for g in word if not (g.kind == "T" and not any(g.mu)))
        stack.append((word, coeff))
    while stack:
        word, coeff = stack.pop()
        if not coeff:
            continue
        k = _first_violation(word)
        if k is None:
            s = out.get(word, LaurentPoly.zero()) + coeff
            if s:
                out[word] = s
            else:
                out.pop(word, None)
            continue
        for c2, repl in _rewrite_pair(word[k], word[k + 1], op.n):
            stack.append((word[:k] + repl + word[k + 2:], coeff * c2))
    return _raw(op.n, out)


# ---------------------------------------------------------------------------
# action-based equality

@dataclass
class OpEqResult:
    """Outcome of an action sweep; on failure, the lexicographically smallest
    failing monomial together with both sides."""

    equal: bool
    beta: MultiIndex | None = None
    lhs: Element | None = None
    rhs: Element | None = None
    note: str | None = None

    def __bool__(self) -> bool:
        return self.equal

    def to_counterexample(self) -> dict:
        out = {
            "beta": self.beta.to_json() if self.beta is not None else None,
            "lhs": self.lhs.to_json() if self.lhs is not None else None,
            "rhs": self.rhs.to_json() if self.rhs is not None else None,
        }
        if self.note:
            out["note"] = self.note
        return out


def sweep_actions(lhs_fn, rhs_fn, n: int, degree: int) -> OpEqResult:
    """Compare two monomial-action callables on all |beta| <= degree."""
    for beta in monomials_up_to(n, degree):
        mono = Element.monomial(beta)
        lhs = lhs_fn(mono)
        rhs = rhs_fn(mono)
        if rhs is None:
            return OpEqResult(False, beta, lhs, None, note="not divisible")
        if lhs != rhs:
            return OpEqResult(False, beta, lhs, rhs)
    return OpEqResult(True)


def op_eq_up_to_degree(a: Operator, b: Operator, degree: int) -> OpEqResult:
    """Action equality of two operators on every monomial of degree <= degree."""
    a._check(b)
    return sweep_actions(lambda m: apply(a, m), lambda m: apply(b, m), a.n, degree)


def divide_element(num: Element, den: LaurentPoly) -> Element | None:
    """Divide every coefficient exactly by den; None when any quotient fails."""
    try:
        return Element(num.n, {b: exact_div(c, den) for b, c in num.terms.items()})
    except NotDivisible:
        return None


def action_equals_quotient(lhs: Operator, num: Operator, den: LaurentPoly,
                           degree: int) -> OpEqResult:
    """Check lhs = num/den as actions, dividing per-monomial via exact_div."""
    lhs._check(num)
    return sweep_actions(lambda m: apply(lhs, m),
                         lambda m: divide_element(apply(num, m), den),
                         lhs.n, degree)


# ---------------------------------------------------------------------------
# defining-relation verifier

def _eps(n: int, i: int, sign: int = 1) -> tuple:
    return tuple(sign if t == i - 1 else 0 for t in range(n))


def verify_weyl_relations(n: int, degree: int) -> VerificationReport:
    """Check every defining relation of the operator algebra as an action
    identity up to the degree bound.

    Both sides of each relation are run through normalize first, so the
    sweep certifies the rewriting table together with the generator actions.
    """
    if n < 1:
        raise InvalidArgs("n must be >= 1")
    if degree < 1:
        raise InvalidArgs("degree must be >= 1")
    rep = VerificationReport("weyl", n, degree)
    q = q_power(1)
    qinv = q_power(-1)
    den = q - qinv

    def word(symbols, coeff=1):
        return Operator.from_word(n, symbols, coeff)

    ident = Operator.identity(n)

    def ck(rel_id, lhs, rhs):
        res = op_eq_up_to_degree(normalize(lhs), normalize(rhs), degree)
        rep.add(RelationResult(rel_id, "pass" if res.equal else "fail",
                               None if res.equal else res.to_counterexample()))

    def ck_div(rel_id, lhs, num):
        res = action_equals_quotient(normalize(lhs), normalize(num), den, degree)
        rep.add(RelationResult(rel_id, "pass" if res.equal else "fail",
                               None if res.equal else res.to_counterexample()))

    for i in range(1, n + 1):
        ck(f"sigma-inv:i={i}", word([S(i, 1), S(i, -1)]), ident)
        ck(f"theta-inv:i={i}", word([T(_eps(n, i)), T(_eps(n, i, -1))]), ident)
    for i in range(1, n):
        mu = tuple(-a + b for a, b in zip(_eps(n, i), _eps(n, i + 1)))
        ck(f"theta-as-sigma:i={i}", word([T(mu)]), word([S(i, 1), S(i + 1, 1)]))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            mu = tuple(a + b for a, b in zip(_eps(n, i), _eps(n, j)))
            ck(f"theta-merge:i={i},j={j}",
               word([T(_eps(n, i)), T(_eps(n, j))]), word([T(mu)]))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ck(f"sigma-comm:i={i},j={j}",
               word([S(i, 1), S(j, 1)]), word([S(j, 1), S(i, 1)]))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ck(f"sigma-theta-comm:i={i},j={j}",
               word([S(i, 1), T(_eps(n, j))]), word([T(_eps(n, j)), S(i, 1)]))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ti = theta_exponent(MultiIndex(_eps(n, i)), MultiIndex(_eps(n, j)))
            ck(f"theta-x:i={i},j={j}",
               word([T(_eps(n, i)), X(j), T(_eps(n, i, -1))]),
               word([X(j)], coeff=q_power(ti)))
            ck(f"theta-d:i={i},j={j}",
               word([T(_eps(n, i)), D(j), T(_eps(n, i, -1))]),
               word([D(j)], coeff=q_power(-ti)))
            delta = 1 if i == j else 0
            ck(f"sigma-x:i={i},j={j}",
               word([S(i, 1), X(j), S(i, -1)]), word([X(j)], coeff=q_power(delta)))
            ck(f"sigma-d:i={i},j={j}",
               word([S(i, 1), D(j), S(i, -1)]), word([D(j)], coeff=q_power(-delta)))
    for i in range(1, n + 1):
        for j in range(1, i):
            ti = theta_exponent(MultiIndex(_eps(n, i)), MultiIndex(_eps(n, j)))
            ck(f"x-x:i={i},j={j}",
               word([X(i), X(j)]), word([X(j), X(i)], coeff=q_power(ti)))
            ck(f"d-d:i={i},j={j}",
               word([D(i), D(j)]), word([D(j), D(i)], coeff=q_power(ti)))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            tj = theta_exponent(MultiIndex(_eps(n, j)), MultiIndex(_eps(n, i)))
            ck(f"d-x:i={i},j={j}",
               word([D(i), X(j)]), word([X(j), D(i)], coeff=q_power(tj)))
    for i in range(1, n + 1):
        dx = word([D(i), X(i)])
        xd = word([X(i), D(i)])
        ck(f"d-x-plus:i={i}", dx - xd.scale(q), word([S(i, -1)]))
        ck(f"d-x-minus:i={i}", dx - xd.scale(qinv), word([S(i, 1)]))
        # closed forms with the exact division by q - q^-1
        ck_div(f"dx-closed:i={i}", dx,
               word([S(i, 1)], coeff=q) - word([S(i, -1)], coeff=qinv))
        ck_div(f"xd-closed:i={i}", xd, word([S(i, 1)]) - word([S(i, -1)]))
    return rep
