"""Shared test utilities: random operator words and sweep helpers."""

from __future__ import annotations

from qweyl.aqn import Element, monomials_up_to, mul
from qweyl.qindex import MultiIndex
from qweyl.qring import LaurentPoly
from qweyl.weylops import D, Operator, S, T, X, apply


def random_word(rng, n, max_len=5):
    word = []
    for _ in range(rng.randint(0, max_len)):
        kind = rng.choice("XDST")
        i = rng.randint(1, n)
        if kind == "X":
            word.append(X(i))
        elif kind == "D":
            word.append(D(i))
        elif kind == "S":
            word.append(S(i, rng.choice((1, -1))))
        else:
            word.append(T(tuple(rng.randint(-1, 1) for _ in range(n))))
    return tuple(word)


def random_operator(rng, n, max_words=3, max_len=5):
    terms = {}
    for _ in range(rng.randint(1, max_words)):
        coeff = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)
                             for _ in range(rng.randint(1, 2))})
        if coeff:
            terms[random_word(rng, n, max_len)] = coeff
    return Operator(n, terms)


def random_laurent(rng, max_deg=10, max_terms=5):
    return LaurentPoly({rng.randint(-max_deg, max_deg): rng.randint(-9, 9)
                        for _ in range(rng.randint(0, max_terms))})


def twisted_leibniz_holds(n, i, alpha, beta, gamma, branch):
    """The twisted derivation law for x^(alpha) d_i on a monomial pair, with
    branch +1/-1 choosing the sign variant; alpha = 0 gives the plain d_i law."""
    u = Element.monomial(beta)
    v = Element.monomial(gamma)
    xa = Element.monomial(alpha)
    d_op = Operator.from_word(n, [D(i)])

    def xad(w):
        return mul(xa, apply(d_op, w))

    def sig(e, w):
        return apply(Operator.from_word(n, [S(i, e)]), w)

    weight = alpha - MultiIndex.unit(n, i)
    theta_op = Operator.from_word(n, [T(tuple(weight.entries))])
    lhs = xad(mul(u, v))
    rhs = mul(xad(u), sig(-branch, v)) + mul(apply(theta_op, sig(branch, u)), xad(v))
    return lhs == rhs


def associativity_failures(n, dmax):
    """Triples of monomials violating a(bc) = (ab)c, if any."""
    bad = []
    monos = monomials_up_to(n, dmax)
    for a in monos:
        ea = Element.monomial(a)
        for b in monos:
            eb = Element.monomial(b)
            ab = mul(ea, eb)
            for c in monos:
                ec = Element.monomial(c)
                if mul(ea, mul(eb, ec)) != mul(ab, ec):
                    bad.append((a, b, c))
    return bad
