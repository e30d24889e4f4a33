"""The quantum divided power algebra: graded basis x^(beta) and its
twisted multiplication x^(a) x^(b) = q^(a*b) [a+b over a] x^(a+b).
"""

from __future__ import annotations

from itertools import product

from .errors import InvalidArgs, RankMismatch
from .qindex import MultiIndex, star
from .qring import LaurentPoly, q_binom, q_power


class Element:
    """A finite Laurent-coefficient combination of basis monomials x^(beta).

    terms maps MultiIndex (nonnegative entries) to a nonzero LaurentPoly;
    the canonical form makes structural equality semantic equality.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        cleaned: dict[MultiIndex, LaurentPoly] = {}
        for beta, coeff in (terms or {}).items():
            if beta.n != n:
                raise RankMismatch(f"monomial rank {beta.n}, element rank {n}")
            if not beta.is_nonneg():
                raise InvalidArgs(f"negative exponent in {beta!r}")
            if coeff:
                cleaned[beta] = coeff
        self.terms = cleaned

    @staticmethod
    def zero(n: int) -> "Element":
        return Element(n)

    @staticmethod
    def monomial(beta: MultiIndex, coeff: LaurentPoly | int = 1) -> "Element":
        if isinstance(coeff, int):
            coeff = LaurentPoly({0: coeff})
        return Element(beta.n, {beta: coeff})

    @staticmethod
    def unit(n: int) -> "Element":
        return Element.monomial(MultiIndex.zero(n))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Element") -> None:
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} vs {other.n}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for beta, c in other.terms.items():
            s = out.get(beta, LaurentPoly.zero()) + c
            if s:
                out[beta] = s
            else:
                out.pop(beta, None)
        return _raw(self.n, out)

    def __neg__(self) -> "Element":
        return _raw(self.n, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "Element":
        if isinstance(c, int):
            c = LaurentPoly({0: c})
        if not c:
            return Element.zero(self.n)
        return _raw(self.n, {b: co * c for b, co in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[MultiIndex, LaurentPoly]]:
        return sorted(self.terms.items(), key=lambda t: t[0].entries)

    def __repr__(self) -> str:
        if not self.terms:
            return "Element(0)"
        body = " + ".join(f"({c}) x^{list(b.entries)}" for b, c in self.sorted_terms())
        return f"Element({body})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"beta": b.to_json(), "coeff": c.to_json()}
                      for b, c in self.sorted_terms()],
        }

    @staticmethod
    def from_json(obj: dict) -> "Element":
        terms = {MultiIndex.from_json(t["beta"]): LaurentPoly.from_json(t["coeff"])
                 for t in obj["terms"]}
        return Element(int(obj["n"]), terms)


def _raw(n: int, terms: dict) -> Element:
    e = Element.__new__(Element)
    e.n = n
    e.terms = terms
    return e


def mul_monomial(alpha: MultiIndex, beta: MultiIndex) -> Element:
    """Product of two basis monomials.

    The coefficient is the twist q^(alpha*beta) times the product of the
    componentwise Gaussian binomials [alpha_i + beta_i over alpha_i].
    """
    alpha._check(beta)
    if not (alpha.is_nonneg() and beta.is_nonneg()):
        raise InvalidArgs("monomial exponents must be nonnegative")
    coeff = q_power(star(alpha, beta))
    for a, b in zip(alpha.entries, beta.entries):
        if a and b:
            coeff = coeff * q_binom(a + b, a)
    return Element.monomial(alpha + beta, coeff)


def mul(a: Element, b: Element) -> Element:
    """Bilinear extension of the monomial product."""
    a._check(b)
    out = Element.zero(a.n)
    for alpha, ca in a.terms.items():
        for beta, cb in b.terms.items():
            out = out + mul_monomial(alpha, beta).scale(ca * cb)
    return out


def monomials_up_to(n: int, max_degree: int) -> list[MultiIndex]:
    """All beta in Z_+^n with |beta| <= max_degree, in lexicographic order."""
    if max_degree < 0:
        raise InvalidArgs("degree bound must be >= 0")
    out = [MultiIndex(t) for t in product(range(max_degree + 1), repeat=n)
           if sum(t) <= max_degree]
    out.sort(key=lambda m: m.entries)
    return out
