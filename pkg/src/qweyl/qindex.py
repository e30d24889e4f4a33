"""Integer multi-indices and the twisted pairing behind every q-exponent.

star(a, b) sums a_i * b_j over index pairs i > j; its antisymmetrisation
exponentiates to the commutation factor theta(a, b) = q^(a*b - b*a) that
governs how monomials and diagonal operators reorder.
"""

from __future__ import annotations

from .errors import RankMismatch
from .qring import LaurentPoly, q_power


class MultiIndex:
    """An integer vector of fixed rank.

    Used both as a monomial exponent (nonnegative entries) and as a
    diagonal weight (arbitrary sign).  Immutable and hashable; compares
    lexicographically, which fixes every enumeration order in the package.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(int(v) for v in entries)

    @staticmethod
    def zero(n: int) -> "MultiIndex":
        return MultiIndex((0,) * n)

    @staticmethod
    def unit(n: int, i: int) -> "MultiIndex":
        """The i-th standard basis vector, i counted from 1."""
        if not 1 <= i <= n:
            raise RankMismatch(f"unit index {i} outside 1..{n}")
        return MultiIndex(tuple(1 if t == i - 1 else 0 for t in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def degree(self) -> int:
        return sum(self.entries)

    def is_nonneg(self) -> bool:
        return all(v >= 0 for v in self.entries)

    def bump(self, i: int, delta: int) -> "MultiIndex":
        """Return a copy with entry i (1-based) shifted by delta."""
        e = list(self.entries)
        e[i - 1] += delta
        return MultiIndex(e)

    def scaled(self, m: int) -> "MultiIndex":
        return MultiIndex(tuple(m * v for v in self.entries))

    def _check(self, other: "MultiIndex") -> None:
        if len(self.entries) != len(other.entries):
            raise RankMismatch(
                f"rank {len(self.entries)} vs {len(other.entries)}")

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        self._check(other)
        return MultiIndex(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "MultiIndex") -> "MultiIndex":
        self._check(other)
        return MultiIndex(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "MultiIndex":
        return MultiIndex(tuple(-a for a in self.entries))

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiIndex) and self.entries == other.entries

    def __lt__(self, other: "MultiIndex") -> bool:
        self._check(other)
        return self.entries < other.entries

    def __le__(self, other: "MultiIndex") -> bool:
        self._check(other)
        return self.entries <= other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"MultiIndex({list(self.entries)})"

    def to_json(self) -> list:
        return list(self.entries)

    @staticmethod
    def from_json(obj) -> "MultiIndex":
        return MultiIndex(obj)


def star(alpha: MultiIndex, beta: MultiIndex) -> int:
    """The pairing sum_{i > j} alpha_i * beta_j, returned as a plain exponent."""
    alpha._check(beta)
    total = 0
    prefix = 0
    for a, b in zip(alpha.entries, beta.entries):
        total += a * prefix
        prefix += b
    return total


def theta_exponent(alpha: MultiIndex, beta: MultiIndex) -> int:
    """Exponent of theta(alpha, beta), i.e. star(alpha, beta) - star(beta, alpha)."""
    return star(alpha, beta) - star(beta, alpha)


def theta(alpha: MultiIndex, beta: MultiIndex) -> LaurentPoly:
    """The commutation factor q^(alpha*beta - beta*alpha), a single monomial."""
    return q_power(theta_exponent(alpha, beta))
