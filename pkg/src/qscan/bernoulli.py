"""Bernoulli numbers modulo p and Kummer's irregularity criterion.

This is the independent ground truth for the Q(sigma) scan: p is irregular
exactly when p divides B_a for some even a with 2 <= a <= p-3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InvariantViolation
from .residue import is_prime


@dataclass(frozen=True)
class BernoulliTableModP:
    """``values[n]`` is B_n mod p for n = 0..p-3, with B_1 = -1/2."""

    p: int
    values: tuple[int, ...]


@dataclass(frozen=True, order=True)
class IrregularPair:
    """(p, a2) with B_{a2} = 0 mod p; k = p - a2 and m = (k-1)/2."""

    p: int
    a2: int

    def __post_init__(self):
        if self.a2 % 2 or not 2 <= self.a2 <= self.p - 3:
            raise ValueError(f"a2={self.a2} is not an even index in 2..p-3")

    @property
    def k(self) -> int:
        return self.p - self.a2

    @property
    def m(self) -> int:
        return (self.k - 1) // 2


def _require_prime(p: int):
    if p < 5 or not is_prime(p):
        raise DomainError(f"expected a prime p >= 5, got {p}")


@lru_cache(maxsize=256)
def bernoulli_mod_p(p: int) -> BernoulliTableModP:
    """B_0..B_{p-3} mod p from sum_{j=0}^{n} C(n+1, j) B_j = 0, all in F_p."""
    _require_prime(p)
    top = p - 3
    values = [0] * (top + 1)
    values[0] = 1
    row = [1, 1]  # C(1, j) mod p
    for n in range(1, top + 1):
        # row becomes C(n+1, j)
        nxt = [1] * (n + 2)
        for j in range(1, n + 1):
            nxt[j] = (row[j - 1] + row[j]) % p
        row = nxt
        s = 0
        for j in range(n):
            if values[j]:
                s += row[j] * values[j]
        lead = row[n]  # C(n+1, n) = n+1
        if lead % p == 0:
            raise InvariantViolation(f"cannot invert {n + 1} mod {p}")
        values[n] = -s * pow(lead, -1, p) % p
    return BernoulliTableModP(p, tuple(values))


def irregular_pairs_oracle(p: int) -> set[IrregularPair]:
    table = bernoulli_mod_p(p)
    return {
        IrregularPair(p, a2) for a2 in range(2, p - 2, 2) if table.values[a2] == 0
    }


def index_of_irregularity(p: int) -> int:
    return len(irregular_pairs_oracle(p))
