"""The finite field F_{q^f} as F_q[x]/(h), h the lex-first monic irreducible.

Polynomial arithmetic over F_q is delegated to sympy's galoistools
(coefficient lists, highest degree first).
"""

from __future__ import annotations

from itertools import product

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_irreducible_p,
    gf_mul,
    gf_pow_mod,
    gf_rem,
    gf_strip,
)

from .errors import InvariantViolation
from .residue import prime_factors

Elem = tuple[int, ...]


def _norm(poly) -> Elem:
    return tuple(int(c) for c in gf_strip(list(poly)))


def lex_monic_polys(q: int, f: int):
    """Monic degree-f polynomials over F_q, lowest coefficient vector first."""
    for tail in product(range(q), repeat=f):
        yield [1, *tail]


def first_irreducible(q: int, f: int) -> list[int]:
    for h in lex_monic_polys(q, f):
        if gf_irreducible_p(h, q, ZZ):
            return h
    raise InvariantViolation(f"no irreducible polynomial of degree {f} over F_{q}")


class ExtensionField:
    """F_{q^f} with a fixed generator and a full discrete-log table."""

    def __init__(self, q: int, f: int):
        self.q = q
        self.f = f
        self.order = q**f
        self.modulus = first_irreducible(q, f)
        self.generator = self._find_generator()
        self.powers = self._power_table()
        self.log = {x: e for e, x in enumerate(self.powers)}
        if len(self.log) != self.order - 1:
            raise InvariantViolation("generator powers are not distinct")

    def reduce(self, poly) -> Elem:
        return _norm(gf_rem(list(poly), self.modulus, self.q, ZZ))

    def pow(self, x: Elem, n: int) -> Elem:
        return _norm(gf_pow_mod(list(x), n, self.modulus, self.q, ZZ))

    def add(self, x: Elem, y: Elem) -> Elem:
        return _norm(gf_add(list(x), list(y), self.q, ZZ))

    def elements(self):
        """Nonzero elements in lex order of their coefficient vectors."""
        for coeffs in product(range(self.q), repeat=self.f):
            x = self.reduce(coeffs)
            if x:
                yield x

    def _find_generator(self) -> Elem:
        n = self.order - 1
        one = (1,)
        ells = prime_factors(n)
        for x in self.elements():
            if all(self.pow(x, n // ell) != one for ell in ells):
                return x
        raise InvariantViolation("F_{q^f}^* has no generator?")

    def _power_table(self) -> list[Elem]:
        out = [(1,)]
        for _ in range(self.order - 2):
            out.append(self.reduce(gf_mul(list(out[-1]), list(self.generator), self.q, ZZ)))
        return out

    def trace(self, e: int) -> int:
        """Tr_{F_{q^f}/F_q} of generator^e, as an integer in 0..q-1."""
        n = self.order - 1
        acc: Elem = ()
        for j in range(self.f):
            acc = self.add(acc, self.powers[e * self.q**j % n])
        if len(acc) > 1:
            raise InvariantViolation(f"trace {acc} does not lie in F_q")
        return acc[0] if acc else 0
