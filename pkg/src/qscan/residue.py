"""Modular arithmetic, primitive roots and reduced powers v^n in 1..p-1."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

from .errors import DomainError


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """Return ``base**exp % modulus`` in ``0..modulus-1``."""
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise DomainError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, modulus)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes ``<= n`` (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Order of ``a`` in (Z/n)^*, by direct iteration."""
    a %= n
    if a == 0:
        raise DomainError(f"0 has no multiplicative order mod {n}")
    x, k = a, 1
    while x != 1:
        x = x * a % n
        k += 1
        if k > n:
            raise DomainError(f"{a} is not a unit mod {n}")
    return k


def is_primitive_root(g: int, p: int) -> bool:
    """Order test using the prime factorisation of ``p - 1``."""
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // ell, p) != 1 for ell in prime_factors(p - 1))


def is_primitive_root_scan(g: int, p: int) -> bool:
    """Check that no power g^i with 1 <= i <= p-2 equals 1.

    O(p) reference for :func:`is_primitive_root`.
    """
    x = 1
    for _ in range(p - 2):
        x = x * g % p
        if x == 1:
            return False
    return g % p != 0


@lru_cache(maxsize=None)
def smallest_primitive_root(p: int) -> int:
    if p < 3 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    for g in range(2, p):
        if is_primitive_root(g, p):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime ``p``, a primitive root ``v`` and the table of v^j mod p.

    ``pow_table[j]`` is v^j reduced into 1..p-1 for j = 0..p-2.  ``log_table``
    is the inverse map (index by residue, entry 0 unused).
    """

    p: int
    v: int
    pow_table: tuple[int, ...] = field(repr=False)
    log_table: tuple[int, ...] = field(repr=False)

    @classmethod
    def create(cls, p: int, v: int | None = None) -> PrimeContext:
        if p < 3 or not is_prime(p):
            raise DomainError(f"{p} is not an odd prime")
        if v is None:
            v = smallest_primitive_root(p)
        elif not is_primitive_root(v, p):
            raise DomainError(f"{v} is not a primitive root mod {p}")
        table = [1] * (p - 1)
        for j in range(1, p - 1):
            table[j] = table[j - 1] * v % p
        log = [0] * p
        for j, r in enumerate(table):
            log[r] = j
        return cls(p, v, tuple(table), tuple(log))

    def power(self, n: int) -> int:
        return reduced_power(self, n)

    def log(self, x: int) -> int:
        """Discrete logarithm of ``x`` to base ``v``, in 0..p-2."""
        x %= self.p
        if x == 0:
            raise DomainError("0 has no discrete logarithm")
        return self.log_table[x]


def reduced_power(ctx: PrimeContext, n: int) -> int:
    """v^n reduced into 1..p-1; negative ``n`` denotes the inverse power."""
    return ctx.pow_table[n % (ctx.p - 1)]
