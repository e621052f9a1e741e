"""The group-ring elements P(sigma), T(sigma) and the quotient Q(sigma).

The Galois group of Q(zeta_p)/Q is cyclic of order p-1, generated by
sigma: zeta_p -> zeta_p^v.  Its integral group ring is modelled as integer
vectors of length p-1 (coefficient of sigma^i at index i) with sigma^(p-1) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantViolation
from .residue import PrimeContext, reduced_power


@dataclass(frozen=True)
class GroupRingElem:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ValueError(
                f"need {self.p - 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_terms(cls, p: int, terms: dict[int, int]) -> GroupRingElem:
        """Build sum(c * sigma^e) from ``{e: c}``; exponents are taken mod p-1."""
        n = p - 1
        out = [0] * n
        for e, c in terms.items():
            out[e % n] += c
        return cls(p, tuple(out))

    @classmethod
    def zero(cls, p: int) -> GroupRingElem:
        return cls(p, (0,) * (p - 1))

    @classmethod
    def one(cls, p: int) -> GroupRingElem:
        return cls.from_terms(p, {0: 1})

    def _check(self, other: GroupRingElem):
        if other.p != self.p:
            raise ValueError("group ring elements over different primes")

    def __add__(self, other: GroupRingElem) -> GroupRingElem:
        self._check(other)
        return GroupRingElem(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: GroupRingElem) -> GroupRingElem:
        self._check(other)
        return GroupRingElem(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> GroupRingElem:
        return GroupRingElem(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other: GroupRingElem | int) -> GroupRingElem:
        if isinstance(other, int):
            return GroupRingElem(self.p, tuple(other * a for a in self.coeffs))
        self._check(other)
        n = self.p - 1
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return GroupRingElem(self.p, tuple(out))

    __rmul__ = __mul__

    def degree(self) -> int:
        """Largest i with a nonzero coefficient of sigma^i, or -1 for zero."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def exact_div(self, d: int) -> GroupRingElem:
        """Divide every coefficient by ``d``; raise if any division is inexact."""
        bad = [i for i, c in enumerate(self.coeffs) if c % d]
        if bad:
            raise InvariantViolation(
                f"coefficients at sigma^{bad[:5]} are not divisible by {d}"
            )
        return GroupRingElem(self.p, tuple(c // d for c in self.coeffs))

    def mod(self, m: int) -> tuple[int, ...]:
        return tuple(c % m for c in self.coeffs)


@dataclass(frozen=True)
class DeltaVector:
    """Integer coefficients delta_1..delta_{p-2} of Q(sigma).

    ``delta[i-1]`` holds delta_i; values are exact integers in (-p, 0].
    """

    p: int
    v: int
    delta: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        """delta_i for 1 <= i <= p-2."""
        if not 1 <= i <= self.p - 2:
            raise IndexError(i)
        return self.delta[i - 1]

    def as_group_ring(self) -> GroupRingElem:
        return GroupRingElem(self.p, (0,) + self.delta)


def delta_numerator(ctx: PrimeContext, i: int) -> int:
    """p * delta_i = v^{-(i-1)} - v^{-i} * v, with reduced powers."""
    return reduced_power(ctx, -(i - 1)) - reduced_power(ctx, -i) * ctx.v


def delta_coefficients(ctx: PrimeContext) -> DeltaVector:
    p = ctx.p
    out = []
    for i in range(1, p - 1):
        num = delta_numerator(ctx, i)
        d, r = divmod(num, p)
        if r:
            raise InvariantViolation(f"p*delta_{i} = {num} is not divisible by p={p}")
        out.append(d)
    # delta_0 closes the cycle and must vanish
    if delta_numerator(ctx, p - 1) != 0:
        raise InvariantViolation(f"delta_0 is nonzero for p={p}, v={ctx.v}")
    return DeltaVector(p, ctx.v, tuple(out))


def implied_delta0(ctx: PrimeContext) -> int:
    """(v^{-(p-2)} - v) / p, which is 0 because v^{-(p-2)} = v."""
    num = reduced_power(ctx, -(ctx.p - 2)) - ctx.v
    if num % ctx.p:
        raise InvariantViolation("delta_0 numerator is not divisible by p")
    return num // ctx.p


def P_of_sigma(ctx: PrimeContext) -> GroupRingElem:
    """P(sigma) = sum_{i=0}^{p-2} v^{-i} sigma^i."""
    return GroupRingElem(ctx.p, tuple(reduced_power(ctx, -i) for i in range(ctx.p - 1)))


def T_of_sigma(ctx: PrimeContext) -> GroupRingElem:
    """T(sigma) = v^{-(p-2)} * prod_{k=0, k != 1}^{p-2} (sigma - v^k), expanded exactly."""
    p = ctx.p
    poly = [1]  # ascending coefficients of an ordinary polynomial in sigma
    for k in range(p - 1):
        if k == 1:
            continue
        root = reduced_power(ctx, k)
        nxt = [0] * (len(poly) + 1)
        for j, c in enumerate(poly):
            nxt[j + 1] += c
            nxt[j] -= root * c
        poly = nxt
    lead = reduced_power(ctx, -(p - 2))
    # degree p-2 < p-1, so no exponent wraps around
    return GroupRingElem.from_terms(p, {j: lead * c for j, c in enumerate(poly)})


def verify_P_equals_T_mod_p(ctx: PrimeContext) -> GroupRingElem:
    """Check P(sigma) = T(sigma) + p*R(sigma) with deg R < p-2; return R."""
    diff = P_of_sigma(ctx) - T_of_sigma(ctx)
    R = diff.exact_div(ctx.p)
    if R.degree() >= ctx.p - 2:
        raise InvariantViolation(f"deg R = {R.degree()} is not < p-2")
    return R


def symbolic_Q_check(ctx: PrimeContext) -> DeltaVector:
    """Recompute delta by expanding P(sigma)*(sigma - v) in the group ring."""
    p = ctx.p
    prod = P_of_sigma(ctx) * GroupRingElem.from_terms(p, {1: 1, 0: -ctx.v})
    Q = prod.exact_div(p)
    if Q.coeffs[0] != 0:
        raise InvariantViolation(f"constant coefficient of Q is {Q.coeffs[0]}, expected 0")
    result = DeltaVector(p, ctx.v, Q.coeffs[1:])
    if result != delta_coefficients(ctx):
        raise InvariantViolation("group-ring expansion disagrees with the delta formula")
    return result


def evaluate_Q(delta: DeltaVector, x: int) -> int:
    """sum_{i=1}^{p-2} delta_i x^i mod p, by Horner's rule."""
    p = delta.p
    x %= p
    if x == 0:
        raise DomainError("Q is evaluated on F_p^*, got x = 0 mod p")
    acc = 0
    for d in reversed(delta.delta):
        acc = (acc + d) * x % p
    return acc


def evaluate_Q_shifted(delta: DeltaVector, x: int) -> int:
    """sum_{i=1}^{p-2} delta_i x^(i-1) mod p (the form used by the regularity test)."""
    p = delta.p
    x %= p
    if x == 0:
        raise DomainError("x = 0 mod p")
    acc = 0
    for d in reversed(delta.delta):
        acc = (acc * x + d) % p
    return acc
