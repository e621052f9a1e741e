"""Exact arithmetic in Z[zeta_p] and Z[zeta_p, zeta_q].

Elements are stored in the power basis with the reductions
zeta_p^(p-1) = -(1 + zeta_p + ... + zeta_p^(p-2)) (and likewise for q), which
makes the coefficient vector unique.  Products are formed in the group ring
Z[C_p] (resp. Z[C_p x C_q] = Z[C_pq]) where multiplication is a cyclic
convolution, then projected back to the power basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DomainError, InvariantViolation


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of integer polynomials (ascending coefficients).

    Uses Kronecker substitution: both operands are packed into one big
    integer, multiplied once, and the signed digits are unpacked.
    """
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    ma = max(map(abs, a))
    mb = max(map(abs, b))
    if ma == 0 or mb == 0:
        return [0] * n
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 2
    A = 0
    for c in reversed(a):
        A = (A << bits) + c
    B = 0
    for c in reversed(b):
        B = (B << bits) + c
    C = A * B
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(n):
        d = C & mask
        C >>= bits
        if d >= half:
            d -= 1 << bits
            C += 1
        out.append(d)
    return out


def cyclic_mul(a: list[int], b: list[int], n: int) -> list[int]:
    """Product in Z[x]/(x^n - 1) of two length-``n`` vectors."""
    full = poly_mul(a, b)
    out = full[:n]
    for i in range(n, len(full)):
        out[i - n] += full[i]
    return out


def _canon1(vec: list[int]) -> tuple[int, ...]:
    """Length-p group-ring vector -> power basis coordinates (length p-1)."""
    top = vec[-1]
    return tuple(c - top for c in vec[:-1])


@dataclass(frozen=True)
class CyclotomicInt:
    """sum coeffs[i] * zeta_p^i, i = 0..p-2."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"need {self.p - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_group_ring(cls, p: int, vec) -> CyclotomicInt:
        """From a length-p vector indexed by exponents 0..p-1."""
        return cls(p, _canon1(list(vec)))

    @classmethod
    def from_int(cls, p: int, n: int) -> CyclotomicInt:
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> CyclotomicInt:
        vec = [0] * p
        vec[k % p] = 1
        return cls.from_group_ring(p, vec)

    @classmethod
    def lam(cls, p: int) -> CyclotomicInt:
        """lambda = zeta_p - 1, the generator of the prime above p."""
        return cls.zeta(p) - cls.from_int(p, 1)

    def group_ring(self) -> list[int]:
        return list(self.coeffs) + [0]

    def _coerce(self, other) -> CyclotomicInt:
        if isinstance(other, int):
            return CyclotomicInt.from_int(self.p, other)
        if isinstance(other, CyclotomicInt) and other.p == self.p:
            return other
        raise TypeError(f"cannot combine CyclotomicInt(p={self.p}) with {other!r}")

    def __add__(self, other) -> CyclotomicInt:
        other = self._coerce(other)
        return CyclotomicInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> CyclotomicInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CyclotomicInt:
        return self._coerce(other) - self

    def __mul__(self, other) -> CyclotomicInt:
        if isinstance(other, int):
            return CyclotomicInt(self.p, tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        prod = cyclic_mul(self.group_ring(), other.group_ring(), self.p)
        return CyclotomicInt.from_group_ring(self.p, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CyclotomicInt:
        if e < 0:
            raise DomainError("negative powers are not defined in Z[zeta_p]")
        result = CyclotomicInt.from_int(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def galois(self, t: int) -> CyclotomicInt:
        """Image under zeta_p -> zeta_p^t."""
        p = self.p
        if t % p == 0:
            raise DomainError(f"t = {t} is 0 mod p and does not define an automorphism")
        vec = [0] * p
        for i, c in enumerate(self.coeffs):
            vec[i * t % p] += c
        return CyclotomicInt.from_group_ring(p, vec)

    def conj(self) -> CyclotomicInt:
        return self.galois(self.p - 1)

    def norm(self) -> int:
        """Product of the p-1 Galois conjugates."""
        if self.is_zero():
            raise DomainError("norm of zero")
        acc = self
        for t in range(2, self.p):
            acc = acc * self.galois(t)
        if not acc.is_integer():
            raise InvariantViolation(f"norm is not a rational integer: {acc.coeffs}")
        return acc.coeffs[0]

    def is_root_of_unity(self) -> bool:
        """True iff the element is +-zeta_p^j for some j."""
        nonzero = [c for c in self.coeffs if c]
        if len(nonzero) == 1 and abs(nonzero[0]) == 1:
            return True
        # zeta_p^(p-1) = -(1 + ... + zeta_p^(p-2)) in the power basis
        return len(set(self.coeffs)) == 1 and abs(self.coeffs[0]) == 1

    def eval_mod(self, z: int, m: int) -> int:
        """Image under zeta_p -> z in Z/m (``z`` must have order p mod m)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * z + c) % m
        return acc

    def div_lambda(self) -> CyclotomicInt:
        """Exact quotient by lambda = zeta_p - 1."""
        p = self.p
        s = sum(self.coeffs)
        if s % p:
            raise InvariantViolation("element is not divisible by zeta_p - 1")
        # shift by a multiple of Phi_p so the polynomial vanishes at x = 1
        c = [a - s // p for a in self.coeffs] + [-(s // p)]
        quo = [0] * (p - 1)
        carry = 0
        for i in range(p - 1, 0, -1):
            carry += c[i]
            quo[i - 1] = carry
        if carry + c[0] != 0:
            raise InvariantViolation("synthetic division by x - 1 left a remainder")
        return CyclotomicInt(p, tuple(quo))

    def valuation_pi(self) -> int:
        """Exponent of the prime (zeta_p - 1) in this element."""
        if self.is_zero():
            raise DomainError("valuation of zero is infinite")
        p = self.p
        a = self
        v = 0
        while True:
            g = 0
            for c in a.coeffs:
                g = gcd(g, c)
            e = 0
            while g % p == 0:
                g //= p
                e += 1
            if e:
                # p = unit * lambda^(p-1)
                a = CyclotomicInt(p, tuple(c // p**e for c in a.coeffs))
                v += e * (p - 1)
            if sum(a.coeffs) % p:
                return v
            a = a.div_lambda()
            v += 1

    def __repr__(self) -> str:
        return f"CyclotomicInt(p={self.p}, {list(self.coeffs)})"


@lru_cache(maxsize=64)
def _crt_index(p: int, q: int) -> tuple[tuple[int, ...], ...]:
    """idx[i][j] = e in 0..pq-1 with e = i mod p, e = j mod q."""
    n = p * q
    idx = [[0] * q for _ in range(p)]
    for e in range(n):
        idx[e % p][e % q] = e
    return tuple(tuple(r) for r in idx)


@dataclass(frozen=True)
class BicyclotomicInt:
    """sum coeffs[i][j] * zeta_p^i * zeta_q^j, i < p-1, j < q-1."""

    p: int
    q: int
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("p and q must be distinct")
        if len(self.coeffs) != self.p - 1 or any(len(r) != self.q - 1 for r in self.coeffs):
            raise ValueError("coefficient matrix must be (p-1) x (q-1)")

    @classmethod
    def from_group_ring(cls, p: int, q: int, grid) -> BicyclotomicInt:
        """From a p x q grid indexed by exponents (i mod p, j mod q)."""
        last_row = grid[p - 1]
        rows = []
        for i in range(p - 1):
            r = [grid[i][j] - last_row[j] for j in range(q)]
            top = r[q - 1]
            rows.append(tuple(c - top for c in r[: q - 1]))
        return cls(p, q, tuple(rows))

    @classmethod
    def from_terms(cls, p: int, q: int, terms) -> BicyclotomicInt:
        """Sum of c * zeta_p^a * zeta_q^b over ``(a, b, c)`` triples."""
        grid = [[0] * q for _ in range(p)]
        for a, b, c in terms:
            grid[a % p][b % q] += c
        return cls.from_group_ring(p, q, grid)

    @classmethod
    def from_int(cls, p: int, q: int, n: int) -> BicyclotomicInt:
        return cls.from_terms(p, q, [(0, 0, n)])

    @classmethod
    def from_cyclotomic(cls, a: CyclotomicInt, q: int) -> BicyclotomicInt:
        return cls.from_terms(a.p, q, [(i, 0, c) for i, c in enumerate(a.coeffs)])

    def grid(self) -> list[list[int]]:
        g = [list(r) + [0] for r in self.coeffs]
        g.append([0] * self.q)
        return g

    def _flat(self) -> list[int]:
        idx = _crt_index(self.p, self.q)
        out = [0] * (self.p * self.q)
        for i, row in enumerate(self.coeffs):
            ri = idx[i]
            for j, c in enumerate(row):
                out[ri[j]] = c
        return out

    @classmethod
    def _unflat(cls, p: int, q: int, flat: list[int]) -> BicyclotomicInt:
        idx = _crt_index(p, q)
        grid = [[flat[idx[i][j]] for j in range(q)] for i in range(p)]
        return cls.from_group_ring(p, q, grid)

    def _coerce(self, other) -> BicyclotomicInt:
        if isinstance(other, int):
            return BicyclotomicInt.from_int(self.p, self.q, other)
        if isinstance(other, CyclotomicInt) and other.p == self.p:
            return BicyclotomicInt.from_cyclotomic(other, self.q)
        if isinstance(other, BicyclotomicInt) and (other.p, other.q) == (self.p, self.q):
            return other
        raise TypeError(f"cannot combine BicyclotomicInt(p={self.p}, q={self.q}) with {other!r}")

    def __add__(self, other) -> BicyclotomicInt:
        other = self._coerce(other)
        return BicyclotomicInt(
            self.p,
            self.q,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self) -> BicyclotomicInt:
        return BicyclotomicInt(self.p, self.q, tuple(tuple(-a for a in r) for r in self.coeffs))

    def __sub__(self, other) -> BicyclotomicInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> BicyclotomicInt:
        return self._coerce(other) - self

    def __mul__(self, other) -> BicyclotomicInt:
        if isinstance(other, int):
            return BicyclotomicInt(
                self.p, self.q, tuple(tuple(other * a for a in r) for r in self.coeffs)
            )
        other = self._coerce(other)
        prod = cyclic_mul(self._flat(), other._flat(), self.p * self.q)
        return BicyclotomicInt._unflat(self.p, self.q, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BicyclotomicInt:
        if e < 0:
            raise DomainError("negative powers are not defined")
        result = BicyclotomicInt.from_int(self.p, self.q, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.coeffs)

    def automorphism(self, s: int = 1, t: int = 1) -> BicyclotomicInt:
        """Image under zeta_p -> zeta_p^s, zeta_q -> zeta_q^t."""
        p, q = self.p, self.q
        if s % p == 0 or t % q == 0:
            raise DomainError("exponents must be units")
        grid = [[0] * q for _ in range(p)]
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    grid[i * s % p][j * t % q] += c
        return BicyclotomicInt.from_group_ring(p, q, grid)

    def conj(self) -> BicyclotomicInt:
        return self.automorphism(self.p - 1, self.q - 1)

    def zeta_q_components(self) -> list[CyclotomicInt]:
        """The Z[zeta_p] coefficients of zeta_q^0..zeta_q^(q-2)."""
        return [
            CyclotomicInt(self.p, tuple(self.coeffs[i][j] for i in range(self.p - 1)))
            for j in range(self.q - 1)
        ]

    def normal_coordinates(self) -> list[CyclotomicInt]:
        """Coordinates h_1..h_{q-1} in the basis zeta_q, ..., zeta_q^(q-1).

        Returned as a length-q list whose entry 0 is the zero element, so that
        entry j multiplies zeta_q^j.  This basis is permuted by zeta_q -> zeta_q^u.
        """
        comps = self.zeta_q_components()
        g0 = comps[0]
        out = [CyclotomicInt.from_int(self.p, 0)]
        out += [c - g0 for c in comps[1:]]
        out.append(-g0)
        return out

    def in_Zzeta_p(self) -> bool:
        """True iff every coefficient of zeta_q^j, j >= 1, vanishes."""
        return all(not any(r[1:]) for r in self.coeffs)

    def to_cyclotomic(self) -> CyclotomicInt:
        if not self.in_Zzeta_p():
            raise InvariantViolation("element still depends on zeta_q")
        return CyclotomicInt(self.p, tuple(r[0] for r in self.coeffs))

    def reduce_mod_pi(self) -> tuple[int, ...]:
        """Image in F_p[zeta_q] under zeta_p -> 1, as power-basis residues mod p."""
        return tuple(
            sum(self.coeffs[i][j] for i in range(self.p - 1)) % self.p
            for j in range(self.q - 1)
        )

    def __repr__(self) -> str:
        return f"BicyclotomicInt(p={self.p}, q={self.q}, {[list(r) for r in self.coeffs]})"


def mul_zeta_p(a: BicyclotomicInt, r: int) -> BicyclotomicInt:
    """a * zeta_p^r, computed as an exponent shift."""
    p, q = a.p, a.q
    grid = a.grid()
    shifted = [grid[(i - r) % p] for i in range(p)]
    return BicyclotomicInt.from_group_ring(p, q, shifted)
