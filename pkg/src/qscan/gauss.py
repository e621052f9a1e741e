"""Gauss sums attached to the p-th power residue character at a prime above q.

For q = 1 mod p the residue field is F_q; otherwise it is F_{q^f} with f the
order of q mod p.  The sum g lives in Z[zeta_p, zeta_q]; its p-th power G lies
in Z[zeta_p] and Stickelberger's theorem pins down the prime factorisation of
G: at the p-1 primes above q it has valuations 1, 2, ..., p-1.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .cyclotomic import BicyclotomicInt, CyclotomicInt, mul_zeta_p
from .errors import DomainError, InvariantViolation, PrecisionExhausted
from .residue import is_prime, multiplicative_order, prime_factors, smallest_primitive_root


@dataclass(frozen=True)
class ResidueCharacter:
    """chi(x) = zeta_p^chi_exp[x] on F_q^*, for q = 1 mod p.

    ``u`` is the smallest primitive root mod q and ``w = u^((q-1)/p)``, an
    element of order p.  chi is the inverse of the residue symbol
    x -> w^c <-> zeta_p^c, so chi(u) = zeta_p^(-1).  ``chi_exp[0]`` is unused.
    """

    p: int
    q: int
    u: int
    w: int
    chi_exp: tuple[int, ...] = field(repr=False)

    def __call__(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise DomainError("chi is not defined at 0")
        return self.chi_exp[x]


def _check_pair(p: int, q: int):
    if p < 3 or not is_prime(p):
        raise DomainError(f"p = {p} is not an odd prime")
    if q < 3 or not is_prime(q):
        raise DomainError(f"q = {q} is not an odd prime")
    if p == q:
        raise DomainError("p and q must be distinct")


def build_character(p: int, q: int) -> ResidueCharacter:
    _check_pair(p, q)
    if q % p != 1:
        raise DomainError(f"q = {q} is not 1 mod p = {p}; use gauss_sum_general")
    u = smallest_primitive_root(q)
    e = (q - 1) // p
    w = pow(u, e, q)
    ind = {pow(w, c, q): c for c in range(p)}
    chi = [0] * q
    for x in range(1, q):
        chi[x] = -ind[pow(x, e, q)] % p
    return ResidueCharacter(p, q, u, w, tuple(chi))


@dataclass
class GaussSumRecord:
    """g, its twist exponent rho (tau(g) = zeta_p^rho g) and G = g^p once computed."""

    p: int
    q: int
    g: BicyclotomicInt
    rho: int
    f: int = 1
    G: CyclotomicInt | None = None
    diagnostics: dict = field(default_factory=dict)


def twist_exponent(g: BicyclotomicInt, u: int) -> int:
    """The rho in 0..p-1 with g(zeta_q -> zeta_q^u) = zeta_p^rho * g."""
    tg = g.automorphism(1, u)
    for rho in range(g.p):
        if mul_zeta_p(g, rho) == tg:
            return rho
    raise InvariantViolation("tau(g) is not a root-of-unity multiple of g")


def gauss_sum(chr: ResidueCharacter) -> GaussSumRecord:
    p, q = chr.p, chr.q
    g = BicyclotomicInt.from_terms(p, q, [(chr.chi_exp[x], x, 1) for x in range(1, q)])
    rho = twist_exponent(g, chr.u)
    if rho == 0:
        raise InvariantViolation("rho = 0 would put g in Z[zeta_p]")
    return GaussSumRecord(p, q, g, rho)


@dataclass
class StructureReport:
    trace_zero: bool
    geometric_pattern: bool
    g1_root_of_unity: bool
    reduces_to_minus_one: bool
    magnitude: bool
    rho: int
    rho_expected: int

    @property
    def rho_matches(self) -> bool:
        return self.rho == self.rho_expected

    @property
    def ok(self) -> bool:
        return (
            self.trace_zero
            and self.geometric_pattern
            and self.g1_root_of_unity
            and self.reduces_to_minus_one
            and self.magnitude
        )


def structure_check(rec: GaussSumRecord, chr: ResidueCharacter, strict: bool = True) -> StructureReport:
    """Check the shape of g = sum_j g_j zeta_q^j.

    Coefficients are read in the basis zeta_q^1..zeta_q^(q-1), which tau
    permutes.  The vanishing of the zeta_q^0 part is checked basis-free as
    Tr_{Q(zeta_pq)/Q(zeta_p)}(g) = 0.
    """
    p, q, u, g = rec.p, rec.q, chr.u, rec.g
    h = g.normal_coordinates()

    trace = g
    for j in range(2, q):
        trace = trace + g.automorphism(1, j)
    trace_zero = trace.is_zero()

    u_inv = pow(u, -1, q)
    pattern = True
    for k in range(q - 1):
        idx = pow(u_inv, k, q)
        expected = mul_zeta_p(BicyclotomicInt.from_cyclotomic(h[1], q), k * rec.rho)
        if BicyclotomicInt.from_cyclotomic(h[idx], q) != expected:
            pattern = False
            break

    minus_one = BicyclotomicInt.from_int(p, q, -1).reduce_mod_pi()
    report = StructureReport(
        trace_zero=trace_zero,
        geometric_pattern=pattern,
        g1_root_of_unity=h[1].is_root_of_unity(),
        reduces_to_minus_one=g.reduce_mod_pi() == minus_one,
        magnitude=g * g.conj() == BicyclotomicInt.from_int(p, q, q),
        rho=rec.rho,
        rho_expected=-smallest_primitive_root(p) % p,
    )
    rec.diagnostics["structure"] = report
    if strict and not report.ok:
        raise InvariantViolation(f"Gauss sum structure check failed: {report}")
    return report


@dataclass
class PowerReport:
    """pi-adic distance of G from +1 and -1."""

    p: int
    val_G_minus_1: int
    val_G_plus_1: int

    @property
    def congruence(self) -> str:
        """'+1' or '-1' if G is congruent to it mod pi^p, else 'none'."""
        if self.val_G_minus_1 >= self.p:
            return "+1"
        if self.val_G_plus_1 >= self.p:
            return "-1"
        return "none"


def gauss_power(rec: GaussSumRecord) -> CyclotomicInt:
    """G = g^p, checked to be free of zeta_q and projected to Z[zeta_p]."""
    full = rec.g ** rec.p
    if not full.in_Zzeta_p():
        raise InvariantViolation("g^p still depends on zeta_q")
    G = full.to_cyclotomic()
    rec.G = G
    rec.diagnostics["power"] = PowerReport(
        rec.p, (G - 1).valuation_pi(), (G + 1).valuation_pi()
    )
    return G


def teichmuller_lift(q: int, w: int, K: int, p: int | None = None) -> int:
    """The root of X^p = 1 mod q^K congruent to ``w`` mod q (Newton/Hensel)."""
    if K < 1:
        raise DomainError("precision K must be >= 1")
    w %= q
    if p is None:
        p = multiplicative_order(w, q)
    if pow(w, p, q) != 1 or w == 1:
        raise DomainError(f"{w} is not a nontrivial p-th root of unity mod {q}")
    x, prec = w, 1
    while prec < K:
        prec = min(2 * prec, K)
        m = q**prec
        fx = (pow(x, p, m) - 1) % m
        dfx = p * pow(x, p - 1, m) % m
        x = (x - fx * pow(dfx, -1, m)) % m
    if pow(x, p, q**K) != 1:
        raise InvariantViolation("Hensel iteration did not converge")
    return x


@dataclass(frozen=True)
class QadicEmbedding:
    """Lifts to Z/q^K of w^t, t = 1..p-1 (``teichmuller_roots[t-1]``).

    Sending zeta_p to the t-th lift realises the prime (q, zeta_p - w^t).
    """

    p: int
    q: int
    K: int
    teichmuller_roots: tuple[int, ...]

    @classmethod
    def build(cls, p: int, q: int, w: int, K: int) -> QadicEmbedding:
        lifted = teichmuller_lift(q, w, K, p)
        m = q**K
        return cls(p, q, K, tuple(pow(lifted, t, m) for t in range(1, p)))


def precision_cap(p: int) -> int:
    env = os.environ.get("QSCAN_PRECISION_CAP")
    return int(env) if env else 8 * p


def _q_valuation(n: int, q: int) -> int:
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def valuation_at_split_prime(
    a: CyclotomicInt, emb: QadicEmbedding, t: int, cap: int | None = None
) -> int:
    """q-adic valuation of a at the prime (q, zeta_p - w^t).

    Precision is doubled while the image vanishes mod q^K, up to ``cap``.
    """
    if a.is_zero():
        raise DomainError("valuation of zero is infinite")
    if not 1 <= t <= emb.p - 1:
        raise DomainError(f"t must lie in 1..{emb.p - 1}")
    if cap is None:
        cap = precision_cap(emb.p)
    w = emb.teichmuller_roots[0] % emb.q
    while True:
        m = emb.q**emb.K
        image = a.eval_mod(emb.teichmuller_roots[t - 1], m)
        if image:
            return _q_valuation(image, emb.q)
        if emb.K >= cap:
            raise PrecisionExhausted(f"valuation >= {emb.K} at t={t}")
        emb = QadicEmbedding.build(emb.p, emb.q, w, min(2 * emb.K, cap))


@dataclass
class StickelbergerReport:
    valuations: dict[int, int]
    multiset_ok: bool
    sum_ok: bool
    labeled_ok: bool
    norm_ok: bool
    conj_ok: bool

    @property
    def ok(self) -> bool:
        return self.multiset_ok and self.sum_ok and self.labeled_ok and self.norm_ok and self.conj_ok


def split_valuations(G: CyclotomicInt, q: int, w: int) -> dict[int, int]:
    """Valuation of G at (q, zeta_p - w^s) for s = 1..p-1."""
    p = G.p
    emb = QadicEmbedding.build(p, q, w, p + 2)
    return {s: valuation_at_split_prime(G, emb, s) for s in range(1, p)}


def stickelberger_check(rec: GaussSumRecord, chr: ResidueCharacter, strict: bool = True) -> StickelbergerReport:
    p, q = rec.p, rec.q
    G = rec.G if rec.G is not None else gauss_power(rec)
    vals = split_valuations(G, q, chr.w)
    report = StickelbergerReport(
        valuations=vals,
        multiset_ok=sorted(vals.values()) == list(range(1, p)),
        sum_ok=sum(vals.values()) == p * (p - 1) // 2,
        labeled_ok=all(vals[t] == t for t in vals),
        norm_ok=abs(G.norm()) == q ** (p * (p - 1) // 2),
        conj_ok=G * G.conj() == CyclotomicInt.from_int(p, q**p),
    )
    rec.diagnostics["stickelberger"] = report
    if strict and not report.ok:
        raise InvariantViolation(f"Stickelberger check failed: {report}")
    return report


def gauss_sum_general(p: int, q: int) -> GaussSumRecord:
    """g = sum_x chi(x) zeta_q^Tr(x) over F_{q^f}^*, for q != 1 mod p.

    chi(gen^e) = zeta_p^(-e): the inverse of the residue symbol attached to the
    chosen generator.  The result must lie in Z[zeta_p].
    """
    from .finite_field import ExtensionField

    _check_pair(p, q)
    if q % p == 1:
        raise DomainError(f"q = {q} is 1 mod p = {p}; use build_character + gauss_sum")
    f = multiplicative_order(q, p)
    field_ = ExtensionField(q, f)
    n = field_.order - 1
    if n % p:
        raise DomainError(f"p = {p} does not divide q^f - 1")
    g = BicyclotomicInt.from_terms(p, q, [(-e, field_.trace(e), 1) for e in range(n)])
    rec = GaussSumRecord(p, q, g, rho=twist_exponent(g, smallest_primitive_root(q)), f=f)
    rec.diagnostics["in_Zzeta_p"] = g.in_Zzeta_p()
    rec.diagnostics["magnitude"] = g * g.conj() == BicyclotomicInt.from_int(p, q, q**f)
    if not rec.diagnostics["in_Zzeta_p"]:
        raise InvariantViolation("g depends on zeta_q although q != 1 mod p")
    return rec
