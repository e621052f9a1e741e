"""Irregular-prime detection by evaluating Q at the odd powers of v."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .bernoulli import irregular_pairs_oracle
from .errors import DomainError
from .residue import PrimeContext, is_prime, primes_up_to
from .stickelberger import delta_coefficients, evaluate_Q, evaluate_Q_shifted


@dataclass(frozen=True)
class ScanHit:
    """Q(v^k) = 0 mod p for odd k; ``a2 = p - k`` and ``mu = v^k``."""

    p: int
    v: int
    k: int
    a2: int
    mu: int


def _require_prime(p: int):
    if p < 5 or not is_prime(p):
        raise DomainError(f"expected a prime p >= 5, got {p}")


def scan_prime(p: int, v: int | None = None) -> list[ScanHit]:
    """Zeros of Q among v^3, v^5, ..., v^(p-2), in increasing k."""
    _require_prime(p)
    ctx = PrimeContext.create(p, v)
    delta = delta_coefficients(ctx)
    hits = []
    for k in range(3, p - 1, 2):
        mu = ctx.power(k)
        if evaluate_Q(delta, mu) == 0:
            hits.append(ScanHit(p, ctx.v, k, p - k, mu))
    return hits


def scan_range(p_max: int, jobs: int = 1) -> list[ScanHit]:
    """Hits for every prime 5 <= p <= p_max, ascending in p."""
    if p_max < 5:
        raise DomainError(f"p_max must be >= 5, got {p_max}")
    primes = [p for p in primes_up_to(p_max) if p >= 5]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map() yields in submission order, so the merge stays ordered
            per_prime = list(pool.map(scan_prime, primes, chunksize=8))
    else:
        per_prime = [scan_prime(p) for p in primes]
    return [hit for hits in per_prime for hit in hits]


@dataclass
class Discrepancy:
    p: int
    scan_only: list[int]
    oracle_only: list[int]


@dataclass
class CrossCheckReport:
    p_max: int
    primes_checked: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def cross_check(p_max: int) -> CrossCheckReport:
    """Compare the scan's a2-sets with the Bernoulli oracle for all p <= p_max."""
    if p_max < 5:
        raise DomainError(f"p_max must be >= 5, got {p_max}")
    report = CrossCheckReport(p_max)
    for p in primes_up_to(p_max):
        if p < 5:
            continue
        report.primes_checked += 1
        found = {h.a2 for h in scan_prime(p)}
        expected = {pair.a2 for pair in irregular_pairs_oracle(p)}
        if found != expected:
            report.discrepancies.append(
                Discrepancy(p, sorted(found - expected), sorted(expected - found))
            )
    return report


class Verdict(str, Enum):
    REGULAR = "regular-certified"
    IRREGULAR = "irregular"
    INCONCLUSIVE = "inconclusive"


@dataclass
class Certificate:
    """Outcome of the exhaustive X-scan of sum_i delta_i X^(i-1) over F_p^*.

    Every root X is written as v^k.  ``hits`` are roots with odd k in 3..p-2.
    ``even_roots`` lists the exponents k of roots at even powers; Q vanishes
    at every v^(2j), 1 <= j <= (p-3)/2, for every prime, so these carry no
    information about the class group.  ``other_roots`` are roots at X = 1 or
    X = v, which fall outside both families.
    """

    p: int
    v: int
    verdict: Verdict
    hits: list[ScanHit]
    even_roots: list[int]
    other_roots: list[int]

    @property
    def a2_list(self) -> list[int]:
        return [h.a2 for h in self.hits]


def regularity_certificate(p: int) -> Certificate:
    _require_prime(p)
    ctx = PrimeContext.create(p)
    delta = delta_coefficients(ctx)
    hits, even, other = [], [], []
    for x in range(1, p):
        if evaluate_Q_shifted(delta, x):
            continue
        k = ctx.log(x)
        if k % 2 == 0 and k != 0:
            even.append(k)
        elif k % 2 == 1 and k >= 3:
            hits.append(ScanHit(p, ctx.v, k, p - k, x))
        else:
            other.append(k)
    hits.sort(key=lambda h: h.k)
    even.sort()
    other.sort()
    if other:
        verdict = Verdict.INCONCLUSIVE
    elif hits:
        verdict = Verdict.IRREGULAR
    else:
        verdict = Verdict.REGULAR
    return Certificate(p, ctx.v, verdict, hits, even, other)
