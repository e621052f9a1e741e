"""Irregular primes via the Stickelberger quotient Q(sigma).

The package computes the integer coefficients delta_i of the group-ring
element Q(sigma) = P(sigma)(sigma - v)/p, scans its zeros at odd powers of a
primitive root to find irregular pairs, and checks the result against
Bernoulli numbers mod p.  Exact arithmetic in Z[zeta_p] and Z[zeta_p, zeta_q]
supports the Gauss-sum and Stickelberger verifications.
"""

from .bernoulli import (
    BernoulliTableModP,
    IrregularPair,
    bernoulli_mod_p,
    index_of_irregularity,
    irregular_pairs_oracle,
)
from .errors import DomainError, InvariantViolation, PrecisionExhausted
from .residue import PrimeContext, mod_pow, reduced_power, smallest_primitive_root
from .scan import (
    Certificate,
    ScanHit,
    Verdict,
    cross_check,
    regularity_certificate,
    scan_prime,
    scan_range,
)
from .stickelberger import (
    DeltaVector,
    GroupRingElem,
    P_of_sigma,
    T_of_sigma,
    delta_coefficients,
    evaluate_Q,
    symbolic_Q_check,
    verify_P_equals_T_mod_p,
)

__all__ = [
    "BernoulliTableModP",
    "Certificate",
    "DeltaVector",
    "DomainError",
    "GroupRingElem",
    "InvariantViolation",
    "IrregularPair",
    "P_of_sigma",
    "PrecisionExhausted",
    "PrimeContext",
    "ScanHit",
    "T_of_sigma",
    "Verdict",
    "bernoulli_mod_p",
    "cross_check",
    "delta_coefficients",
    "evaluate_Q",
    "index_of_irregularity",
    "irregular_pairs_oracle",
    "mod_pow",
    "reduced_power",
    "regularity_certificate",
    "scan_prime",
    "scan_range",
    "smallest_primitive_root",
    "symbolic_Q_check",
    "verify_P_equals_T_mod_p",
]
