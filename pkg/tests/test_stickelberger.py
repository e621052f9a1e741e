from fractions import Fraction

import pytest

from qscan.errors import DomainError
from qscan.residue import PrimeContext, primes_up_to
from qscan.stickelberger import (
    GroupRingElem,
    P_of_sigma,
    T_of_sigma,
    delta_coefficients,
    evaluate_Q,
    evaluate_Q_shifted,
    implied_delta0,
    symbolic_Q_check,
    verify_P_equals_T_mod_p,
)


def oracle_delta(p, v):
    """delta_i from Python's modular inverse, as exact fractions."""
    out = []
    for i in range(1, p - 1):
        d = Fraction(pow(v, -(i - 1), p) - pow(v, -i, p) * v, p)
        assert d.denominator == 1
        out.append(int(d))
    return out


def test_delta_p7():
    delta = delta_coefficients(PrimeContext.create(7))
    assert list(delta.delta) == [-2, -1, -2, 0, -1]
    assert sum(delta.delta) == -6
    assert delta[1] == -2 and delta[5] == -1


def test_delta_matches_oracle():
    for p in primes_up_to(400)[1:]:
        ctx = PrimeContext.create(p)
        assert list(delta_coefficients(ctx).delta) == oracle_delta(p, ctx.v)


def test_delta_for_non_smallest_roots():
    for p in (7, 11, 13, 37):
        for v in range(2, p):
            try:
                ctx = PrimeContext.create(p, v)
            except DomainError:
                continue
            delta = delta_coefficients(ctx)
            assert list(delta.delta) == oracle_delta(p, v)
            assert all(-p < d <= 0 for d in delta.delta)
            assert implied_delta0(ctx) == 0


def test_P_of_sigma_p7():
    P = P_of_sigma(PrimeContext.create(7))
    assert P.coeffs == (1, 5, 4, 6, 2, 3)


def test_P_coefficient_sum():
    for p in primes_up_to(200)[1:]:
        P = P_of_sigma(PrimeContext.create(p))
        assert P.coeffs[0] == 1
        assert sum(P.coeffs) == p * (p - 1) // 2


# R(sigma) ascending, from a sympy expansion of P - T
@pytest.mark.parametrize(
    "p,R",
    [(5, [5, -7, 4, 0]), (7, [103, -217, 160, -51, 8, 0])],
)
def test_R_small(p, R):
    assert verify_P_equals_T_mod_p(PrimeContext.create(p)).coeffs == tuple(R)


def test_T_leading_coefficient_equals_v():
    for p in primes_up_to(100)[1:]:
        ctx = PrimeContext.create(p)
        T = T_of_sigma(ctx)
        assert T.degree() == p - 2
        assert T.coeffs[p - 2] == ctx.v


def test_symbolic_Q_p7_and_p37():
    for p in (7, 37):
        ctx = PrimeContext.create(p)
        assert symbolic_Q_check(ctx) == delta_coefficients(ctx)


def test_group_ring_wraps_exponents():
    p = 7
    s = GroupRingElem.from_terms(p, {1: 1})
    prod = GroupRingElem.one(p)
    for _ in range(p - 1):
        prod = prod * s
    assert prod == GroupRingElem.one(p)
    assert (s * 3).coeffs == (0, 3, 0, 0, 0, 0)


def test_group_ring_length_check():
    with pytest.raises(ValueError):
        GroupRingElem(7, (1, 2, 3))


def naive_Q(delta, x, shift=0):
    p = delta.p
    return sum(pow(x, i - shift, p) * delta[i] for i in range(1, p - 1)) % p


def test_evaluate_Q_matches_naive():
    for p in primes_up_to(200)[2:]:
        delta = delta_coefficients(PrimeContext.create(p))
        for x in range(1, p):
            assert evaluate_Q(delta, x) == naive_Q(delta, x)
            assert evaluate_Q_shifted(delta, x) == naive_Q(delta, x, shift=1)


def test_evaluate_Q_known_irregular_points():
    ctx = PrimeContext.create(37)
    assert evaluate_Q(delta_coefficients(ctx), ctx.power(5)) == 0
    ctx = PrimeContext.create(157)
    delta = delta_coefficients(ctx)
    assert evaluate_Q(delta, ctx.power(47)) == 0
    assert evaluate_Q(delta, ctx.power(95)) == 0
    ctx = PrimeContext.create(7)
    assert evaluate_Q(delta_coefficients(ctx), ctx.power(3)) != 0


def test_evaluate_Q_rejects_zero():
    delta = delta_coefficients(PrimeContext.create(7))
    with pytest.raises(DomainError):
        evaluate_Q(delta, 14)


def test_two_forms_share_zero_sets():
    for p in primes_up_to(200)[2:]:
        delta = delta_coefficients(PrimeContext.create(p))
        for x in range(1, p):
            assert (evaluate_Q(delta, x) == 0) == (evaluate_Q_shifted(delta, x) == 0)


def test_Q_vanishes_at_even_powers():
    # structural roots: Q(v^(2j)) = 0 for 1 <= j <= (p-3)/2, never at 1 or v
    for p in primes_up_to(500)[2:]:
        ctx = PrimeContext.create(p)
        delta = delta_coefficients(ctx)
        for k in range(2, p - 1, 2):
            assert evaluate_Q(delta, ctx.power(k)) == 0
        assert evaluate_Q(delta, 1) != 0
        assert evaluate_Q(delta, ctx.v) != 0
