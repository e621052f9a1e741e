import cmath
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qscan.cyclotomic import BicyclotomicInt, CyclotomicInt, cyclic_mul, mul_zeta_p, poly_mul
from qscan.errors import DomainError


def schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


ints = st.integers(min_value=-10**30, max_value=10**30)


@given(st.lists(ints, min_size=1, max_size=40), st.lists(ints, min_size=1, max_size=40))
def test_poly_mul_matches_schoolbook(a, b):
    assert poly_mul(a, b) == schoolbook(a, b)


def test_cyclic_mul_wraps():
    assert cyclic_mul([0, 1, 0], [0, 0, 1], 3) == [1, 0, 0]


def embed(a: CyclotomicInt, k: int = 1) -> complex:
    z = cmath.exp(2j * cmath.pi * k / a.p)
    return sum(c * z**i for i, c in enumerate(a.coeffs))


def embed2(a: BicyclotomicInt) -> complex:
    zp = cmath.exp(2j * cmath.pi / a.p)
    zq = cmath.exp(2j * cmath.pi / a.q)
    return sum(c * zp**i * zq**j for i, row in enumerate(a.coeffs) for j, c in enumerate(row))


def rand_cyc(rng, p, bound=20):
    return CyclotomicInt(p, tuple(rng.randint(-bound, bound) for _ in range(p - 1)))


def rand_bicyc(rng, p, q, bound=5):
    return BicyclotomicInt(
        p, q, tuple(tuple(rng.randint(-bound, bound) for _ in range(q - 1)) for _ in range(p - 1))
    )


def test_galois_conj_of_zeta():
    p = 7
    assert CyclotomicInt.zeta(p).galois(p - 1) == CyclotomicInt(p, (-1,) * (p - 1))
    assert CyclotomicInt.zeta(p).conj() == CyclotomicInt.zeta(p, -1)


def test_lambda_squared_p3():
    lam = CyclotomicInt.lam(3)
    assert lam * lam == CyclotomicInt(3, (0, -3))


def test_galois_identity_and_zero_exponent():
    rng = random.Random(1)
    a = rand_cyc(rng, 11)
    assert a.galois(1) == a
    with pytest.raises(DomainError):
        a.galois(11)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_cyclotomic_ring_laws(p):
    rng = random.Random(p)
    for _ in range(100):
        a, b, c = rand_cyc(rng, p), rand_cyc(rng, p), rand_cyc(rng, p)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        t = rng.randrange(1, p)
        assert (a * b).galois(t) == a.galois(t) * b.galois(t)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_products_match_complex_embedding(p):
    rng = random.Random(10 + p)
    for _ in range(20):
        a, b = rand_cyc(rng, p), rand_cyc(rng, p)
        assert abs(embed(a * b) - embed(a) * embed(b)) < 1e-6


@pytest.mark.parametrize("p,q", [(3, 7), (5, 11), (3, 5), (7, 3)])
def test_bicyclotomic_ring_laws(p, q):
    rng = random.Random(p * q)
    for _ in range(100):
        a, b, c = rand_bicyc(rng, p, q), rand_bicyc(rng, p, q), rand_bicyc(rng, p, q)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
    for _ in range(10):
        a, b = rand_bicyc(rng, p, q), rand_bicyc(rng, p, q)
        assert abs(embed2(a * b) - embed2(a) * embed2(b)) < 1e-6 * (1 + abs(embed2(a * b)))
        s, t = rng.randrange(1, p), rng.randrange(1, q)
        assert (a * b).automorphism(s, t) == a.automorphism(s, t) * b.automorphism(s, t)


def test_bicyclotomic_canonical_form_unique():
    p, q = 3, 5
    one = BicyclotomicInt.from_int(p, q, 1)
    # 1 + zeta_q + ... + zeta_q^4 = 0 and the same for zeta_p
    assert BicyclotomicInt.from_terms(p, q, [(0, j, 1) for j in range(q)]).is_zero()
    assert BicyclotomicInt.from_terms(p, q, [(i, 2, 1) for i in range(p)]).is_zero()
    assert BicyclotomicInt.from_terms(p, q, [(p, q, 1)]) == one


def test_mul_zeta_p_shift():
    rng = random.Random(3)
    a = rand_bicyc(rng, 5, 7)
    z = BicyclotomicInt.from_terms(5, 7, [(2, 0, 1)])
    assert mul_zeta_p(a, 2) == a * z


def test_norm_examples():
    p = 5
    # prod_{t=1}^{4} (zeta^t - 1) = Phi_5(1) = 5
    assert CyclotomicInt.lam(p).norm() == 5
    assert CyclotomicInt.from_int(p, 1).norm() == 1
    assert CyclotomicInt.zeta(p).norm() == 1
    for p in (3, 7, 11, 13):
        assert abs(CyclotomicInt.lam(p).norm()) == p


def test_norm_matches_embedding_product():
    rng = random.Random(7)
    for p in (5, 7):
        a = rand_cyc(rng, p, 4)
        prod = 1
        for k in range(1, p):
            prod *= embed(a, k)
        assert abs(prod - a.norm()) < 1e-6 * max(1, abs(prod))


@settings(max_examples=50)
@given(st.lists(st.integers(-9, 9), min_size=6, max_size=6), st.lists(st.integers(-9, 9), min_size=6, max_size=6))
def test_norm_multiplicative(xs, ys):
    a, b = CyclotomicInt(7, tuple(xs)), CyclotomicInt(7, tuple(ys))
    if a.is_zero() or b.is_zero():
        return
    assert (a * b).norm() == a.norm() * b.norm()


def test_norm_of_zero_rejected():
    with pytest.raises(DomainError):
        CyclotomicInt.from_int(5, 0).norm()


def test_pi_valuation():
    for p in (3, 5, 7, 11):
        lam = CyclotomicInt.lam(p)
        unit = CyclotomicInt.zeta(p, 2) + 1 if p > 3 else CyclotomicInt.zeta(p)
        assert CyclotomicInt.from_int(p, p).valuation_pi() == p - 1
        assert CyclotomicInt.from_int(p, 2).valuation_pi() == 0
        for k in range(0, 2 * p):
            assert (lam**k * unit).valuation_pi() == k
            if k:
                assert (lam**k).div_lambda() == lam ** (k - 1)


def test_root_of_unity_detection():
    p = 7
    for k in range(p):
        assert CyclotomicInt.zeta(p, k).is_root_of_unity()
        assert (-CyclotomicInt.zeta(p, k)).is_root_of_unity()
    assert not CyclotomicInt.lam(p).is_root_of_unity()
    assert not CyclotomicInt.from_int(p, 2).is_root_of_unity()


def test_projection_and_mod_pi():
    p, q = 5, 11
    a = CyclotomicInt(p, (3, -1, 4, 1))
    b = BicyclotomicInt.from_cyclotomic(a, q)
    assert b.in_Zzeta_p() and b.to_cyclotomic() == a
    assert b.reduce_mod_pi() == ((3 - 1 + 4 + 1) % p,) + (0,) * (q - 2)


def test_normal_coordinates_roundtrip():
    rng = random.Random(5)
    p, q = 3, 7
    a = rand_bicyc(rng, p, q)
    h = a.normal_coordinates()
    rebuilt = BicyclotomicInt.from_int(p, q, 0)
    for j in range(1, q):
        rebuilt = rebuilt + BicyclotomicInt.from_cyclotomic(h[j], q) * BicyclotomicInt.from_terms(p, q, [(0, j, 1)])
    assert rebuilt == a
