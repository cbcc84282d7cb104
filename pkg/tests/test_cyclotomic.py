"""Ring arithmetic in Z[zeta_p]: construction, operations, norms, valuations."""

import math
import random

import pytest

import zeta3_oracle as oracle
from wreathcert import (
    MAX_RING_PRIME,
    CycInt,
    RingMismatchError,
    one_minus_zeta,
    require_odd_prime,
    require_ring_prime,
    zeta,
)

SUPPORTED_PRIMES = [p for p in range(3, MAX_RING_PRIME + 1) if all(p % q for q in range(2, p))]


def rand_elem(rng, p, bound=10**6):
    return CycInt(p, [rng.randint(-bound, bound) for _ in range(p - 1)])


# -- construction -------------------------------------------------------


def test_top_term_reduction():
    assert CycInt(3, (0, 0, 1)).coeffs == (-1, -1)  # zeta^2 = -1 - zeta
    assert CycInt(3, (2, -1)).coeffs == (2, -1)
    assert CycInt(5, (0, 0, 0, 0, 1)).coeffs == (-1, -1, -1, -1)


def test_short_input_padded():
    assert CycInt(5, (7,)).coeffs == (7, 0, 0, 0)
    assert CycInt(5).coeffs == (0, 0, 0, 0)


def test_too_many_coefficients_rejected():
    with pytest.raises(ValueError):
        CycInt(3, (1, 2, 3, 4))


def test_non_integer_coefficients_rejected():
    with pytest.raises(TypeError):
        CycInt(3, (1.5, 0))
    with pytest.raises(TypeError):
        CycInt(3, (True, 0))


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, -3, 0])
def test_bad_primes_rejected(bad):
    with pytest.raises(ValueError):
        CycInt(bad, (1,))


def test_ring_bound_enforced():
    with pytest.raises(ValueError):
        CycInt(103, (1,))  # odd prime, but past the ring degree bound
    require_odd_prime(103)  # still a perfectly good odd prime
    with pytest.raises(ValueError):
        require_ring_prime(103)


def test_prime_type_checked():
    with pytest.raises(TypeError):
        require_odd_prime(3.0)


def test_roundtrip_is_identity():
    rng = random.Random(101)
    for p in (3, 5, 11):
        for _ in range(50):
            x = rand_elem(rng, p)
            assert CycInt(p, x.coeffs) == x


# -- ring operations ----------------------------------------------------


def test_add_examples():
    assert CycInt(3, (2, -1)) + CycInt(3, (-1, 1)) == CycInt.one(3)
    a = CycInt(3, (4, -9))
    assert a + (-a) == CycInt.zero(3)
    assert (CycInt(3, (1, 2)) + CycInt(3, (3, 4))).coeffs == (4, 6)


def test_sub_neg():
    a, b = CycInt(5, (1, 2, 3, 4)), CycInt(5, (4, 3, 2, 1))
    assert a - b == CycInt(5, (-3, -1, 1, 3))
    assert -(a - b) == b - a


def test_mul_examples():
    pi = one_minus_zeta(3)
    assert pi * pi == CycInt(3, (0, -3))  # -3 zeta
    assert pi * CycInt(3, (2, 1)) == CycInt.from_int(3, 3)
    rng = random.Random(5)
    for p in (3, 7):
        a = rand_elem(rng, p)
        assert a * CycInt.one(p) == a
        assert a * CycInt.zero(p) == CycInt.zero(p)


def test_int_operands():
    a = CycInt(3, (2, -1))
    assert a - 1 == CycInt(3, (1, -1))
    assert 1 + a == CycInt(3, (3, -1))
    assert 2 * a == CycInt(3, (4, -2))
    assert a == 2 - zeta(3)


def test_mismatched_rings_rejected():
    a, b = CycInt.one(3), CycInt.one(5)
    with pytest.raises(RingMismatchError):
        a + b
    with pytest.raises(RingMismatchError):
        a * b
    with pytest.raises(RingMismatchError):
        a.congruent_mod_pi(b)


def test_mul_matches_oracle_p3():
    rng = random.Random(17)
    for _ in range(200):
        xa, xb = rng.randint(-999, 999), rng.randint(-999, 999)
        ya, yb = rng.randint(-999, 999), rng.randint(-999, 999)
        got = CycInt(3, (xa, xb)) * CycInt(3, (ya, yb))
        assert got.coeffs == oracle.mul((xa, xb), (ya, yb))


def test_immutability():
    a = CycInt.one(3)
    with pytest.raises(AttributeError):
        a.coeffs = (9, 9)


# -- Galois action ------------------------------------------------------


def test_conjugate_examples():
    assert one_minus_zeta(3).conjugate(2) == CycInt(3, (2, 1))  # 1 - zeta^2
    assert zeta(5).conjugate(2) == zeta(5, 2)
    a = CycInt(7, (1, 2, 3, 4, 5, 6))
    assert a.conjugate(1) == a


def test_conjugate_rejects_zero_index():
    with pytest.raises(ValueError):
        zeta(5).conjugate(5)
    with pytest.raises(ValueError):
        zeta(5).conjugate(0)


def test_conjugate_composes():
    rng = random.Random(23)
    for p in (3, 5, 11):
        a = rand_elem(rng, p, 50)
        for k in range(1, p):
            for k2 in range(1, p):
                assert a.conjugate(k).conjugate(k2) == a.conjugate(k * k2 % p)


def test_conjugate_matches_oracle_p3():
    rng = random.Random(29)
    for _ in range(100):
        x = (rng.randint(-999, 999), rng.randint(-999, 999))
        assert CycInt(3, x).conjugate(2).coeffs == oracle.conj(x)


# -- norms ---------------------------------------------------------------


def test_norm_examples():
    assert CycInt(3, (2, -1)).norm() == 7  # Phi_3(2) = 2^3 - 1
    assert one_minus_zeta(5).norm() == 5
    assert CycInt(3, (-1, -7)).norm() == 43
    assert CycInt.zero(7).norm() == 0
    assert CycInt.one(7).norm() == 1
    assert CycInt.from_int(5, -2).norm() == 16  # (-2)^(p-1)


def test_norm_matches_p3_formula():
    rng = random.Random(31)
    for _ in range(300):
        x = (rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        assert CycInt(3, x).norm() == oracle.norm(x)


def test_norm_cross_algorithms():
    rng = random.Random(37)
    for p in (3, 5, 7, 11):
        for _ in range(100):
            a = rand_elem(rng, p)
            assert a.norm() == a.norm_via_conjugates()


def test_norm_multiplicative():
    rng = random.Random(41)
    for p in (3, 5, 7, 11):
        for _ in range(100):
            a, b = rand_elem(rng, p), rand_elem(rng, p)
            assert (a * b).norm() == a.norm() * b.norm()


def test_norm_invariant_under_conjugation():
    rng = random.Random(43)
    for p in (3, 5, 11):
        a = rand_elem(rng, p)
        n = a.norm()
        for k in range(1, p):
            assert a.conjugate(k).norm() == n


def test_norm_of_huge_coefficients():
    # exercises many CRT moduli in one norm
    rng = random.Random(47)
    a = CycInt(3, (rng.randint(-(10**300), 10**300), rng.randint(-(10**300), 10**300)))
    assert a.norm() == oracle.norm(a.coeffs)


# -- the prime above p ----------------------------------------------------


def test_pi_valuation_examples():
    assert one_minus_zeta(5).pi_valuation() == 1
    assert CycInt.from_int(3, 3).pi_valuation() == 2  # totally ramified: v(p) = p - 1
    assert CycInt(3, (2, -1)).pi_valuation() == 0
    assert CycInt.zero(3).pi_valuation() == math.inf


def test_divide_by_pi_examples():
    q = CycInt.from_int(3, 3).divide_by_pi()
    assert q == CycInt(3, (2, 1))
    assert q.norm() == 3
    assert CycInt(3, (2, -1)).divide_by_pi() is None
    assert one_minus_zeta(3).divide_by_pi() == CycInt.one(3)


def test_divide_by_pi_inverts_multiplication():
    rng = random.Random(53)
    for p in (3, 7):
        for _ in range(50):
            a = rand_elem(rng, p, 1000)
            assert (one_minus_zeta(p) * a).divide_by_pi() == a


def test_valuation_additivity():
    rng = random.Random(59)
    for p in (3, 5, 7):
        pi = one_minus_zeta(p)
        for _ in range(60):
            a, b = rand_elem(rng, p, 1000), rand_elem(rng, p, 1000)
            if a.is_zero() or b.is_zero():
                continue
            for _ in range(rng.randint(0, 2)):
                a = a * pi
            assert (a * b).pi_valuation() == a.pi_valuation() + b.pi_valuation()


def test_valuation_iff_norm_divisible():
    rng = random.Random(61)
    for p in (3, 5, 11):
        for _ in range(100):
            a = rand_elem(rng, p, 100)
            if a.is_zero():
                continue
            assert (a.pi_valuation() >= 1) == (a.norm() % p == 0)


def test_ramification_every_supported_p():
    for p in SUPPORTED_PRIMES:
        assert one_minus_zeta(p).norm() == p
        assert CycInt.from_int(p, p).pi_valuation() == p - 1


def test_congruent_mod_pi():
    assert CycInt(3, (2, -1)).congruent_mod_pi(CycInt.one(3))
    assert not CycInt.one(3).congruent_mod_pi(CycInt.zero(3))
    assert zeta(5).congruent_mod_pi(CycInt.one(5))
    a = CycInt(7, (4, 1, 0, -2, 5, 3))
    assert a.congruent_mod_pi(a)
