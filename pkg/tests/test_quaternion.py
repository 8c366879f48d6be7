"""Arithmetic, enumeration, division, and factorization tests.

The enumeration tests check against a brute-force doubled-coordinate
lattice scan written here from scratch, so the two counting paths share
no code.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpfree.quaternion import (
    ONE,
    ZERO,
    HurwitzInt,
    ModelledFactorization,
    enumerate_norm,
    factor_modelled,
    is_gp_triple,
    is_prime,
    left_divide,
    units,
)


def brute_force_norm_class(n):
    """Scan all doubled-coordinate vectors with shared parity and norm n."""
    found = []
    lim = 2 * math.isqrt(n) + 2
    rng = range(-lim, lim + 1)
    for da in rng:
        for db in rng:
            for dc in rng:
                rem = 4 * n - da * da - db * db - dc * dc
                if rem < 0:
                    continue
                dd = math.isqrt(rem)
                if dd * dd != rem:
                    continue
                for cand in {dd, -dd}:
                    if len({da & 1, db & 1, dc & 1, cand & 1}) == 1:
                        found.append(HurwitzInt(da, db, dc, cand))
    return found


def quaternions(max_half=12):
    parity = st.integers(min_value=0, max_value=1)
    coord = st.integers(min_value=-max_half, max_value=max_half)

    def build(bit, a, b, c, d):
        return HurwitzInt(2 * a + bit, 2 * b + bit, 2 * c + bit, 2 * d + bit)

    return st.builds(build, parity, coord, coord, coord, coord)


def nonzero_quaternions(max_half=12):
    return quaternions(max_half).filter(lambda q: not q.is_zero())


class TestConstruction:
    def test_mixed_parity_rejected(self):
        with pytest.raises(ValueError):
            HurwitzInt(1, 0, 0, 0)
        with pytest.raises(ValueError):
            HurwitzInt(2, 2, 2, 1)

    def test_from_integers_doubles(self):
        q = HurwitzInt.from_integers(1, 2, 3, 4)
        assert q.coords == (2, 4, 6, 8)
        assert q.norm() == 30

    def test_half_integer_element(self):
        omega = HurwitzInt(1, 1, 1, 1)
        assert omega.norm() == 1
        assert omega.is_unit()

    def test_str_and_repr(self):
        assert str(HurwitzInt.from_integers(1, 2, 3, 4)) == "(2,4,6,8)/2"
        assert str(HurwitzInt(1, 1, 1, 1)) == "(1,1,1,1)/2"
        assert repr(HurwitzInt(1, 1, 1, 1)) == "HurwitzInt(1, 1, 1, 1)"


class TestArithmetic:
    def test_hand_product(self):
        # (1+i)(1+j) = 1 + j + i + k
        one_i = HurwitzInt.from_integers(1, 1, 0, 0)
        one_j = HurwitzInt.from_integers(1, 0, 1, 0)
        assert one_i * one_j == HurwitzInt.from_integers(1, 1, 1, 1)
        assert one_j * one_i == HurwitzInt.from_integers(1, 1, 1, -1)

    def test_conjugate_gives_norm(self):
        q = HurwitzInt(1, 3, 5, 7)
        assert q * q.conjugate() == HurwitzInt.from_integers(q.norm(), 0, 0, 0)

    def test_units(self):
        us = units()
        assert len(us) == 24
        assert ONE in us
        assert HurwitzInt(1, 1, 1, 1) in us
        assert all(u.norm() == 1 for u in us)
        # closed under multiplication and inverse
        table = {u * v for u in us for v in us}
        assert table == set(us)

    @given(quaternions(), quaternions())
    def test_norm_multiplicative(self, a, b):
        assert (a * b).norm() == a.norm() * b.norm()

    @given(quaternions(), quaternions(), quaternions())
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(quaternions(), quaternions())
    def test_conjugate_antihomomorphism(self, a, b):
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()

    @given(quaternions())
    def test_neg_and_eq_hash(self, a):
        assert -(-a) == a
        assert hash(a) == hash(HurwitzInt(*a.coords))
        assert (a == ZERO) == a.is_zero()


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 16))
    def test_matches_brute_force(self, n):
        got = enumerate_norm(n)
        assert sorted(q.coords for q in got) == sorted(
            q.coords for q in brute_force_norm_class(n)
        )
        assert all(q.norm() == n for q in got)
        assert len(set(got)) == len(got)

    def test_norm_one_is_units(self):
        assert set(enumerate_norm(1)) == set(units())

    def test_deterministic_order(self):
        assert enumerate_norm(2) == enumerate_norm(2)
        assert str(enumerate_norm(2)[0]) == "(-2,-2,0,0)/2"
        assert str(enumerate_norm(5)[0]) == "(-4,-2,0,0)/2"
        assert len(enumerate_norm(5)) == 144

    def test_large_class_spot(self):
        # growable pair tables must survive a jump past their initial size
        assert len(enumerate_norm(2048)) == 24
        assert len(enumerate_norm(2047)) == 24 * (1 + 23 + 89 + 23 * 89)

    def test_bad_input(self):
        with pytest.raises(ValueError):
            enumerate_norm(0)


class TestDivision:
    @given(nonzero_quaternions(6), quaternions(6))
    def test_left_divide_roundtrip(self, a, c):
        assert left_divide(a, a * c) == c

    def test_non_divisible(self):
        i = HurwitzInt.from_integers(0, 1, 0, 0)
        three = HurwitzInt.from_integers(3, 0, 0, 0)
        assert left_divide(three, i) is None

    @given(nonzero_quaternions(6), quaternions(6))
    def test_quotient_unique(self, a, b):
        q = left_divide(a, b)
        if q is not None:
            assert a * q == b

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            left_divide(ZERO, ONE)


class TestPrimality:
    def test_norm_prime_elements(self):
        assert is_prime(HurwitzInt.from_integers(1, 1, 0, 0))
        assert is_prime(HurwitzInt.from_integers(1, 1, 1, 0))
        assert not is_prime(HurwitzInt.from_integers(2, 0, 0, 0))
        assert not is_prime(ONE)
        assert not is_prime(ZERO)


class TestFactorization:
    def test_known_models(self):
        q = HurwitzInt.from_integers(1, 2, 3, 4)
        f = factor_modelled(q, (2, 3, 5))
        assert f.prime_norms == (2, 3, 5)
        assert [x.norm() for x in f.factors] == [2, 3, 5]
        assert f.product() == q
        assert [str(x) for x in f.factors] == [
            "(-2,-2,0,0)/2", "(-3,-1,-1,-1)/2", "(3,1,3,-1)/2",
        ]

    def test_reordered_model(self):
        q = HurwitzInt.from_integers(1, 2, 3, 4)
        f = factor_modelled(q, (5, 3, 2))
        assert [x.norm() for x in f.factors] == [5, 3, 2]
        assert f.product() == q

    def test_identity_empty_model(self):
        f = factor_modelled(ONE, ())
        assert f == ModelledFactorization((), ())
        assert f.product() == ONE

    def test_every_ordering_small_norms(self):
        import itertools

        for n in range(2, 25):
            primes = []
            m = n
            for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
                while m % p == 0:
                    primes.append(p)
                    m //= p
            if m != 1:
                primes.append(m)
            for q in enumerate_norm(n)[:: max(1, len(enumerate_norm(n)) // 6)]:
                for model in set(itertools.permutations(primes)):
                    f = factor_modelled(q, model)
                    assert f.product() == q
                    assert tuple(x.norm() for x in f.factors) == model

    def test_stride_sample_larger_norms(self):
        for n in range(25, 100, 7):
            cls = enumerate_norm(n)
            primes = []
            m = n
            p = 2
            while p * p <= m:
                while m % p == 0:
                    primes.append(p)
                    m //= p
                p += 1
            if m != 1:
                primes.append(m)
            for q in (cls[0], cls[len(cls) // 2], cls[-1]):
                f = factor_modelled(q, tuple(primes))
                assert f.product() == q

    def test_rejects_bad_model(self):
        q = HurwitzInt.from_integers(1, 2, 3, 4)
        with pytest.raises(ValueError):
            factor_modelled(q, (2, 3))
        with pytest.raises(ValueError):
            factor_modelled(q, (6, 5))
        with pytest.raises(ValueError):
            factor_modelled(ZERO, (2,))


class TestGpTriple:
    def test_constructed_triples(self):
        a = HurwitzInt.from_integers(1, 1, 0, 0)
        r = HurwitzInt.from_integers(0, 1, 1, 0)
        assert is_gp_triple(a, a * r, (a * r) * r)

    def test_zero_triple(self):
        assert is_gp_triple(ZERO, ZERO, ZERO)

    def test_non_triple(self):
        one = ONE
        i = HurwitzInt.from_integers(0, 1, 0, 0)
        j = HurwitzInt.from_integers(0, 0, 1, 0)
        assert not is_gp_triple(one, i, j)

    @given(nonzero_quaternions(5), nonzero_quaternions(5))
    @settings(max_examples=60)
    def test_always_detects(self, a, r):
        b = a * r
        assert is_gp_triple(a, b, b * r)
