"""Tests for Z_p arithmetic and binomials."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopf_ainf.algebra.field import (
    FieldElt,
    ModulusMismatchError,
    Prime,
    as_prime,
    binom_int,
    binom_mod_p,
    vandermonde_check,
)

primes = st.sampled_from([3, 5, 7, 11])


class TestPrime:
    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_odd_primes_accepted(self, p):
        assert Prime(p).p == p

    @pytest.mark.parametrize("p", [0, 1, 2, 4, 9, 15, -3])
    def test_rejects_non_odd_primes(self, p):
        with pytest.raises(ValueError, match="odd prime"):
            Prime(p)

    def test_rejects_non_integer(self):
        with pytest.raises(ValueError, match="integer"):
            Prime(3.0)

    def test_frozen(self):
        with pytest.raises(AttributeError):
            Prime(3).p = 5

    def test_as_prime_passthrough(self):
        p = Prime(5)
        assert as_prime(p) is p
        assert as_prime(7) == Prime(7)

    def test_elt_reduces(self):
        assert Prime(5).elt(12).value == 2
        assert Prime(5).elt(-1).value == 4


class TestFieldElt:
    def test_arithmetic(self):
        f = Prime(7)
        a, b = f.elt(5), f.elt(4)
        assert (a + b).value == 2
        assert (a - b).value == 1
        assert (a * b).value == 6
        assert (-a).value == 2

    def test_int_operands(self):
        a = Prime(5).elt(3)
        assert (a + 4).value == 2
        assert (4 + a).value == 2
        assert (1 - a).value == 3
        assert (2 * a).value == 1

    def test_inverse(self):
        f = Prime(11)
        for v in range(1, 11):
            assert (f.elt(v) * f.elt(v).inverse()).value == 1

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            Prime(3).elt(0).inverse()

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatchError, match="Z_3 and Z_5"):
            Prime(3).elt(1) + Prime(5).elt(1)

    def test_mismatch_is_arithmetic_error(self):
        assert issubclass(ModulusMismatchError, ArithmeticError)

    def test_other_types_rejected(self):
        with pytest.raises(TypeError):
            Prime(3).elt(1) + 1.5

    def test_out_of_range_value(self):
        with pytest.raises(ValueError, match="out of range"):
            FieldElt(5, Prime(5))

    def test_bool_and_int(self):
        assert not Prime(3).elt(3)
        assert int(Prime(3).elt(5)) == 2

    @given(primes, st.integers(), st.integers(), st.integers())
    def test_ring_axioms(self, p, x, y, z):
        f = Prime(p)
        a, b, c = f.elt(x), f.elt(y), f.elt(z)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + (-a) == f.elt(0)


class TestBinomials:
    def test_small_values(self):
        assert binom_int(4, 2, 5) == 1
        assert binom_int(4, 2, 7) == 6
        assert binom_int(3, 5, 3) == 0

    def test_p_divides_middle_binomials(self):
        for p in (3, 5, 7):
            for k in range(1, p):
                assert binom_int(p, k, p) == 0

    def test_negative_n(self):
        with pytest.raises(ValueError, match="nonnegative"):
            binom_int(-1, 0, 3)

    def test_binom_mod_p_returns_field_element(self):
        c = binom_mod_p(6, 3, 7)
        assert isinstance(c, FieldElt)
        assert c.value == 20 % 7

    def test_binom_mod_p_negative_k(self):
        with pytest.raises(ValueError, match="k must be nonnegative"):
            binom_mod_p(4, -1, 3)

    @given(primes, st.integers(0, 60), st.integers(0, 60))
    def test_matches_math_comb(self, p, n, k):
        assert binom_int(n, k, p) == math.comb(n, k) % p

    def test_lucas_on_carries(self):
        # C(10, 3) mod 3: 10 = (101)_3, 3 = (010)_3, so the digit 0 < 1 kills it.
        assert binom_int(10, 3, 3) == 0


class TestVandermonde:
    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_all_small_cases(self, p):
        for r in range(31):
            for s in range(31 - r):
                for k in range(r + s + 1):
                    assert vandermonde_check(r, s, k, p)

    def test_k_out_of_range(self):
        with pytest.raises(ValueError, match="0 <= k <= r\\+s"):
            vandermonde_check(1, 1, 3, 3)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            vandermonde_check(1, 1, 1, 4)
