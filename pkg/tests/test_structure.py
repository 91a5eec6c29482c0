"""Tests for the E ⊗ Γ structure maps."""

import pytest

from hopf_ainf.algebra.tensor import UNIT, BasisElt, Element, GradedMap, compose, sigma_map
from hopf_ainf.hopf.structure import (
    HopfAinfStructure,
    StructureParams,
    basis_elements,
    basis_pairs,
    build_structure,
    counit,
    em_factors_n3,
    weak_compositions,
)

V = BasisElt(1, 0)


def gamma(j):
    return BasisElt(0, j)


def vgamma(j):
    return BasisElt(1, j)


@pytest.fixture
def s3():
    return build_structure(3)


class TestParams:
    def test_degrees(self):
        params = StructureParams.of(5, 2)
        assert params.v_degree == 5
        assert params.w_degree == 22
        assert params.to_dict() == {"p": 5, "m": 2, "v_degree": 5, "w_degree": 22}

    def test_bad_prime(self):
        with pytest.raises(ValueError, match="odd prime"):
            StructureParams.of(4, 1)

    def test_em_factors(self):
        factors = em_factors_n3(3, 3)
        assert [f.m for f in factors] == [1, 3, 9]
        assert [f.w_degree for f in factors] == [8, 20, 56]

    def test_em_factors_count(self):
        with pytest.raises(ValueError, match="count must be >= 1"):
            em_factors_n3(3, 0)


class TestEnumeration:
    def test_weak_compositions(self):
        comps = list(weak_compositions(2, 3))
        assert len(comps) == 6
        assert all(sum(c) == 2 and len(c) == 3 for c in comps)
        assert len(set(comps)) == 6

    def test_weak_compositions_edge_cases(self):
        assert list(weak_compositions(-1, 3)) == []
        assert list(weak_compositions(4, 1)) == [(4,)]
        assert list(weak_compositions(0, 3)) == [(0, 0, 0)]

    def test_basis_elements(self):
        assert basis_elements(1) == [UNIT, gamma(1), V, vgamma(1)]

    def test_basis_pairs_count(self):
        for max_j in range(5):
            assert len(basis_pairs(max_j)) == 2 * (max_j + 1) * (max_j + 2)


class TestMultiplication:
    def test_divided_powers(self, s3):
        assert s3.mul(gamma(1), gamma(1)) == Element.basis((gamma(2),), 3, 2)
        assert s3.mul(gamma(1), gamma(2)).is_zero()  # C(3, 1) = 0 mod 3

    def test_exterior(self, s3):
        assert s3.mul(V, V).is_zero()
        assert s3.mul(V, gamma(2)) == Element.basis((vgamma(2),), 3)
        assert s3.mul(gamma(2), V) == Element.basis((vgamma(2),), 3)

    def test_unit(self, s3):
        for b in basis_elements(4):
            assert s3.mul(UNIT, b) == Element.basis((b,), 3)
            assert s3.mul(b, UNIT) == Element.basis((b,), 3)

    def test_mu_tensor(self, s3):
        word = (gamma(1), gamma(1), V, gamma(1))
        assert s3.mu_tensor(2)(word) == Element.basis((gamma(2), vgamma(1)), 3, 2)
        assert s3.mu_tensor(2)((V, V, UNIT, UNIT)).is_zero()

    def test_mu_tensor_bounds(self, s3):
        assert s3.mu_tensor(1) is s3.mu
        assert s3.mu_tensor(3) is s3.mu_tensor(3)
        with pytest.raises(ValueError, match="n >= 1"):
            s3.mu_tensor(0)

    def test_mu_tensor_keeps_no_memo(self, s3):
        s3.mu_tensor(3)((gamma(1),) * 6)
        assert not s3.mu_tensor(3).memoize
        assert s3.mu_tensor(3)._memo == {}


class TestShuffleProduct:
    def test_matches_composite(self, s3):
        composite = compose(s3.mu_tensor(2), sigma_map(2, s3.params))
        left, right = {(UNIT, V): 1}, {(V, UNIT): 1}
        assert s3.shuffle_product(left, right) == {(V, V): 2}
        assert composite.apply_word((UNIT, V, V, UNIT)) == {(V, V): 2}

    def test_even_factors_carry_no_sign(self, s3):
        product = s3.shuffle_product({(V, gamma(1)): 1}, {(gamma(1), V): 1})
        assert product == {(vgamma(1), vgamma(1)): 1}

    def test_vanishing_factor_kills_term(self, s3):
        assert s3.shuffle_product({(V, UNIT): 1}, {(V, gamma(1)): 1}) == {}
        # C(2, 1) = 2 survives mod 3, C(3, 1) = 3 does not
        assert s3.shuffle_product({(gamma(1),): 1}, {(gamma(1),): 1}) == {(gamma(2),): 2}
        assert s3.shuffle_product({(gamma(1),): 1}, {(gamma(2),): 1}) == {}

    def test_sign_argument_and_linearity(self, s3):
        left = {(gamma(1), UNIT): 1, (UNIT, gamma(1)): 2}
        right = {(UNIT, UNIT): 1}
        assert s3.shuffle_product(left, right, -1) == {(gamma(1), UNIT): 2, (UNIT, gamma(1)): 1}


class TestCoproducts:
    def test_delta2(self, s3):
        d = s3.coproduct(vgamma(1))
        assert len(d) == 4
        assert d.coefficient((V, gamma(1))).value == 1
        assert d.coefficient((gamma(1), V)).value == 1
        assert d.coefficient((UNIT, vgamma(1))).value == 1

    def test_delta_p_on_gamma1(self, s3):
        assert s3.higher_coproduct(gamma(1)) == Element.basis((V, V, V), 3)

    def test_delta_p_on_gamma2(self, s3):
        d = s3.higher_coproduct(gamma(2))
        assert len(d) == 3
        assert d.coefficient((vgamma(1), V, V)).value == 1

    def test_delta_p_vanishes(self, s3):
        assert s3.higher_coproduct(UNIT).is_zero()
        for j in range(4):
            assert s3.higher_coproduct(vgamma(j)).is_zero()

    def test_delta_p_term_count_p5(self):
        s5 = build_structure(5)
        # weak compositions of 2 into 5 parts
        assert len(s5.higher_coproduct(gamma(3))) == 15

    def test_counit(self, s3):
        assert counit(Element.basis((UNIT,), 3, 2)) == 2
        assert counit(Element.basis((gamma(1),), 3)) == 0
        with pytest.raises(ValueError, match="tensor length 2"):
            counit(Element.basis((UNIT, UNIT), 3))

    def test_psis(self, s3):
        assert s3.psis() == {2: s3.delta2, 3: s3.delta_p}

    def test_f_n_on_v(self, s3):
        f3 = s3.f_n(3)((V,))
        assert f3 == Element(
            {(V, UNIT, UNIT): 1, (UNIT, V, UNIT): 1, (UNIT, UNIT, V): 1}, 3, 3,
        )

    def test_f_equals_g(self, s3):
        for b in basis_elements(3):
            assert s3.f_n(3)((b,)) == s3.g_n(3)((b,))

    def test_f_n_cached(self, s3):
        assert s3.f_n(3) is s3.f_n(3)
        assert s3.f_n(2) is s3.delta2
        with pytest.raises(ValueError, match="n >= 2"):
            s3.g_n(1)


class TestConstruction:
    def test_rejects_wrong_delta_p_degree(self, s3):
        bad = GradedMap("Δ_p", 1, 3, 0, lambda w: {}, s3.params)
        with pytest.raises(ValueError, match="degree p-2"):
            HopfAinfStructure(params=s3.params, mu=s3.mu, delta2=s3.delta2, delta_p=bad)

    def test_rejects_wrong_delta_p_arity(self, s3):
        bad = GradedMap("Δ_p", 1, 2, 1, lambda w: {}, s3.params)
        with pytest.raises(ValueError, match="A -> A"):
            HopfAinfStructure(params=s3.params, mu=s3.mu, delta2=s3.delta2, delta_p=bad)

    def test_to_dict(self):
        assert build_structure(5, 2).to_dict() == {
            "label": "E⊗Γ", "p": 5, "m": 2, "v_degree": 5, "w_degree": 22,
        }
