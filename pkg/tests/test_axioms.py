"""Tests for the Hopf algebra axiom checks."""

import pytest

from hopf_ainf.algebra.tensor import UNIT, BasisElt, GradedMap
from hopf_ainf.checks.axioms import (
    algebra_map,
    associativity,
    basis_triples,
    basis_words,
    coassociativity,
    counit_laws,
    degree_check,
    iterated_coproducts_agree,
)
from hopf_ainf.checks.mutation import Mutation, mutate_structure
from hopf_ainf.hopf.structure import HopfAinfStructure, basis_pairs, build_structure, delta2_rule

G1 = BasisElt(0, 1)


@pytest.fixture
def s3():
    return build_structure(3)


def weighted_mu(params):
    """γ_i γ_j = (i+1) γ_{i+j}: a degree-0 product that is not associative mod 3."""
    def rule(word):
        (i1, j1), (i2, j2) = word
        if i1 or i2:
            return {}
        return {(BasisElt(0, j1 + j2),): j1 + 1}
    return GradedMap("μ", 2, 1, 0, rule, params)


class TestInputs:
    def test_words(self):
        assert len(basis_words(3)) == 8

    def test_triples_respect_bound(self):
        triples = basis_triples(2)
        assert all(x.j + y.j + z.j <= 2 for x, y, z in triples)
        # 2^3 choices of v-exponents times C(5, 3) index triples
        assert len(triples) == 8 * 10


class TestDegrees:
    def test_structure_maps_are_homogeneous(self):
        for p in (3, 5):
            s = build_structure(p, 2)
            assert degree_check(s.mu, basis_pairs(4)).passed
            assert degree_check(s.delta2, basis_words(4)).passed
            assert degree_check(s.delta_p, basis_words(4)).passed

    def test_wrong_declared_degree(self, s3):
        bad = GradedMap("Δ'", 1, 2, 1, delta2_rule, s3.params)
        report = degree_check(bad, basis_words(2))
        assert not report.passed
        assert report.relation_id == "degree:Δ'"
        assert report.failures == report.inputs_checked == 6


class TestAxioms:
    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_all_pass(self, p):
        s = build_structure(p)
        assert associativity(s, 5).passed
        assert coassociativity(s, 6).passed
        assert counit_laws(s, 6).passed
        assert algebra_map(s, 5).passed

    def test_iterated_coproducts(self, s3):
        for n in (3, 4, 5):
            report = iterated_coproducts_agree(s3, n, 4)
            assert report.passed
            assert report.relation_id == f"f=g:n={n}"

    def test_non_associative_product(self, s3):
        s = HopfAinfStructure(
            params=s3.params, mu=weighted_mu(s3.params),
            delta2=s3.delta2, delta_p=s3.delta_p,
        )
        report = associativity(s, 3)
        assert not report.passed
        assert 0 < len(report.witnesses) <= report.failures

    def test_broken_counit(self, s3):
        s = mutate_structure(s3, Mutation("delta2", G1, (G1, UNIT), 0))
        report = counit_laws(s, 2)
        assert not report.passed
        assert report.witnesses[0].input == (G1,)
        assert not coassociativity(s, 3).passed
