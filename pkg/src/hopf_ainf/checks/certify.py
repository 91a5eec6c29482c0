"""One certificate for the whole Hopf A∞-coalgebra structure."""

from __future__ import annotations

import logging

from hopf_ainf.checks import axioms, relations
from hopf_ainf.checks.sweep import SweepRunner
from hopf_ainf.checks.types import Certificate
from hopf_ainf.hopf.structure import HopfAinfStructure, basis_pairs

logger = logging.getLogger(__name__)

# d∘d on pairs explodes quickly once ψ^p outputs p factors.
COBAR_MAX_J = 8
COBAR_PAIR_MAX_J = {3: 8}
COBAR_PAIR_FALLBACK = 4


def certify_hopf_ainf(
    structure: HopfAinfStructure,
    max_j: int,
    runner: SweepRunner | None = None,
) -> Certificate:
    """Run every axiom and relation check and aggregate the reports.

    Order: degrees, Hopf axioms, f^n = g^n, the A∞ relations at every arity
    with a composable pair, the cobar cross-checks, the Hopf relation and its
    closed forms.
    """
    if max_j < 1:
        raise ValueError(f"max_j must be >= 1, got {max_j}")
    runner = runner or SweepRunner()
    p = structure.p
    grading = structure.params
    psis = structure.psis()
    cert = Certificate(subject=structure.to_dict(), max_j=max_j)
    logger.info("certifying %s p=%d m=%d max_j=%d", structure.label, p, grading.m, max_j)

    words = axioms.basis_words(max_j)
    pairs = basis_pairs(max_j)
    cert.reports += [
        axioms.degree_check(structure.mu, pairs, runner),
        axioms.degree_check(structure.delta2, words, runner),
        axioms.degree_check(structure.delta_p, words, runner),
        axioms.associativity(structure, max_j, runner),
        axioms.coassociativity(structure, max_j, runner),
        axioms.counit_laws(structure, max_j, runner),
        axioms.algebra_map(structure, max_j, runner),
    ]
    for n in range(3, p + 1):
        cert.reports.append(axioms.iterated_coproducts_agree(structure, n, max_j, runner))

    arities = relations.nontrivial_arities(psis, 2 * p)
    cert.notes["nontrivial_arities"] = arities
    for n in arities:
        cert.reports.append(relations.ainf_relation(n, psis, max_j, grading, runner))

    cobar_j = min(max_j, COBAR_MAX_J)
    for n in arities:
        cert.reports.append(relations.cobar_agreement(n, psis, cobar_j, grading, runner))
    pair_j = min(max_j, COBAR_PAIR_MAX_J.get(p, COBAR_PAIR_FALLBACK))
    cert.reports.append(relations.cobar_square_zero(
        psis, relations.cobar_pair_words(pair_j), 2 * p, grading, runner,
    ))
    cert.notes["cobar_max_j"] = cobar_j
    cert.notes["cobar_pair_max_j"] = pair_j

    cert.reports.append(relations.hopf_compat(structure, max_j, runner=runner))
    cert.reports += relations.v_input_vanishing(structure, max_j, runner)
    cert.reports.append(relations.sigma_signs_positive(structure, max_j, runner))
    cert.reports += relations.closed_form_check(structure, max_j, runner)

    if cert.passed:
        logger.info("PASS: %d relations", len(cert.reports))
    else:
        logger.warning("FAIL: %s", ", ".join(cert.failed_relations))
    return cert
