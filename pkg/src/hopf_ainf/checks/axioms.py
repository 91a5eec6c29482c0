"""Hopf algebra axioms and degree bookkeeping for E ⊗ Γ."""

from __future__ import annotations

from hopf_ainf.algebra.tensor import (
    UNIT,
    Element,
    GradedMap,
    Terms,
    Word,
    compose,
    extend_1_f_1,
    sigma_map,
    tensor_maps,
)
from hopf_ainf.checks.sweep import SweepRunner
from hopf_ainf.checks.types import RelationReport
from hopf_ainf.hopf.structure import HopfAinfStructure, basis_elements, basis_pairs


def basis_words(max_j: int) -> list[Word]:
    return [(x,) for x in basis_elements(max_j)]


def basis_triples(max_j: int) -> list[Word]:
    out = []
    for x, y in basis_pairs(max_j):
        for z in basis_elements(max_j - x.j - y.j):
            out.append((x, y, z))
    return out


def _difference(a: GradedMap, b: GradedMap):
    p = a.p

    def residual(word: Word) -> Element:
        acc: Terms = dict(a.apply_word(word))
        for out, c in b.apply_word(word).items():
            acc[out] = acc.get(out, 0) - c
        return Element(acc, a.arity_out, p)

    return residual


def degree_check(
    g: GradedMap, inputs: list[Word], runner: SweepRunner | None = None,
) -> RelationReport:
    """Every term of g(w) has degree |w| + |g|; offending terms form the residual."""
    grading = g.grading

    def residual(word: Word) -> Element:
        target = grading.word_degree(word) + g.degree
        bad = {
            out: c for out, c in g.apply_word(word).items()
            if grading.word_degree(out) != target
        }
        return Element(bad, g.arity_out, g.p)

    return (runner or SweepRunner()).run(f"degree:{g.name}", inputs, residual)


def associativity(
    s: HopfAinfStructure, max_j: int, runner: SweepRunner | None = None,
) -> RelationReport:
    """μ(μ ⊗ 1) = μ(1 ⊗ μ) on triples with j-sum <= max_j."""
    left = compose(s.mu, extend_1_f_1(s.mu, 0, 1))
    right = compose(s.mu, extend_1_f_1(s.mu, 1, 0))
    return (runner or SweepRunner()).run(
        "associativity", basis_triples(max_j), _difference(left, right),
    )


def coassociativity(
    s: HopfAinfStructure, max_j: int, runner: SweepRunner | None = None,
) -> RelationReport:
    """(Δ ⊗ 1)Δ = (1 ⊗ Δ)Δ."""
    left = compose(extend_1_f_1(s.delta2, 0, 1), s.delta2)
    right = compose(extend_1_f_1(s.delta2, 1, 0), s.delta2)
    return (runner or SweepRunner()).run(
        "coassociativity", basis_words(max_j), _difference(left, right),
    )


def counit_laws(
    s: HopfAinfStructure, max_j: int, runner: SweepRunner | None = None,
) -> RelationReport:
    """(ε ⊗ 1)Δ = 1 = (1 ⊗ ε)Δ for the projection ε onto the unit."""
    p = s.p

    def residual(word: Word) -> Element:
        image = s.delta2.apply_word(word)
        left: Terms = {word: -1}
        right: Terms = {word: -1}
        for (a, b), c in image.items():
            if a == UNIT:
                left[(b,)] = left.get((b,), 0) + c
            if b == UNIT:
                right[(a,)] = right.get((a,), 0) + c
        res = Element(left, 1, p)
        return res if not res.is_zero() else Element(right, 1, p)

    return (runner or SweepRunner()).run("counit", basis_words(max_j), residual)


def algebra_map(
    s: HopfAinfStructure, max_j: int, runner: SweepRunner | None = None,
) -> RelationReport:
    """Δ₂ μ = (μ ⊗ μ) σ_{2,2} (Δ₂ ⊗ Δ₂)."""
    left = compose(s.delta2, s.mu)
    right = compose(
        s.mu_tensor(2),
        compose(sigma_map(2, s.params), tensor_maps(s.delta2, s.delta2)),
    )
    return (runner or SweepRunner()).run(
        "algebra_map", basis_pairs(max_j), _difference(left, right),
    )


def iterated_coproducts_agree(
    s: HopfAinfStructure, n: int, max_j: int, runner: SweepRunner | None = None,
) -> RelationReport:
    """f^n = g^n (a consequence of coassociativity)."""
    return (runner or SweepRunner()).run(
        f"f=g:n={n}", basis_words(max_j), _difference(s.f_n(n), s.g_n(n)),
    )
