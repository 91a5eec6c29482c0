"""A∞ structure relations, the cobar oracle and Hopf compatibility."""

from __future__ import annotations

from collections.abc import Callable, Mapping

from hopf_ainf.algebra.field import binom_int
from hopf_ainf.algebra.cobar import cobar_square, desuspension_sign
from hopf_ainf.algebra.tensor import (
    BasisElt,
    Element,
    GradedMap,
    Grading,
    Terms,
    Word,
    compose,
    extend_1_f_1,
    tail_parities,
    zero_map,
)
from hopf_ainf.checks.axioms import basis_words
from hopf_ainf.checks.lemma import bounded_product_sums, bucket_at
from hopf_ainf.checks.sweep import SweepRunner
from hopf_ainf.checks.types import RelationReport
from hopf_ainf.hopf.structure import (
    HopfAinfStructure,
    basis_elements,
    basis_pairs,
    weak_compositions,
)

Family = Mapping[int, GradedMap]


def relation_terms(psis: Family, n: int) -> list[tuple[int, GradedMap]]:
    """The signed composites (-1)^{j(n+i+1)} ψ^{j+1}_{i, n-i-j-1} ψ^{n-j} of arity n.

    Pairs involving an arity absent from ``psis`` are zero and omitted.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    for j in range(n):
        outer, inner = j + 1, n - j
        if outer not in psis or inner not in psis:
            continue
        for i in range(n - j):
            sign = -1 if (j * (n + i + 1)) % 2 else 1
            placed = extend_1_f_1(psis[outer], i, n - i - j - 1)
            out.append((sign, compose(placed, psis[inner])))
    return out


def nontrivial_arities(psis: Family, max_n: int) -> list[int]:
    """Every n <= max_n whose relation has at least one composable pair."""
    return [n for n in range(1, max_n + 1) if relation_terms(psis, n)]


def relation_residual(psis: Family, n: int, p: int):
    composites = relation_terms(psis, n)

    def residual(word: Word) -> Element:
        acc: Terms = {}
        for sign, g in composites:
            for out, c in g.apply_word(word).items():
                acc[out] = acc.get(out, 0) + sign * c
        return Element(acc, n, p)

    return residual


def ainf_relation(
    n: int, psis: Family, max_j: int, grading: Grading,
    runner: SweepRunner | None = None,
) -> RelationReport:
    """Evaluate the arity-n structure relation on every v^i γ_j with j <= max_j."""
    residual = relation_residual(psis, n, grading.p)
    return (runner or SweepRunner()).run(f"ainf:n={n}", basis_words(max_j), residual)


def cobar_agreement(
    n: int, psis: Family, max_j: int, grading: Grading,
    runner: SweepRunner | None = None,
) -> RelationReport:
    """The length-n part of d∘d[x] against the direct relation on x.

    On a length-1 word the length-n component of d∘d at U equals
    (-1)^{n-1} times the desuspension sign of U times the relation residual
    at U. A nonzero difference means the two sign conventions disagree.
    """
    direct = relation_residual(psis, n, grading.p)
    global_sign = -1 if (n - 1) % 2 else 1

    def residual(word: Word) -> Element:
        square = cobar_square(psis, word, n, grading).component(n)
        acc: Terms = dict(square.terms)
        for u, c in direct(word).terms.items():
            acc[u] = acc.get(u, 0) - global_sign * desuspension_sign(u, grading) * c
        return Element(acc, n, grading.p)

    return (runner or SweepRunner()).run(
        f"cobar:n={n}", basis_words(max_j), residual,
    )


def cobar_pair_words(max_j: int) -> list[Word]:
    """Length-2 cobar words with both γ-indices <= max_j."""
    elts = basis_elements(max_j)
    return [(x, y) for x in elts for y in elts]


def cobar_square_zero(
    psis: Family, words: list[Word], cutoff: int, grading: Grading,
    runner: SweepRunner | None = None,
) -> RelationReport:
    """d∘d = 0 through length ``cutoff`` on the given cobar words."""
    def residual(word: Word) -> Element:
        return cobar_square(psis, word, cutoff, grading)

    return (runner or SweepRunner()).run("cobar:d∘d", words, residual)


def derivation_right_side(
    structure: HopfAinfStructure, h: GradedMap, f: GradedMap, g: GradedMap,
) -> Callable[[Word], Terms]:
    """x ⊗ y -> μ^{⊗n} σ_{n,2} (f ⊗ h + h ⊗ g)(x ⊗ y).

    (f ⊗ h)(x ⊗ y) = (-1)^{|h||x|} f(x) ⊗ h(y); g has degree 0, so h ⊗ g
    carries no sign.
    """
    grading = structure.params
    odd_h = h.degree % 2 == 1

    def right(word: Word) -> Terms:
        x, y = word
        sign = -1 if odd_h and grading.degree(x) % 2 else 1
        acc = structure.shuffle_product(f.apply_word((x,)), h.apply_word((y,)), sign)
        for out, c in structure.shuffle_product(h.apply_word((x,)), g.apply_word((y,))).items():
            acc[out] = acc.get(out, 0) + c
        return acc

    return right


def fg_derivation_check(
    h: GradedMap, f: GradedMap, g: GradedMap, structure: HopfAinfStructure,
    max_j: int, runner: SweepRunner | None = None,
) -> RelationReport:
    """h μ = μ^{⊗n} σ_{n,2} (f ⊗ h + h ⊗ g) on pairs with j-sum <= max_j."""
    n = h.arity_out
    for name, m in (("h", h), ("f", f), ("g", g)):
        if m.arity_in != 1 or m.arity_out != n:
            raise ValueError(
                f"{name} must map A -> A^⊗{n}, got {m.arity_in}->{m.arity_out}"
            )
    if f.degree or g.degree:
        raise ValueError("f and g must be algebra maps of degree 0")

    left = compose(h, structure.mu)
    right = derivation_right_side(structure, h, f, g)
    p = structure.p

    def residual(word: Word) -> Element:
        acc: Terms = dict(left.apply_word(word))
        for out, c in right(word).items():
            acc[out] = acc.get(out, 0) - c
        return Element(acc, n, p)

    return (runner or SweepRunner()).run(
        f"derivation:{h.name}", basis_pairs(max_j), residual,
    )


def _higher(structure: HopfAinfStructure, n: int) -> GradedMap:
    if n < 3:
        raise ValueError(f"the Hopf relation needs n >= 3, got {n}")
    if n == structure.p:
        return structure.delta_p
    return zero_map(1, n, n - 2, structure.params)


def hopf_compat(
    structure: HopfAinfStructure, max_j: int, n: int | None = None,
    runner: SweepRunner | None = None,
) -> RelationReport:
    """Δ_n μ = μ^{⊗n} σ_{n,2} (f^n ⊗ Δ_n + Δ_n ⊗ f^n), n defaulting to p.

    Δ_n is zero for n != p, where the relation holds trivially.
    """
    n = structure.p if n is None else n
    f = structure.f_n(n)
    report = fg_derivation_check(_higher(structure, n), f, f, structure, max_j, runner)
    report.relation_id = "hopf_compat" if n == structure.p else f"hopf_compat:n={n}"
    return report


def gamma_pairs(max_j: int) -> list[Word]:
    return [w for w in basis_pairs(max_j) if w[0].i == 0 and w[1].i == 0]


def v_input_vanishing(
    structure: HopfAinfStructure, max_j: int, runner: SweepRunner | None = None,
) -> list[RelationReport]:
    """Each side of the Hopf relation is zero on every input carrying a v.

    The sides are checked separately, so a cancellation between them cannot
    hide a nonzero value.
    """
    runner = runner or SweepRunner()
    n = structure.p
    f = structure.f_n(n)
    left = compose(structure.delta_p, structure.mu)
    right = derivation_right_side(structure, structure.delta_p, f, f)
    inputs = [w for w in basis_pairs(max_j) if w[0].i or w[1].i]
    return [
        runner.run(
            "hopf_compat:lhs-v-inputs", inputs,
            lambda word: Element(dict(left.apply_word(word)), n, structure.p),
        ),
        runner.run(
            "hopf_compat:rhs-v-inputs", inputs,
            lambda word: Element(right(word), n, structure.p),
        ),
    ]


def sigma_signs_positive(
    structure: HopfAinfStructure, max_j: int, runner: SweepRunner | None = None,
) -> RelationReport:
    """σ_{p,2} produces only + signs on f^p ⊗ Δ_p + Δ_p ⊗ f^p of γ_i ⊗ γ_j.

    The residual collects the words that would pick up a minus sign.
    """
    n = structure.p
    f = structure.f_n(n)
    delta_p = structure.delta_p
    grading = structure.params

    def residual(word: Word) -> Element:
        x, y = word
        bad: Terms = {}
        for left, right in (
            (f.apply_word((x,)), delta_p.apply_word((y,))),
            (delta_p.apply_word((x,)), f.apply_word((y,))),
        ):
            for a, c in left.items():
                odd = [t for t, o in enumerate(tail_parities(a, grading)) if o]
                if not odd:
                    continue
                for b, d in right.items():
                    if any(grading.degree(b[t]) % 2 for t in odd):
                        bad[a + b] = bad.get(a + b, 0) + c * d
        return Element(bad, 2 * n, structure.p)

    return (runner or SweepRunner()).run(
        "hopf_compat:σ-signs", gamma_pairs(max_j), residual,
    )


def _closed_form(structure: HopfAinfStructure, word: Word, lemma_side: bool) -> Terms:
    (_, i), (_, j) = word
    p = structure.p
    out: Terms = {}
    for z in weak_compositions(i + j - 1, p):
        if lemma_side:
            buckets = bounded_product_sums(z)
            c = bucket_at(buckets, i - 1) + bucket_at(buckets, i)
        else:
            c = binom_int(sum(z) + 1, i, p)
        out[tuple(BasisElt(1, k) for k in z)] = c
    return out


def closed_form_check(
    structure: HopfAinfStructure, max_j: int, runner: SweepRunner | None = None,
) -> list[RelationReport]:
    """Both sides of the Hopf relation on γ_i ⊗ γ_j against their closed forms.

    Left side: Σ_z C(z_1+...+z_p+1, i) u. Right side: Σ_z [the lemma's right
    side at (z, i)] u. Here u = vγ_{z_1} ⊗ ... ⊗ vγ_{z_p} and z runs over weak
    compositions of i+j-1 into p parts.
    """
    runner = runner or SweepRunner()
    n = structure.p
    f = structure.f_n(n)
    left = compose(structure.delta_p, structure.mu).apply_word
    right = derivation_right_side(structure, structure.delta_p, f, f)

    def against(side: Callable[[Word], Terms], lemma_side: bool):
        def residual(word: Word) -> Element:
            acc: Terms = dict(side(word))
            for out, c in _closed_form(structure, word, lemma_side).items():
                acc[out] = acc.get(out, 0) - c
            return Element(acc, n, structure.p)
        return residual

    inputs = gamma_pairs(max_j)
    return [
        runner.run("hopf_compat:lhs-closed-form", inputs, against(left, False)),
        runner.run("hopf_compat:rhs-closed-form", inputs, against(right, True)),
    ]
