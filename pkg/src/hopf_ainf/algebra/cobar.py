"""The cobar differential on the tensor algebra T(↓A), truncated by length.

Suspension is not stored: a cobar word ↓a_1|...|↓a_n is the tensor word
(a_1, ..., a_n), and each ↓a_t has degree |a_t| - 1. The component of the
differential coming from ψ^k is ↓^{⊗k} ψ^k ↑, applied factor by factor with
the Koszul sign of passing a degree -1 operator over the earlier factors.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping

from hopf_ainf.algebra.tensor import Element, GradedMap, Grading, Terms, Word

logger = logging.getLogger(__name__)


def desuspension_sign(word: Word, grading: Grading) -> int:
    """Sign of ↓^{⊗k}(a_1 ⊗ ... ⊗ a_k) = ±(↓a_1 | ... | ↓a_k).

    The t-th ↓ passes a_1..a_{t-1}, so a_s is crossed by k - s of them.
    """
    k = len(word)
    odd = 0
    for s, b in enumerate(word):
        if (k - 1 - s) % 2 and grading.degree(b) % 2:
            odd ^= 1
    return -1 if odd else 1


def _check_family(psis: Mapping[int, GradedMap]) -> None:
    for k, psi in psis.items():
        if psi.arity_in != 1 or psi.arity_out != k:
            raise ValueError(
                f"ψ^{k} must map A -> A^⊗{k}, got {psi.arity_in}->{psi.arity_out}"
            )
        if psi.degree != k - 2:
            raise ValueError(f"ψ^{k} must have degree {k - 2}, got {psi.degree}")


def _differential_terms(
    psis: Mapping[int, GradedMap], terms: Mapping[Word, int], cutoff: int,
    grading: Grading,
) -> Terms:
    acc: Terms = {}
    for word, c in terms.items():
        n = len(word)
        shift_parity = 0
        for i, a in enumerate(word):
            prefix, suffix = word[:i], word[i + 1:]
            base = -c if shift_parity else c
            for k, psi in psis.items():
                if n + k - 1 > cutoff:
                    continue
                for u, d in psi.apply_word((a,)).items():
                    out = prefix + u + suffix
                    acc[out] = acc.get(out, 0) + base * desuspension_sign(u, grading) * d
            shift_parity ^= (grading.degree(a) - 1) % 2
    return acc


def cobar_differential(
    psis: Mapping[int, GradedMap],
    x: Element | Word,
    cutoff: int,
    grading: Grading,
) -> Element:
    """d on ΩA applied to x, dropping words longer than ``cutoff``.

    ``psis`` maps k to ψ^k; missing arities are zero (ψ^1 = 0 here because A
    has zero differential). The result mixes word lengths, so its tensor
    length is None; use ``Element.component`` to take a homogeneous part.
    """
    _check_family(psis)
    if isinstance(x, Element):
        terms = x.terms
    else:
        terms = {tuple(x): 1}
    for word in terms:
        if len(word) > cutoff:
            raise ValueError(
                f"word of length {len(word)} exceeds cutoff {cutoff}"
            )
    return Element(_differential_terms(psis, terms, cutoff, grading), None, grading.p)


def cobar_square(
    psis: Mapping[int, GradedMap],
    x: Element | Word,
    cutoff: int,
    grading: Grading,
) -> Element:
    """d ∘ d applied to x; zero in every length <= cutoff iff the relations hold."""
    once = cobar_differential(psis, x, cutoff, grading)
    twice = _differential_terms(psis, once.terms, cutoff, grading)
    result = Element(twice, None, grading.p)
    if not result.is_zero():
        logger.debug("d∘d has %d nonzero terms", len(result))
    return result
