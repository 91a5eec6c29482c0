"""Single-coefficient corruptions of Δ₂ or Δ_p, for testing the checkers."""

from __future__ import annotations

import random
from dataclasses import dataclass

from hopf_ainf.algebra.tensor import BasisElt, GradedMap, Terms, Word, format_basis
from hopf_ainf.hopf.structure import HopfAinfStructure

TARGETS = ("delta2", "delta_p")


@dataclass(frozen=True)
class Mutation:
    """Scale the coefficient of ``output`` in target(input) by ``factor``."""

    target: str
    input: BasisElt
    output: Word
    factor: int

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "input": self.input.to_list(),
            "output": [list(b) for b in self.output],
            "factor": self.factor,
        }

    def __str__(self) -> str:
        out = "⊗".join(format_basis(b) for b in self.output)
        return f"{self.target}({format_basis(self.input)})[{out}] *= {self.factor}"


def _corrupted(g: GradedMap, m: Mutation) -> GradedMap:
    def rule(word: Word) -> Terms:
        image = dict(g.apply_word(word))
        if word == (m.input,):
            image[m.output] = image[m.output] * m.factor
        return image

    return GradedMap(g.name, g.arity_in, g.arity_out, g.degree, rule, g.grading)


def mutate_structure(structure: HopfAinfStructure, mutation: Mutation) -> HopfAinfStructure:
    """A copy of ``structure`` with one coefficient of Δ₂ or Δ_p rescaled."""
    if mutation.target not in TARGETS:
        raise ValueError(
            f"Unknown mutation target '{mutation.target}'. Available: {', '.join(TARGETS)}"
        )
    p = structure.p
    if mutation.factor % p == 1:
        raise ValueError("factor must differ from 1 mod p")
    g = getattr(structure, mutation.target)
    if mutation.output not in g.apply_word((mutation.input,)):
        raise ValueError(f"{mutation} does not name a term of {g.name}")

    corrupted = _corrupted(g, mutation)
    return HopfAinfStructure(
        params=structure.params,
        mu=structure.mu,
        delta2=corrupted if mutation.target == "delta2" else structure.delta2,
        delta_p=corrupted if mutation.target == "delta_p" else structure.delta_p,
        label=f"{structure.label} [{mutation}]",
    )


def random_mutations(
    structure: HopfAinfStructure, max_j: int, seed: int, count: int,
) -> list[Mutation]:
    """``count`` seeded mutations that a certificate at ``max_j`` must catch.

    Inputs are kept to γ-index <= max_j // 2 so every relation that involves
    the corrupted coefficient is exercised by the sweep. Factors range over
    {0, 2, ..., p-1}.
    """
    if max_j < 2:
        raise ValueError(f"max_j must be >= 2 to detect mutations, got {max_j}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    p = structure.p
    rng = random.Random(seed)
    factors = [0, *range(2, p)]
    top = max_j // 2
    out = []
    while len(out) < count:
        target = rng.choice(TARGETS)
        if target == "delta2":
            x = BasisElt(rng.randint(0, 1), rng.randint(0, top))
        else:
            # Δ_p vanishes on 1 and on every v γ_j.
            x = BasisElt(0, rng.randint(1, top))
        image = sorted(getattr(structure, target).apply_word((x,)))
        out.append(Mutation(target, x, rng.choice(image), rng.choice(factors)))
    return out
