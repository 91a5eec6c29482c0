"""The Hopf A∞-coalgebra A = E(v, 2m+1) ⊗ Γ(w, 2mp+2) over Z_p.

Basis v^i γ_j with i in {0, 1}. Multiplication μ = (μ_E ⊗ μ_Γ)σ_{2,2},
coproduct Δ₂ (the tensor-product coproduct) and the higher coproduct Δ_p of
degree p - 2. The iterated coproducts f^n and g^n are built from Δ₂.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

from hopf_ainf.algebra.field import Prime, as_prime, binom_int
from hopf_ainf.algebra.tensor import (
    UNIT,
    BasisElt,
    Element,
    GradedMap,
    Grading,
    Terms,
    Word,
    compose,
    extend_1_f_1,
    identity_map,
    tail_parities,
)


@dataclass(frozen=True)
class StructureParams(Grading):
    """(p, m): |v| = 2m+1 and |γ_1| = 2mp+2."""

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "v_degree": self.v_degree,
            "w_degree": self.w_degree,
        }

    @classmethod
    def of(cls, p: int | Prime, m: int) -> StructureParams:
        return cls(as_prime(p), m)


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All (k_1, ..., k_parts) of nonnegative integers summing to total."""
    if total < 0:
        return
    if parts == 1:
        yield (total,)
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def basis_elements(max_j: int) -> list[BasisElt]:
    """v^i γ_j for i in {0, 1}, 0 <= j <= max_j, in canonical order."""
    return [BasisElt(i, j) for i in (0, 1) for j in range(max_j + 1)]


def basis_pairs(max_j: int) -> list[Word]:
    """Words x ⊗ y with j_x + j_y <= max_j."""
    out = []
    for x in basis_elements(max_j):
        for y in basis_elements(max_j - x.j):
            out.append((x, y))
    return out


# -- structure rules --

def mul_rule(p: int):
    def rule(word: Word) -> Terms:
        (i1, j1), (i2, j2) = word
        if i1 and i2:
            return {}
        # σ_{2,2} moves γ_{j1} past v^{i2}; γ has even degree, so the sign is +1
        c = binom_int(j1 + j2, j1, p)
        return {(BasisElt(i1 + i2, j1 + j2),): c} if c else {}
    return rule


def delta2_rule(word: Word) -> Terms:
    (i, j), = word
    out: Terms = {}
    for k in range(i + 1):
        for l in range(j + 1):
            out[(BasisElt(k, l), BasisElt(i - k, j - l))] = 1
    return out


def delta_p_rule(p: int):
    def rule(word: Word) -> Terms:
        (i, j), = word
        if j == 0 or i == 1:
            # j = 0: no compositions of -1; i = 1: every factor carries v² = 0
            return {}
        return {
            tuple(BasisElt(1, k) for k in ks): 1
            for ks in weak_compositions(j - 1, p)
        }
    return rule


def counit(x: Element) -> int:
    """ε: A -> Z_p, the coefficient of the unit."""
    if x.k != 1:
        raise ValueError(f"counit is defined on A, got tensor length {x.k}")
    return x.terms.get((UNIT,), 0)


@dataclass
class HopfAinfStructure:
    """(A, μ, Δ₂, Δ_p) for given (p, m), with cached iterated coproducts."""

    params: StructureParams
    mu: GradedMap
    delta2: GradedMap
    delta_p: GradedMap
    label: str = "E⊗Γ"
    _f: dict[int, GradedMap] = field(default_factory=dict, repr=False)
    _g: dict[int, GradedMap] = field(default_factory=dict, repr=False)
    _mu_n: dict[int, GradedMap] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        p = self.params.p
        if self.delta_p.degree != p - 2:
            raise ValueError(
                f"Δ_p must have degree p-2 = {p - 2}, got {self.delta_p.degree}"
            )
        if (self.delta_p.arity_in, self.delta_p.arity_out) != (1, p):
            raise ValueError("Δ_p must map A -> A^⊗p")

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def grading(self) -> Grading:
        return self.params

    def psis(self) -> dict[int, GradedMap]:
        """The A∞ family: ψ² = Δ₂, ψ^p = Δ_p, all others zero."""
        return {2: self.delta2, self.p: self.delta_p}

    def mul(self, x: BasisElt, y: BasisElt) -> Element:
        return self.mu((x, y))

    def coproduct(self, x: BasisElt) -> Element:
        return self.delta2((x,))

    def higher_coproduct(self, x: BasisElt) -> Element:
        return self.delta_p((x,))

    def f_n(self, n: int) -> GradedMap:
        """f^n = (Δ ⊗ 1^{⊗n-2}) ⋯ (Δ ⊗ 1) Δ."""
        if n < 2:
            raise ValueError(f"f^n needs n >= 2, got {n}")
        cached = self._f.get(n)
        if cached is None:
            if n == 2:
                cached = self.delta2
            else:
                cached = compose(extend_1_f_1(self.delta2, 0, n - 2), self.f_n(n - 1))
                cached.name = f"f^{n}"
            self._f[n] = cached
        return cached

    def g_n(self, n: int) -> GradedMap:
        """g^n = (1^{⊗n-2} ⊗ Δ) ⋯ (1 ⊗ Δ) Δ."""
        if n < 2:
            raise ValueError(f"g^n needs n >= 2, got {n}")
        cached = self._g.get(n)
        if cached is None:
            if n == 2:
                cached = self.delta2
            else:
                cached = compose(extend_1_f_1(self.delta2, n - 2, 0), self.g_n(n - 1))
                cached.name = f"g^{n}"
            self._g[n] = cached
        return cached

    def mu_tensor(self, n: int) -> GradedMap:
        """μ^{⊗n}: (A^{⊗2})^{⊗n} -> A^{⊗n}.

        μ has degree 0, so no Koszul signs arise and the pairs are multiplied
        independently.
        """
        if n < 1:
            raise ValueError(f"μ^⊗n needs n >= 1, got {n}")
        if n == 1:
            return self.mu
        cached = self._mu_n.get(n)
        if cached is not None:
            return cached
        mu = self.mu

        def rule(word: Word) -> Terms:
            out: list[BasisElt] = []
            coeff = 1
            for t in range(n):
                image = mu.apply_word(word[2 * t:2 * t + 2])
                if not image:
                    return {}
                (prod,), c = next(iter(image.items()))
                out.append(prod)
                coeff *= c
            return {tuple(out): coeff}

        cached = GradedMap(f"μ^⊗{n}", 2 * n, n, 0, rule, self.params, memoize=False)
        self._mu_n[n] = cached
        return cached

    def shuffle_product(
        self, left: Mapping[Word, int], right: Mapping[Word, int], sign: int = 1,
    ) -> Terms:
        """μ^{⊗n} σ_{n,2} (left ⊗ right) for left, right in A^{⊗n}, mod p.

        Multiplies factor by factor and stops at the first vanishing product,
        without building the 2n-factor words.
        """
        mu = self.mu
        grading = self.params
        acc: Terms = {}
        for a, c in left.items():
            tails = tail_parities(a, grading)
            for b, d in right.items():
                coeff = sign * c * d
                out: list[BasisElt] = []
                for t, (x, y) in enumerate(zip(a, b)):
                    image = mu.apply_word((x, y))
                    if not image:
                        break
                    (prod,), e = next(iter(image.items()))
                    coeff *= -e if tails[t] and grading.degree(y) % 2 else e
                    out.append(prod)
                else:
                    key = tuple(out)
                    acc[key] = (acc.get(key, 0) + coeff) % self.p
        return {w: c for w, c in acc.items() if c}

    def identity(self) -> GradedMap:
        return identity_map(1, self.params)

    def to_dict(self) -> dict:
        return {"label": self.label, **self.params.to_dict()}


def build_structure(p: int | Prime, m: int = 1) -> HopfAinfStructure:
    """The structure of the factor E(v, 2m+1) ⊗ Γ(w, 2mp+2)."""
    params = StructureParams.of(p, m)
    q = params.p
    mu = GradedMap("μ", 2, 1, 0, mul_rule(q), params)
    delta2 = GradedMap("Δ₂", 1, 2, 0, delta2_rule, params)
    delta_p = GradedMap("Δ_p", 1, q, q - 2, delta_p_rule(q), params)
    return HopfAinfStructure(params=params, mu=mu, delta2=delta2, delta_p=delta_p)


def em_factors_n3(p: int | Prime, count: int) -> list[StructureParams]:
    """Parameters of the first ``count`` factors of H_*(Z, 3; Z_p): m = p^i."""
    prime = as_prime(p)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return [StructureParams(prime, prime.p ** i) for i in range(count)]
