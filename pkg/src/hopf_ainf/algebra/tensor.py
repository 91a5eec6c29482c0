"""Graded tensor words, Z_p-linear combinations and graded linear maps.

A basis element v^i γ_j of E(v, 2m+1) ⊗ Γ(w, 2mp+2) is the pair (i, j).
A tensor word is a tuple of such pairs; an Element is a sparse Z_p-linear
combination of words. Maps are defined on basis words and extended linearly,
with the Koszul rule (f ⊗ g)(x ⊗ y) = (-1)^{|g||x|} f(x) ⊗ g(y).
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from hopf_ainf.algebra.field import FieldElt, Prime, as_prime


class BasisElt(NamedTuple):
    """The monomial v^i γ_j; (0, 0) is the unit."""

    i: int
    j: int

    def to_list(self) -> list[int]:
        return [self.i, self.j]


UNIT = BasisElt(0, 0)

Word = tuple[BasisElt, ...]
Terms = dict[Word, int]


@dataclass(frozen=True)
class Grading:
    """Degrees of the generators: |v| = 2m+1, |γ_1| = 2mp+2."""

    prime: Prime
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")

    @property
    def p(self) -> int:
        return self.prime.p

    @property
    def v_degree(self) -> int:
        return 2 * self.m + 1

    @property
    def w_degree(self) -> int:
        return 2 * self.m * self.p + 2

    def degree(self, b: tuple[int, int]) -> int:
        return b[0] * self.v_degree + b[1] * self.w_degree

    def word_degree(self, word: Sequence[tuple[int, int]]) -> int:
        return sum(self.degree(b) for b in word)


def make_word(pairs: Iterable[Sequence[int]]) -> Word:
    """Build a word from (i, j) pairs, validating each factor."""
    word = []
    for pair in pairs:
        i, j = pair
        if i not in (0, 1):
            raise ValueError(f"exponent of v must be 0 or 1, got {i}")
        if j < 0:
            raise ValueError(f"divided-power index must be >= 0, got {j}")
        word.append(BasisElt(i, j))
    if not word:
        raise ValueError("a tensor word needs at least one factor")
    return tuple(word)


def _word_key(word: Word) -> tuple:
    return (len(word), word)


class Element:
    """A finite Z_p-linear combination of tensor words.

    All words share the tensor length ``k``. ``k`` is None only for cobar
    chains, which mix word lengths. Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_k", "_p")

    def __init__(
        self, terms: Mapping[Word, int], k: int | None, p: int | Prime,
    ) -> None:
        modulus = p.p if isinstance(p, Prime) else p
        clean: Terms = {}
        for word, coeff in terms.items():
            c = int(coeff) % modulus
            if c:
                if k is not None and len(word) != k:
                    raise ValueError(
                        f"word of length {len(word)} in an element of "
                        f"tensor length {k}"
                    )
                clean[word] = c
        self._terms = clean
        self._k = k
        self._p = modulus

    @classmethod
    def zero(cls, k: int | None, p: int | Prime) -> Element:
        return cls({}, k, p)

    @classmethod
    def basis(cls, word: Word, p: int | Prime, coeff: int = 1) -> Element:
        return cls({word: coeff}, len(word), p)

    @property
    def k(self) -> int | None:
        return self._k

    @property
    def p(self) -> int:
        return self._p

    @property
    def terms(self) -> Mapping[Word, int]:
        return self._terms

    def coefficient(self, word: Word) -> FieldElt:
        return FieldElt(self._terms.get(word, 0), Prime(self._p))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        for word in sorted(self._terms, key=_word_key):
            yield word, self._terms[word]

    def _check(self, other: Element) -> None:
        if self._p != other._p:
            raise ValueError(f"modulus mismatch: {self._p} vs {other._p}")
        if self._k != other._k and self._terms and other._terms:
            raise ValueError(
                f"tensor length mismatch: {self._k} vs {other._k}"
            )

    def __add__(self, other: Element) -> Element:
        self._check(other)
        acc = dict(self._terms)
        for word, c in other._terms.items():
            acc[word] = acc.get(word, 0) + c
        k = self._k if self._terms else other._k
        return Element(acc, k, self._p)

    def __neg__(self) -> Element:
        return Element({w: -c for w, c in self._terms.items()}, self._k, self._p)

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, c: int | FieldElt) -> Element:
        factor = int(c)
        return Element(
            {w: factor * x for w, x in self._terms.items()}, self._k, self._p,
        )

    def __rmul__(self, c: int | FieldElt) -> Element:
        return self.scale(c)

    def tensor(self, other: Element) -> Element:
        """Concatenation product x ⊗ y (no Koszul sign: no map is moved)."""
        self._check_modulus(other)
        acc: Terms = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, 0) + c1 * c2
        k = None if self._k is None or other._k is None else self._k + other._k
        return Element(acc, k, self._p)

    def _check_modulus(self, other: Element) -> None:
        if self._p != other._p:
            raise ValueError(f"modulus mismatch: {self._p} vs {other._p}")

    def component(self, length: int) -> Element:
        """The homogeneous part made of words of the given length."""
        return Element(
            {w: c for w, c in self._terms.items() if len(w) == length},
            length, self._p,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._p == other._p and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._p, frozenset(self._terms.items())))

    def to_dict(self) -> dict:
        return {
            "k": self._k,
            "terms": [
                {"word": [list(b) for b in word], "coeff": c}
                for word, c in self
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping, p: int | Prime) -> Element:
        terms: Terms = {}
        for entry in data["terms"]:
            word = make_word(entry["word"])
            terms[word] = terms.get(word, 0) + int(entry["coeff"])
        return cls(terms, data.get("k"), p)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, c in self:
            text = "|".join(format_basis(b) for b in word)
            parts.append(text if c == 1 else f"{c}·{text}")
        return " + ".join(parts)


def format_basis(b: tuple[int, int]) -> str:
    i, j = b
    if i == 0 and j == 0:
        return "1"
    v = "v" if i else ""
    g = f"γ{j}" if j else ""
    return v + g


# -- signs --

def koszul_sign(degrees: Sequence[int], permutation: Sequence[int]) -> int:
    """Sign of rearranging graded factors.

    ``permutation[t]`` is the source index of the factor placed at position t.
    Every pair of factors whose relative order is reversed contributes
    (-1)^{|a||b|}.
    """
    n = len(degrees)
    if sorted(permutation) != list(range(n)):
        raise ValueError(f"not a permutation of {n} factors: {list(permutation)}")
    odd = 0
    for s in range(n):
        for t in range(s + 1, n):
            a, b = permutation[s], permutation[t]
            if a > b and degrees[a] % 2 and degrees[b] % 2:
                odd ^= 1
    return -1 if odd else 1


def tail_parities(word: Word, grading: Grading) -> list[int]:
    """Entry t is the parity of |a_{t+1}| + ... + |a_n| for word a_1..a_n.

    Under σ_{n,2}, b_t passes exactly a_{t+1}..a_n, so b_t of odd degree costs
    a sign iff entry t is 1.
    """
    out = [0] * len(word)
    odd = 0
    for t in range(len(word) - 1, -1, -1):
        out[t] = odd
        odd ^= grading.degree(word[t]) % 2
    return out


def shuffle_sign(left_degrees: Sequence[int], right_degrees: Sequence[int]) -> int:
    """Koszul sign of σ_{n,2}: each b_s passes a_t for t > s."""
    if len(left_degrees) != len(right_degrees):
        raise ValueError("σ_{n,2} needs two blocks of equal length")
    odd = 0
    for s, b in enumerate(right_degrees):
        if b % 2:
            for a in left_degrees[s + 1:]:
                odd ^= a % 2
    return -1 if odd else 1


def sigma_word(word: Word, grading: Grading) -> tuple[int, Word]:
    """Apply σ_{n,2} to a single word of length 2n."""
    if len(word) % 2:
        raise ValueError(f"σ_(n,2) needs an even tensor length, got {len(word)}")
    n = len(word) // 2
    left, right = word[:n], word[n:]
    sign = shuffle_sign(
        [grading.degree(b) for b in left], [grading.degree(b) for b in right],
    )
    out: list[BasisElt] = []
    for a, b in zip(left, right):
        out.extend((a, b))
    return sign, tuple(out)


def sigma_n2(x: Element, grading: Grading) -> Element:
    """σ_{n,2}: (A^{⊗n})^{⊗2} -> (A^{⊗2})^{⊗n}, with Koszul signs."""
    if x.k is None or x.k % 2:
        raise ValueError(f"σ_(n,2) needs an even tensor length, got {x.k}")
    acc: Terms = {}
    for word, c in x.terms.items():
        sign, out = sigma_word(word, grading)
        acc[out] = acc.get(out, 0) + sign * c
    return Element(acc, x.k, grading.p)


# -- graded maps --

Rule = Callable[[Word], Mapping[Word, int]]


class GradedMap:
    """A linear map A^{⊗k_in} -> A^{⊗k_out} of fixed degree.

    The rule gives the image of each basis word; images are reduced mod p and,
    unless ``memoize`` is off, memoized per word. The memo is shared between
    threads. σ_{n,2} and μ^{⊗n} run without one.
    """

    def __init__(
        self,
        name: str,
        arity_in: int,
        arity_out: int,
        degree: int,
        rule: Rule,
        grading: Grading,
        memoize: bool = True,
    ) -> None:
        self.name = name
        self.arity_in = arity_in
        self.arity_out = arity_out
        self.degree = degree
        self.grading = grading
        self._rule = rule
        self.memoize = memoize
        self._memo: dict[Word, Terms] = {}
        self._lock = threading.Lock()

    @property
    def p(self) -> int:
        return self.grading.p

    def apply_word(self, word: Word) -> Terms:
        """Image of one basis word as a raw {word: coeff} dict (do not mutate)."""
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        if len(word) != self.arity_in:
            raise ValueError(
                f"{self.name} expects words of length {self.arity_in}, "
                f"got {len(word)}"
            )
        p = self.grading.p
        image: Terms = {}
        for out, c in self._rule(word).items():
            c %= p
            if c:
                image[out] = c
        if self.memoize:
            with self._lock:
                self._memo.setdefault(word, image)
        return image

    def __call__(self, x: Element | Word) -> Element:
        if isinstance(x, Element):
            if x.k is not None and x.k != self.arity_in and not x.is_zero():
                raise ValueError(
                    f"{self.name} expects tensor length {self.arity_in}, "
                    f"got {x.k}"
                )
            acc: Terms = {}
            for word, c in x.terms.items():
                for out, d in self.apply_word(word).items():
                    acc[out] = acc.get(out, 0) + c * d
            return Element(acc, self.arity_out, self.grading.p)
        return Element(dict(self.apply_word(tuple(x))), self.arity_out, self.grading.p)

    def __repr__(self) -> str:
        return (
            f"GradedMap({self.name}: {self.arity_in}->{self.arity_out}, "
            f"deg {self.degree})"
        )


def identity_map(k: int, grading: Grading) -> GradedMap:
    return GradedMap(
        "1" if k == 1 else f"1^{k}", k, k, 0, lambda w: {w: 1}, grading,
    )


def zero_map(arity_in: int, arity_out: int, degree: int, grading: Grading) -> GradedMap:
    return GradedMap("0", arity_in, arity_out, degree, lambda w: {}, grading)


def extend_1_f_1(f: GradedMap, i: int, j: int) -> GradedMap:
    """f_{i,j} = 1^{⊗i} ⊗ f ⊗ 1^{⊗j}.

    Passing f across the first i factors costs (-1)^{|f|·(|a_1|+...+|a_i|)}.
    """
    if i < 0 or j < 0:
        raise ValueError(f"padding must be nonnegative, got i={i}, j={j}")
    if i == 0 and j == 0:
        return f
    grading = f.grading
    odd_map = f.degree % 2 == 1
    width = f.arity_in

    def rule(word: Word) -> Terms:
        prefix = word[:i]
        mid = word[i:i + width]
        suffix = word[i + width:]
        sign = 1
        if odd_map and grading.word_degree(prefix) % 2:
            sign = -1
        return {prefix + out + suffix: sign * c for out, c in f.apply_word(mid).items()}

    return GradedMap(
        f"{f.name}_{{{i},{j}}}",
        i + width + j,
        i + f.arity_out + j,
        f.degree,
        rule,
        grading,
    )


def compose(g: GradedMap, f: GradedMap) -> GradedMap:
    """g ∘ f; degrees add."""
    if g.arity_in != f.arity_out:
        raise ValueError(
            f"cannot compose {g.name} (in {g.arity_in}) after "
            f"{f.name} (out {f.arity_out})"
        )

    def rule(word: Word) -> Terms:
        acc: Terms = {}
        for mid, c in f.apply_word(word).items():
            for out, d in g.apply_word(mid).items():
                acc[out] = acc.get(out, 0) + c * d
        return acc

    return GradedMap(
        f"{g.name}∘{f.name}", f.arity_in, g.arity_out, f.degree + g.degree,
        rule, f.grading,
    )


def tensor_maps(f: GradedMap, g: GradedMap) -> GradedMap:
    """f ⊗ g with the Koszul rule (f ⊗ g)(x ⊗ y) = (-1)^{|g||x|} f(x) ⊗ g(y)."""
    grading = f.grading
    split = f.arity_in
    odd_g = g.degree % 2 == 1

    def rule(word: Word) -> Terms:
        x, y = word[:split], word[split:]
        sign = -1 if odd_g and grading.word_degree(x) % 2 else 1
        gy = g.apply_word(y)
        acc: Terms = {}
        for fx, c in f.apply_word(x).items():
            for out, d in gy.items():
                key = fx + out
                acc[key] = acc.get(key, 0) + sign * c * d
        return acc

    return GradedMap(
        f"({f.name}⊗{g.name})",
        f.arity_in + g.arity_in,
        f.arity_out + g.arity_out,
        f.degree + g.degree,
        rule,
        grading,
    )


def sigma_map(n: int, grading: Grading) -> GradedMap:
    """σ_{n,2} as a degree-0 map on words of length 2n."""

    def rule(word: Word) -> Terms:
        sign, out = sigma_word(word, grading)
        return {out: sign}

    return GradedMap(f"σ_{{{n},2}}", 2 * n, 2 * n, 0, rule, grading, memoize=False)
