"""The binomial identity behind the Hopf relation.

For z = (z_1, ..., z_n) and i >= 0:

    C(z_1 + ... + z_n + 1, i)
        = Σ_{s_1+...+s_n = i-1} Π C(z_t, s_t) + Σ_{t_1+...+t_n = i} Π C(z_t, t_t)

over ℕ, and hence after reducing mod p.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

from hopf_ainf.algebra.field import as_prime

logger = logging.getLogger(__name__)

MAX_WITNESSES = 10


@dataclass(frozen=True)
class LemmaResult:
    z: tuple[int, ...]
    i: int
    lhs: int
    rhs: int
    modulus: int | None = None
    # None when the Vandermonde expansion was not checked
    expansion_ok: bool | None = None

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def passed(self) -> bool:
        return self.equal and self.expansion_ok is not False

    def to_dict(self) -> dict:
        out = {
            "z": list(self.z),
            "i": self.i,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "modulus": self.modulus,
        }
        if self.expansion_ok is not None:
            out["expansion_ok"] = self.expansion_ok
        return out


def _check_tuple(z: Sequence[int], i: int) -> tuple[int, ...]:
    z = tuple(z)
    if not z:
        raise ValueError("z must have at least one entry")
    if any(zt < 0 for zt in z):
        raise ValueError(f"z entries must be nonnegative, got {z}")
    if i < 0:
        raise ValueError(f"i must be nonnegative, got {i}")
    return z


def bounded_product_sums(z: Sequence[int]) -> list[int]:
    """bucket[s] = Σ_{t <= z, |t| = s} Π C(z_t, t_t) for 0 <= s <= Σz.

    Terms with some t_k > z_k vanish. The sum over the remaining vectors is
    accumulated one coordinate at a time (a convolution), so the cost is
    polynomial in Σz rather than Π(z_t + 1).
    """
    buckets = [1]
    for zt in z:
        row = [math.comb(zt, tt) for tt in range(zt + 1)]
        merged = [0] * (len(buckets) + zt)
        for s, a in enumerate(buckets):
            if a:
                for tt, b in enumerate(row):
                    merged[s + tt] += a * b
        buckets = merged
    return buckets


def bucket_at(buckets: list[int], s: int) -> int:
    return buckets[s] if 0 <= s < len(buckets) else 0


def lemma_comb(z: Sequence[int], i: int, p: int | None = None) -> LemmaResult:
    """Both sides of the identity, over ℕ (p=None) or reduced mod p."""
    z = _check_tuple(z, i)
    buckets = bounded_product_sums(z)
    lhs = math.comb(sum(z) + 1, i)
    rhs = bucket_at(buckets, i - 1) + bucket_at(buckets, i)
    if p is not None:
        q = as_prime(p).p
        return LemmaResult(z, i, lhs % q, rhs % q, q)
    return LemmaResult(z, i, lhs, rhs)


def vandermonde_expansion_check(z: Sequence[int], i: int, p: int) -> bool:
    """C(Σz, i) = Σ_{|t| = i} Π C(z_t, t_t) mod p."""
    z = _check_tuple(z, i)
    q = as_prime(p).p
    lhs = math.comb(sum(z), i) % q
    return lhs == bucket_at(bounded_product_sums(z), i) % q


@dataclass
class LemmaReport:
    """Pass rate of a lemma sweep, with the first few counterexamples."""

    ring: str
    trials: int = 0
    passed_count: int = 0
    witnesses: list[LemmaResult] = field(default_factory=list)
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return self.trials == self.passed_count

    def record(self, result: LemmaResult, expansion_ok: bool | None = None) -> None:
        if expansion_ok is not None:
            result = replace(result, expansion_ok=expansion_ok)
        self.trials += 1
        if result.passed:
            self.passed_count += 1
        elif len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(result)

    def to_dict(self) -> dict:
        out = {
            "ring": self.ring,
            "trials": self.trials,
            "passed": self.passed_count,
            "pass": self.passed,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def exhaustive_sweep(max_sum: int = 12, max_n: int = 5) -> LemmaReport:
    """Every tuple of length 1..max_n with Σz <= max_sum, every 0 <= i <= Σz+2, over ℕ."""
    if max_sum < 0 or max_n < 1:
        raise ValueError(f"need max_sum >= 0 and max_n >= 1, got {max_sum}, {max_n}")
    report = LemmaReport(ring="N")
    for n in range(1, max_n + 1):
        for z in itertools.product(range(max_sum + 1), repeat=n):
            if sum(z) > max_sum:
                continue
            buckets = bounded_product_sums(z)
            for i in range(sum(z) + 3):
                lhs = math.comb(sum(z) + 1, i)
                rhs = bucket_at(buckets, i - 1) + bucket_at(buckets, i)
                report.record(LemmaResult(z, i, lhs, rhs))
    logger.info("lemma over N: %d/%d", report.passed_count, report.trials)
    return report


def random_sweep(
    p: int, trials: int, seed: int = 0, n: int | None = None, max_entry: int | None = None,
) -> LemmaReport:
    """``trials`` seeded random (z, i) with len(z) = n (default p), checked mod p.

    Entries range over 0..max_entry (default p² + p) so carries past p² occur.
    Each trial also checks the re-indexed Vandermonde expansion.
    """
    q = as_prime(p).p
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    n = q if n is None else n
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    top = q * q + q if max_entry is None else max_entry
    rng = random.Random(seed)
    report = LemmaReport(ring=f"Z_{q}", seed=seed)
    for _ in range(trials):
        z = tuple(rng.randint(0, top) for _ in range(n))
        i = rng.randint(0, sum(z) + 1)
        report.record(lemma_comb(z, i, q), vandermonde_expansion_check(z, i, q))
    logger.info("lemma over Z_%d: %d/%d", q, report.passed_count, report.trials)
    return report
