"""Exact arithmetic in Z_p and binomial coefficients mod p."""

from __future__ import annotations

import threading
from dataclasses import dataclass


class ModulusMismatchError(ArithmeticError):
    """Raised when two field elements with different moduli are combined."""

    pass


def _is_prime(n: int) -> bool:
    """Trial division; the primes used here are tiny."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Prime:
    """An odd prime modulus."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise ValueError(f"Prime must be an integer, got {self.p!r}")
        if self.p < 3 or not _is_prime(self.p):
            raise ValueError(f"p must be an odd prime >= 3, got {self.p}")

    def __int__(self) -> int:
        return self.p

    def elt(self, value: int) -> FieldElt:
        """Reduce an integer into Z_p."""
        return FieldElt(value % self.p, self)


def as_prime(p: int | Prime) -> Prime:
    return p if isinstance(p, Prime) else Prime(p)


@dataclass(frozen=True)
class FieldElt:
    """A residue class in Z_p, stored as its representative in [0, p-1]."""

    value: int
    modulus: Prime

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.p:
            raise ValueError(
                f"value {self.value} out of range for modulus {self.modulus.p}"
            )

    def _coerce(self, other: FieldElt | int) -> int:
        if isinstance(other, FieldElt):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    f"Cannot combine Z_{self.modulus.p} and Z_{other.modulus.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.modulus.p
        raise TypeError(f"Cannot combine FieldElt with {type(other).__name__}")

    def _make(self, value: int) -> FieldElt:
        return FieldElt(value % self.modulus.p, self.modulus)

    def __add__(self, other: FieldElt | int) -> FieldElt:
        return self._make(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: FieldElt | int) -> FieldElt:
        return self._make(self.value - self._coerce(other))

    def __rsub__(self, other: int) -> FieldElt:
        return self._make(self._coerce(other) - self.value)

    def __mul__(self, other: FieldElt | int) -> FieldElt:
        return self._make(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> FieldElt:
        return self._make(-self.value)

    def inverse(self) -> FieldElt:
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse in Z_p")
        return self._make(pow(self.value, -1, self.modulus.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus.p})"


class _PascalTable:
    """Rows of Pascal's triangle reduced mod p, grown on demand.

    One table per modulus; growth is guarded so concurrent sweeps can share it.
    """

    def __init__(self, p: int) -> None:
        self._p = p
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    nxt = [1] * (len(prev) + 1)
                    for k in range(1, len(prev)):
                        nxt[k] = (prev[k - 1] + prev[k]) % self._p
                    self._rows.append(nxt)
        return self._rows[n]


_tables: dict[int, _PascalTable] = {}
_tables_lock = threading.Lock()


def _table(p: int) -> _PascalTable:
    with _tables_lock:
        table = _tables.get(p)
        if table is None:
            table = _PascalTable(p)
            _tables[p] = table
        return table


def binom_int(n: int, k: int, p: int) -> int:
    """C(n, k) mod p as a plain int; 0 when k > n or k < 0."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return _table(p).row(n)[k]


def binom_mod_p(n: int, k: int, p: int | Prime) -> FieldElt:
    """Binomial coefficient C(n, k) reduced mod p."""
    prime = as_prime(p)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return FieldElt(binom_int(n, k, prime.p), prime)


def vandermonde_check(r: int, s: int, k: int, p: int | Prime) -> bool:
    """C(r+s, k) == sum_i C(r, i) C(s, k-i) mod p."""
    prime = as_prime(p)
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    if not 0 <= k <= r + s:
        raise ValueError(f"k must satisfy 0 <= k <= r+s, got k={k}, r+s={r + s}")
    lhs = binom_int(r + s, k, prime.p)
    rhs = sum(
        binom_int(r, i, prime.p) * binom_int(s, k - i, prime.p)
        for i in range(k + 1)
    ) % prime.p
    return lhs == rhs
