"""Faces of the permutahedron P_n as ordered partitions of {1..n}.

A face A_1|...|A_k has dimension n - k; the top cell is the one-block
partition and the vertices are the permutations. Chains have Z_2
coefficients and are stored as frozensets; addition is symmetric difference.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

MAX_N = 7

Block = tuple[int, ...]


@dataclass(frozen=True, order=True)
class OrderedPartition:
    """Blocks of an ordered set partition, each block sorted."""

    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks or any(not b for b in blocks):
            raise ValueError(f"blocks must be nonempty, got {blocks}")
        elems = [x for b in blocks for x in b]
        if sorted(elems) != list(range(1, len(elems) + 1)):
            raise ValueError(f"blocks must partition 1..n, got {blocks}")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def dimension(self) -> int:
        return self.n - len(self.blocks)

    def is_vertex(self) -> bool:
        return self.dimension == 0

    def block_index(self) -> dict[int, int]:
        """Element -> index (1-based) of the block containing it."""
        return {x: k for k, b in enumerate(self.blocks, start=1) for x in b}

    def to_list(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        return "|".join("".join(str(x) for x in b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> OrderedPartition:
        """"13|2" -> ((1, 3), (2,)). Single-digit labels only."""
        try:
            return cls(tuple(tuple(int(c) for c in part) for part in text.split("|")))
        except ValueError as e:
            raise ValueError(f"cannot parse face '{text}': {e}") from None

    @classmethod
    def top(cls, n: int) -> OrderedPartition:
        return cls((tuple(range(1, n + 1)),))


Chain = frozenset[OrderedPartition]


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")


def _ordered_partitions(elems: Block) -> Iterator[tuple[Block, ...]]:
    if not elems:
        yield ()
        return
    for size in range(1, len(elems) + 1):
        for first in itertools.combinations(elems, size):
            rest = tuple(x for x in elems if x not in first)
            for tail in _ordered_partitions(rest):
                yield (first, *tail)


def enumerate_faces(n: int) -> list[OrderedPartition]:
    """All faces of P_n, sorted by dimension (top first) then lexicographically."""
    _check_n(n)
    faces = [OrderedPartition(bs) for bs in _ordered_partitions(tuple(range(1, n + 1)))]
    return sorted(faces, key=lambda f: (-f.dimension, f.blocks))


def face_counts(n: int) -> dict[int, int]:
    """Number of faces of P_n in each dimension."""
    counts = Counter(f.dimension for f in enumerate_faces(n))
    return {d: counts[d] for d in sorted(counts)}


def boundary(face: OrderedPartition) -> Chain:
    """Sum over every split of one block A_t into an ordered pair B|C."""
    out: set[OrderedPartition] = set()
    for t, block in enumerate(face.blocks):
        for size in range(1, len(block)):
            for left in itertools.combinations(block, size):
                right = tuple(x for x in block if x not in left)
                split = face.blocks[:t] + (left, right) + face.blocks[t + 1:]
                out ^= {OrderedPartition(split)}
    return frozenset(out)


def boundary_chain(chain: Iterable[OrderedPartition]) -> Chain:
    out: set[OrderedPartition] = set()
    for face in chain:
        out ^= boundary(face)
    return frozenset(out)


def relabel(face: OrderedPartition, labels: Block) -> tuple[Block, ...]:
    """Blocks of ``face`` with k replaced by labels[k-1]."""
    return tuple(tuple(sorted(labels[x - 1] for x in b)) for b in face.blocks)


def standardize(block: Block) -> tuple[int, Block]:
    """The order isomorphism block -> {1..|block|}: returns (size, sorted block)."""
    labels = tuple(sorted(block))
    return len(labels), labels
