"""The diagonal Δ_P on cellular chains of the permutahedra, over Z_2.

On the top cell of P_n the diagonal is the sum of the complementary pairs
read off the derived matrices of every step matrix; on a general face it is
the blockwise product of the diagonals of its blocks.
"""

from __future__ import annotations

import functools
import itertools
import logging
from collections.abc import Iterable

from hopf_ainf.polytope.faces import (
    Chain,
    OrderedPartition,
    boundary,
    enumerate_faces,
    relabel,
    standardize,
)
from hopf_ainf.polytope.matrices import IntMatrix, derived_matrices, step_matrices

logger = logging.getLogger(__name__)

Pair = tuple[OrderedPartition, OrderedPartition]
DiagonalElement = frozenset[Pair]


def complementary_pair(m: IntMatrix) -> Pair:
    """(A_1|...|A_p, B_q|...|B_1): A_j the entries of column j, B_i of row i."""
    a = OrderedPartition(tuple(m.col(j) for j in range(m.p)))
    b = OrderedPartition(tuple(m.row(i) for i in reversed(range(m.q))))
    return a, b


def complementary_pairs(n: int, p: int | None = None, q: int | None = None) -> DiagonalElement:
    """The (p, q)-complementary pairs of the top cell of P_n.

    With p and q both omitted, every shape with p + q = n + 1 is included.
    """
    if p is not None and q is not None and p + q != n + 1:
        raise ValueError(f"p + q must equal n + 1 = {n + 1}, got {p} + {q}")
    out: set[Pair] = set()
    for e in step_matrices(n):
        if (p is not None and e.p != p) or (q is not None and e.q != q):
            continue
        for m in derived_matrices(e):
            out.add(complementary_pair(m))
    return frozenset(out)


@functools.lru_cache(maxsize=None)
def diagonal_top(n: int) -> DiagonalElement:
    """Δ_P of the top cell of P_n."""
    terms = complementary_pairs(n)
    logger.debug("Δ_P(top of P_%d): %d terms", n, len(terms))
    return terms


def diagonal_P(face: OrderedPartition) -> DiagonalElement:
    """Δ_P(u_1|...|u_r) = Δ_P(u_1)|...|Δ_P(u_r), each block relabeled from 1..|u_t|."""
    per_block = []
    for block in face.blocks:
        size, labels = standardize(block)
        per_block.append([
            (relabel(a, labels), relabel(b, labels))
            for a, b in sorted(diagonal_top(size))
        ])
    out: set[Pair] = set()
    for choice in itertools.product(*per_block):
        left = OrderedPartition(tuple(blk for a, _ in choice for blk in a))
        right = OrderedPartition(tuple(blk for _, b in choice for blk in b))
        out ^= {(left, right)}
    return frozenset(out)


def diagonal_chain(chain: Iterable[OrderedPartition]) -> DiagonalElement:
    out: set[Pair] = set()
    for face in chain:
        out ^= diagonal_P(face)
    return frozenset(out)


def tensor_boundary(element: Iterable[Pair]) -> DiagonalElement:
    """(∂ ⊗ 1 + 1 ⊗ ∂) over Z_2."""
    out: set[Pair] = set()
    for a, b in element:
        for da in boundary(a):
            out ^= {(da, b)}
        for db in boundary(b):
            out ^= {(a, db)}
    return frozenset(out)


def chain_map_defect(face: OrderedPartition) -> DiagonalElement:
    """(∂⊗1 + 1⊗∂)Δ_P(face) + Δ_P(∂ face); empty iff Δ_P commutes with ∂ there."""
    return tensor_boundary(diagonal_P(face)) ^ diagonal_chain(boundary(face))


def is_chain_map(n: int) -> bool:
    """Δ_P commutes with ∂ on every face of P_n."""
    for face in enumerate_faces(n):
        defect = chain_map_defect(face)
        if defect:
            logger.warning("Δ_P fails to commute with ∂ at %s (%d terms)", face, len(defect))
            return False
    return True


def dimension_balanced(face: OrderedPartition) -> bool:
    return all(a.dimension + b.dimension == face.dimension for a, b in diagonal_P(face))


def sorted_pairs(element: Iterable[Pair]) -> list[Pair]:
    """Canonical order: by left face, then right face."""
    return sorted(element)


def format_pair(pair: Pair) -> str:
    return f"{pair[0]}⊗{pair[1]}"
