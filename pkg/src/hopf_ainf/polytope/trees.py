"""Planar trees, the projection ϑ₀: P_n -> K_{n+1}, and the diagonal Δ_K.

A face A_1|...|A_k of P_n is a planar leveled tree with n+1 leaves: the gap
x between leaves x and x+1 sits on level k' where x ∈ A_{k'}, higher levels
closer to the root. Two gaps belong to the same node when they share a level
and every gap between them is on a lower level. ϑ₀ forgets the levels; the
face degenerates when some level holds more than one node.
"""

from __future__ import annotations

import enum
import logging
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Union

from hopf_ainf.polytope.diagonal import diagonal_P, diagonal_top
from hopf_ainf.polytope.faces import MAX_N, OrderedPartition, enumerate_faces

logger = logging.getLogger(__name__)

# A leaf is its label; an internal node is the tuple of its children.
Node = Union[int, tuple["Node", ...]]


class Projection(enum.Enum):
    DEGENERATE = "degenerate"


DEGENERATE = Projection.DEGENERATE


@dataclass(frozen=True)
class PlanarTree:
    """A planar rooted tree with leaves labeled 1..n+1 from left to right.

    ``levels`` lists the level of each internal node in preorder, or is None
    once levels have been forgotten.
    """

    root: Node
    levels: tuple[int, ...] | None = None

    @property
    def leaf_count(self) -> int:
        return _count(self.root)[0]

    @property
    def node_count(self) -> int:
        return _count(self.root)[1]

    @property
    def dimension(self) -> int:
        """Dimension of the face of K_{leaves} it indexes: leaves - 1 - nodes."""
        return self.leaf_count - 1 - self.node_count

    def forget_levels(self) -> PlanarTree:
        return PlanarTree(self.root)

    def to_word(self) -> str:
        """Parenthesized word with the root's brackets dropped, e.g. "((12)3)4"."""
        if isinstance(self.root, int):
            return str(self.root)
        return "".join(_word(c) for c in self.root)

    def to_nested(self) -> int | list:
        return _nested(self.root)

    def __str__(self) -> str:
        return self.to_word()

    @classmethod
    def parse(cls, word: str) -> PlanarTree:
        """Inverse of ``to_word`` (single-digit leaf labels)."""
        stack: list[list[Node]] = [[]]
        for ch in word:
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if len(stack) < 2:
                    raise ValueError(f"unbalanced parentheses in '{word}'")
                children = stack.pop()
                if len(children) < 2:
                    raise ValueError(f"internal node with fewer than 2 children in '{word}'")
                stack[-1].append(tuple(children))
            elif ch.isdigit():
                stack[-1].append(int(ch))
            else:
                raise ValueError(f"unexpected character '{ch}' in '{word}'")
        if len(stack) != 1 or not stack[0]:
            raise ValueError(f"unbalanced parentheses in '{word}'")
        top = stack[0]
        return cls(top[0] if len(top) == 1 else tuple(top))


def _count(node: Node) -> tuple[int, int]:
    if isinstance(node, int):
        return 1, 0
    leaves = nodes = 0
    for c in node:
        lf, nd = _count(c)
        leaves += lf
        nodes += nd
    return leaves, nodes + 1


def _word(node: Node) -> str:
    if isinstance(node, int):
        return str(node)
    return "(" + "".join(_word(c) for c in node) + ")"


def _nested(node: Node) -> int | list:
    if isinstance(node, int):
        return node
    return [_nested(c) for c in node]


def leveled_tree(face: OrderedPartition) -> PlanarTree:
    """The planar leveled tree of a face of P_n."""
    level = face.block_index()
    levels: list[int] = []

    def build(lo: int, hi: int) -> Node:
        if lo == hi:
            return lo
        gaps = range(lo, hi)
        top = max(level[x] for x in gaps)
        cuts = [x for x in gaps if level[x] == top]
        levels.append(top)
        bounds = [lo - 1, *cuts, hi]
        return tuple(build(a + 1, b) for a, b in zip(bounds, bounds[1:]))

    root = build(1, face.n + 1)
    return PlanarTree(root, tuple(levels))


def tonks_projection(face: OrderedPartition) -> PlanarTree | Projection:
    """ϑ₀(face), or DEGENERATE when forgetting levels drops the dimension."""
    tree = leveled_tree(face)
    if tree.node_count > len(face.blocks):
        return DEGENERATE
    return tree.forget_levels()


TreePair = tuple[PlanarTree, PlanarTree]


def project_pairs(pairs: Iterable[tuple[OrderedPartition, OrderedPartition]]) -> frozenset[TreePair]:
    """ϑ₀ ⊗ ϑ₀ over Z_2, dropping pairs with a degenerate factor."""
    out: set[TreePair] = set()
    for a, b in pairs:
        ta, tb = tonks_projection(a), tonks_projection(b)
        if ta is DEGENERATE or tb is DEGENERATE:
            continue
        out ^= {(ta, tb)}
    return frozenset(out)


def diagonal_K(n: int) -> frozenset[TreePair]:
    """Δ_K on the top cell of K_{n+1}: (ϑ₀ ⊗ ϑ₀) Δ_P(top of P_n)."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    return project_pairs(diagonal_top(n))


def degenerate_terms(n: int) -> list[tuple[OrderedPartition, OrderedPartition]]:
    """Terms of Δ_P(top of P_n) killed by ϑ₀ ⊗ ϑ₀."""
    return sorted(
        (a, b) for a, b in diagonal_top(n)
        if tonks_projection(a) is DEGENERATE or tonks_projection(b) is DEGENERATE
    )


def associahedron_faces(n: int) -> list[PlanarTree]:
    """Faces of K_{n+1}, obtained as the ϑ₀-images of the faces of P_n."""
    images = {tonks_projection(f) for f in enumerate_faces(n)}
    images.discard(DEGENERATE)
    return sorted(images, key=lambda t: (-t.dimension, t.to_word()))


def fiber_inconsistencies(n: int) -> list[PlanarTree]:
    """Trees whose ϑ₀-preimages in P_n give different (ϑ₀ ⊗ ϑ₀)Δ_P values."""
    fibers: dict[PlanarTree, set[frozenset[TreePair]]] = defaultdict(set)
    for face in enumerate_faces(n):
        tree = tonks_projection(face)
        if tree is DEGENERATE:
            continue
        fibers[tree].add(project_pairs(diagonal_P(face)))
    bad = sorted((t for t, values in fibers.items() if len(values) > 1), key=str)
    if bad:
        logger.warning("Δ_K not well defined on %d fibers of P_%d", len(bad), n)
    return bad


def format_tree_pair(pair: TreePair) -> str:
    return f"{pair[0]}⊗{pair[1]}"
