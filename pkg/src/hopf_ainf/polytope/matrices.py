"""Step matrices, the shift operations and derived matrices.

Matrices are indexed from 0 here: row 0 is the top row and column 0 the
leftmost column. A zero entry is an empty cell.

A step matrix is a q×p staircase running from the lower-left corner to the
upper-right corner; reading it along the path gives a permutation of 1..n
(n = p + q - 1) whose ascents are the rightward steps and whose descents are
the upward steps.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

logger = logging.getLogger(__name__)

MAX_N = 7


@dataclass(frozen=True, order=True)
class IntMatrix:
    """A q×p matrix with entries in {0} ∪ {1..n}, each nonzero value at most once."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("rows must have equal length")
        values = [x for r in rows for x in r if x]
        if any(x < 0 for r in rows for x in r):
            raise ValueError("entries must be nonnegative")
        if len(values) != len(set(values)):
            raise ValueError(f"repeated nonzero entry in {rows}")

    @property
    def q(self) -> int:
        return len(self.rows)

    @property
    def p(self) -> int:
        return len(self.rows[0])

    @property
    def n(self) -> int:
        return sum(1 for r in self.rows for x in r if x)

    def row(self, i: int) -> tuple[int, ...]:
        """Nonzero entries of row i, left to right."""
        return tuple(x for x in self.rows[i] if x)

    def col(self, j: int) -> tuple[int, ...]:
        """Nonzero entries of column j, top to bottom."""
        return tuple(r[j] for r in self.rows if r[j])

    def position(self, x: int) -> tuple[int, int]:
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                if v == x:
                    return i, j
        raise ValueError(f"{x} is not an entry of the matrix")

    def moved(self, moves: dict[tuple[int, int], tuple[int, int]]) -> IntMatrix:
        """Move entries from source cells to (empty) target cells."""
        grid = [list(r) for r in self.rows]
        values = {src: grid[src[0]][src[1]] for src in moves}
        for (i, j) in moves:
            grid[i][j] = 0
        for src, (i, j) in moves.items():
            grid[i][j] = values[src]
        return IntMatrix(tuple(tuple(r) for r in grid))

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def _increasing_contiguous(line: tuple[int, ...]) -> bool:
    idx = [k for k, x in enumerate(line) if x]
    if not idx:
        return True
    if idx[-1] - idx[0] + 1 != len(idx):
        return False
    vals = [line[k] for k in idx]
    return all(a < b for a, b in zip(vals, vals[1:]))


def is_step_matrix(m: IntMatrix) -> bool:
    """Entries are exactly 1..n; every row and column is an increasing
    contiguous block; every diagonal parallel to the main one holds exactly
    one entry."""
    values = sorted(x for r in m.rows for x in r if x)
    if values != list(range(1, len(values) + 1)):
        return False
    for i in range(m.q):
        if not _increasing_contiguous(m.rows[i]):
            return False
    for j in range(m.p):
        if not _increasing_contiguous(tuple(r[j] for r in m.rows)):
            return False
    for d in range(-(m.q - 1), m.p):
        hits = sum(
            1 for i in range(m.q) for j in range(m.p) if j - i == d and m.rows[i][j]
        )
        if hits != 1:
            return False
    return True


def step_matrix_from_permutation(perm: Iterable[int]) -> IntMatrix:
    """Lay ``perm`` along the staircase: ascent = step right, descent = step up."""
    w = tuple(perm)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    descents = sum(1 for a, b in zip(w, w[1:]) if a > b)
    q, p = descents + 1, len(w) - descents
    grid = [[0] * p for _ in range(q)]
    r, c = q - 1, 0
    grid[r][c] = w[0]
    for a, b in zip(w, w[1:]):
        if b > a:
            c += 1
        else:
            r -= 1
        grid[r][c] = b
    return IntMatrix(tuple(tuple(row) for row in grid))


def permutation_of(m: IntMatrix) -> tuple[int, ...]:
    """Inverse of ``step_matrix_from_permutation``."""
    if not is_step_matrix(m):
        raise ValueError("not a step matrix")
    r, c = m.q - 1, 0
    out = [m.rows[r][c]]
    while (r, c) != (0, m.p - 1):
        if c + 1 < m.p and m.rows[r][c + 1]:
            c += 1
        else:
            r -= 1
        out.append(m.rows[r][c])
    return tuple(out)


def step_matrices(n: int) -> list[IntMatrix]:
    """Every step matrix with entries 1..n, one per permutation, in permutation order."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    return [
        step_matrix_from_permutation(w)
        for w in itertools.permutations(range(1, n + 1))
    ]


def _check_subset(subset: Iterable[int], line: tuple[int, ...], what: str) -> frozenset[int]:
    chosen = frozenset(subset)
    if not chosen <= set(line):
        raise ValueError(f"{sorted(chosen)} is not a subset of {what} {list(line)}")
    if chosen and len(chosen) == len(line):
        raise ValueError(f"subset must be proper, got all of {what} {list(line)}")
    return chosen


def down_shift(m: IntMatrix, i: int, subset: Iterable[int]) -> IntMatrix:
    """D_S on row i: move the entries of S one row down when the guard holds.

    With j the column of min S, the guard is max(row i+1) < min S and
    m[i+1][k] = 0 for every k >= j; a zero row has maximum -∞. Otherwise, and
    for S empty or i the last row, the matrix is returned unchanged.
    """
    chosen = _check_subset(subset, m.row(i), f"row {i}")
    if not chosen or i == m.q - 1:
        return m
    low = min(chosen)
    j = m.position(low)[1]
    below = m.rows[i + 1]
    if max(m.row(i + 1), default=0) >= low or any(below[k] for k in range(j, m.p)):
        return m
    return m.moved({m.position(x): (i + 1, m.position(x)[1]) for x in chosen})


def right_shift(m: IntMatrix, j: int, subset: Iterable[int]) -> IntMatrix:
    """R_T on column j: move the entries of T one column right when the guard holds.

    With i the row of min T, the guard is max(col j+1) < min T and
    m[k][j+1] = 0 for every k >= i.
    """
    chosen = _check_subset(subset, m.col(j), f"column {j}")
    if not chosen or j == m.p - 1:
        return m
    low = min(chosen)
    i = m.position(low)[0]
    if max(m.col(j + 1), default=0) >= low or any(
        m.rows[k][j + 1] for k in range(i, m.q)
    ):
        return m
    return m.moved({m.position(x): (m.position(x)[0], j + 1) for x in chosen})


def _proper_subsets(line: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for size in range(len(line)):
        yield from itertools.combinations(line, size)


def derived_matrices(e: IntMatrix) -> frozenset[IntMatrix]:
    """All R_{T_p} ... R_{T_1} D_{S_q} ... D_{S_1} E over every choice of subsets.

    Each S_i (resp. T_j) ranges over the proper subsets of row i (column j)
    of the matrix produced by the earlier shifts. E itself is included.
    """
    frontier = {e}
    for i in range(e.q - 1):
        frontier = {
            down_shift(m, i, s) for m in frontier for s in _proper_subsets(m.row(i))
        }
    for j in range(e.p - 1):
        frontier = {
            right_shift(m, j, t) for m in frontier for t in _proper_subsets(m.col(j))
        }
    logger.debug("%d×%d step matrix: %d derived", e.q, e.p, len(frontier))
    return frozenset(frontier)
