"""Tests for step matrices, shifts and derived matrices."""

import itertools
import math

import pytest

from hopf_ainf.polytope.matrices import (
    IntMatrix,
    derived_matrices,
    down_shift,
    is_step_matrix,
    permutation_of,
    right_shift,
    step_matrices,
    step_matrix_from_permutation,
)


def M(*rows):
    return IntMatrix(tuple(rows))


def brute_step_matrices(n):
    """Every q×p grid with q + p = n + 1 holding 1..n that passes is_step_matrix."""
    found = set()
    for q in range(1, n + 1):
        p = n + 1 - q
        for cells in itertools.permutations(range(q * p), n):
            grid = [[0] * p for _ in range(q)]
            for value, cell in enumerate(cells, start=1):
                grid[cell // p][cell % p] = value
            m = IntMatrix(tuple(tuple(r) for r in grid))
            if is_step_matrix(m):
                found.add(m)
    return found


class TestIntMatrix:
    def test_shape_and_lines(self):
        m = M((1, 3), (2, 0))
        assert (m.q, m.p, m.n) == (2, 2, 3)
        assert m.row(0) == (1, 3)
        assert m.row(1) == (2,)
        assert m.col(1) == (3,)
        assert m.position(2) == (1, 0)
        assert str(m) == "1 3\n2 0"
        assert m.to_list() == [[1, 3], [2, 0]]

    def test_missing_entry(self):
        with pytest.raises(ValueError, match="not an entry"):
            M((1, 2)).position(3)

    @pytest.mark.parametrize("rows,message", [
        ((), "at least one row"),
        (((1, 2), (3,)), "equal length"),
        (((1, 1),), "repeated"),
        (((1, -2),), "nonnegative"),
    ])
    def test_invalid(self, rows, message):
        with pytest.raises(ValueError, match=message):
            IntMatrix(rows)


class TestStepMatrices:
    def test_from_permutation(self):
        assert step_matrix_from_permutation((1, 2, 3)) == M((1, 2, 3))
        assert step_matrix_from_permutation((3, 2, 1)) == M((1,), (2,), (3,))
        assert step_matrix_from_permutation((2, 1, 3)) == M((1, 3), (2, 0))
        assert step_matrix_from_permutation((1, 3, 2)) == M((0, 2), (1, 3))

    def test_shape_counts_descents(self):
        e = step_matrix_from_permutation((3, 1, 4, 2, 5))
        assert (e.q, e.p) == (3, 3)

    def test_not_a_permutation(self):
        with pytest.raises(ValueError, match="not a permutation"):
            step_matrix_from_permutation((1, 3))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_one_per_permutation(self, n):
        mats = step_matrices(n)
        assert len(mats) == math.factorial(n)
        assert len(set(mats)) == len(mats)
        assert all(is_step_matrix(m) for m in mats)
        assert [permutation_of(m) for m in mats] == list(itertools.permutations(range(1, n + 1)))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_staircase_is_the_only_shape(self, n):
        assert brute_step_matrices(n) == set(step_matrices(n))

    def test_rejects_non_step(self):
        assert not is_step_matrix(M((2, 1)))
        assert not is_step_matrix(M((1, 0), (0, 2)))
        assert not is_step_matrix(M((1, 3), (0, 2)))
        with pytest.raises(ValueError, match="not a step matrix"):
            permutation_of(M((2, 1)))

    @pytest.mark.parametrize("n", [0, 8])
    def test_out_of_range(self, n):
        with pytest.raises(ValueError, match="n must be in 1..7"):
            step_matrices(n)


class TestShifts:
    def test_down_shift_moves(self):
        assert down_shift(M((1, 3), (2, 0)), 0, {3}) == M((1, 0), (2, 3))

    def test_down_shift_guard_blocks(self):
        e = M((1, 3), (2, 0))
        # max(row 1) = 2 is not below min S = 1
        assert down_shift(e, 0, {1}) == e

    def test_down_shift_empty_row_below(self):
        m = M((1, 2), (0, 0))
        assert down_shift(m, 0, {2}) == M((1, 0), (0, 2))

    def test_down_shift_last_row_unchanged(self):
        m = M((0, 1), (2, 3))
        assert down_shift(m, 1, {2}) == m

    def test_right_shift_moves(self):
        assert right_shift(M((1, 2), (3, 0)), 0, {3}) == M((1, 2), (0, 3))

    def test_right_shift_guard_blocks(self):
        e = M((1, 2), (3, 0))
        assert right_shift(e, 0, {1}) == e

    def test_empty_subset_is_identity(self):
        e = M((1, 3), (2, 0))
        assert down_shift(e, 0, ()) is e
        assert right_shift(e, 0, ()) is e

    def test_subset_must_be_in_line(self):
        with pytest.raises(ValueError, match="not a subset of row 0"):
            down_shift(M((1, 3), (2, 0)), 0, {2})

    def test_subset_must_be_proper(self):
        with pytest.raises(ValueError, match="must be proper"):
            right_shift(M((1, 3), (2, 0)), 0, {1, 2})


class TestDerived:
    def test_contains_the_step_matrix(self):
        for e in step_matrices(4):
            assert e in derived_matrices(e)

    def test_three_element_cases(self):
        assert derived_matrices(M((1, 3), (2, 0))) == {M((1, 3), (2, 0)), M((1, 0), (2, 3))}
        assert derived_matrices(M((1, 2), (3, 0))) == {M((1, 2), (3, 0)), M((1, 2), (0, 3))}
        assert derived_matrices(M((0, 1), (2, 3))) == {M((0, 1), (2, 3))}

    def test_row_and_column_matrices_have_no_derivatives(self):
        assert derived_matrices(M((1, 2, 3, 4))) == {M((1, 2, 3, 4))}
        assert derived_matrices(M((1,), (2,), (3,))) == {M((1,), (2,), (3,))}

    def test_entries_preserved(self):
        for e in step_matrices(4):
            for m in derived_matrices(e):
                assert sorted(x for r in m.rows for x in r if x) == [1, 2, 3, 4]
                assert (m.q, m.p) == (e.q, e.p)
