"""Tests for StructureRegistry."""

from concurrent.futures import ThreadPoolExecutor

import pytest

from hopf_ainf.registry import StructureRegistry


class TestStructureRegistry:
    def test_get_builds_once(self):
        reg = StructureRegistry()
        s = reg.get(3)
        assert reg.get(3) is s
        assert reg.get(3, 1) is s

    def test_keyed_by_p_and_m(self):
        reg = StructureRegistry()
        assert reg.get(3, 1) is not reg.get(3, 3)
        assert reg.get(5).p == 5

    def test_list_sorted(self):
        reg = StructureRegistry()
        reg.get(5)
        reg.get(3, 3)
        reg.get(3)
        assert [(s.p, s.params.m) for s in reg.list()] == [(3, 1), (3, 3), (5, 1)]

    def test_rejects_bad_prime(self):
        with pytest.raises(ValueError, match="odd prime"):
            StructureRegistry().get(9)

    def test_rejects_bad_m(self):
        with pytest.raises(ValueError, match="m must be a positive integer"):
            StructureRegistry().get(3, 0)

    def test_drop(self):
        reg = StructureRegistry()
        reg.get(3)
        reg.drop(3)
        assert reg.list() == []
        with pytest.raises(ValueError, match="No structure for p=3, m=1"):
            reg.drop(3)

    def test_clear(self):
        reg = StructureRegistry()
        reg.get(3)
        reg.get(5)
        reg.clear()
        assert reg.list() == []

    def test_concurrent_get_returns_one_structure(self):
        reg = StructureRegistry()
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda _: reg.get(7), range(32)))
        assert all(s is results[0] for s in results)
        assert len(reg.list()) == 1
