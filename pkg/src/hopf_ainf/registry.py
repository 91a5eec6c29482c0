"""Structure registry: a thread-safe cache of structures keyed by (p, m)."""

from __future__ import annotations

import threading

from hopf_ainf.algebra.field import as_prime
from hopf_ainf.hopf.structure import HopfAinfStructure, build_structure


class StructureRegistry:
    """Thread-safe registry of built structures.

    Each structure memoizes its maps, so repeated requests for the same
    (p, m) reuse earlier work.
    """

    def __init__(self) -> None:
        self._structures: dict[tuple[int, int], HopfAinfStructure] = {}
        self._lock = threading.Lock()

    def get(self, p: int, m: int = 1) -> HopfAinfStructure:
        """Get the structure for (p, m), building it on first use.

        Raises:
            ValueError: If p is not an odd prime or m < 1.
        """
        key = (as_prime(p).p, m)
        with self._lock:
            structure = self._structures.get(key)
        if structure is not None:
            return structure

        # Build outside the lock
        structure = build_structure(p, m)

        with self._lock:
            # Another thread may have built it meanwhile; keep the first
            return self._structures.setdefault(key, structure)

    def list(self) -> list[HopfAinfStructure]:
        with self._lock:
            return [self._structures[k] for k in sorted(self._structures)]

    def drop(self, p: int, m: int = 1) -> None:
        with self._lock:
            if self._structures.pop((p, m), None) is None:
                raise ValueError(f"No structure for p={p}, m={m}")

    def clear(self) -> None:
        with self._lock:
            self._structures.clear()
