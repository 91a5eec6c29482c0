"""Sweep runner: evaluates a residual over many basis inputs."""

from __future__ import annotations

import logging
import os
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

from hopf_ainf.algebra.tensor import Element, Word
from hopf_ainf.checks.types import RelationReport

logger = logging.getLogger(__name__)

Residual = Callable[[Word], Element]


def default_workers() -> int:
    """Worker count from HOPF_AINF_WORKERS, else 1 (inline)."""
    raw = os.environ.get("HOPF_AINF_WORKERS")
    if not raw:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"HOPF_AINF_WORKERS must be an integer, got '{raw}'")
    if workers < 1:
        raise ValueError(f"HOPF_AINF_WORKERS must be >= 1, got {workers}")
    return workers


class SweepRunner:
    """Partitions inputs across threads and merges results in input order.

    The merged report is the same for any worker count.
    """

    def __init__(self, workers: int | None = None) -> None:
        self.workers = default_workers() if workers is None else workers
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    def run(
        self, relation_id: str, inputs: Sequence[Word], residual: Residual,
    ) -> RelationReport:
        start = time.monotonic()
        if self.workers == 1 or len(inputs) < 2:
            results = [residual(w) for w in inputs]
        else:
            chunk = max(1, len(inputs) // (self.workers * 4))
            with ThreadPoolExecutor(
                max_workers=self.workers, thread_name_prefix="sweep",
            ) as pool:
                results = list(pool.map(residual, inputs, chunksize=chunk))

        report = RelationReport(relation_id)
        for word, res in zip(inputs, results):
            report.record(word, res)

        logger.debug(
            "%s: %d inputs in %.3fs", relation_id, len(inputs),
            time.monotonic() - start,
        )
        if report.passed:
            logger.info("%s: PASS (%d inputs)", relation_id, report.inputs_checked)
        else:
            logger.warning(
                "%s: FAIL on %d of %d inputs, first witness %s -> %r",
                relation_id, report.failures, report.inputs_checked,
                report.witnesses[0].input, report.witnesses[0].residual,
            )
        return report
