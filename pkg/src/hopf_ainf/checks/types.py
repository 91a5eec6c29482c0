"""Typed verification results."""

from __future__ import annotations

from dataclasses import dataclass, field

from hopf_ainf.algebra.tensor import Element, Word

SCHEMA_VERSION = "1"

# Reports keep at most this many witnesses; ``failures`` still counts all.
MAX_WITNESSES = 10


@dataclass(frozen=True)
class Witness:
    """A failing input and the nonzero residual it produced."""

    input: Word
    residual: Element

    def to_dict(self) -> dict:
        return {
            "input": [list(b) for b in self.input],
            "residual": self.residual.to_dict(),
        }


@dataclass
class RelationReport:
    """Outcome of checking one identity over a sweep of basis inputs.

    Passes iff no witnesses were recorded.
    """

    relation_id: str
    inputs_checked: int = 0
    max_residual_terms: int = 0
    failures: int = 0
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def record(self, word: Word, residual: Element) -> None:
        """Account for one evaluated input."""
        self.inputs_checked += 1
        if residual.is_zero():
            return
        self.failures += 1
        self.max_residual_terms = max(self.max_residual_terms, len(residual))
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(Witness(word, residual))

    def to_dict(self) -> dict:
        return {
            "relation_id": self.relation_id,
            "inputs_checked": self.inputs_checked,
            "pass": self.passed,
            "max_residual_terms": self.max_residual_terms,
            "failures": self.failures,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


@dataclass
class Certificate:
    """Aggregated pass/fail over every relation checked for one structure."""

    subject: dict
    max_j: int
    reports: list[RelationReport] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed_relations(self) -> list[str]:
        return [r.relation_id for r in self.reports if not r.passed]

    def report(self, relation_id: str) -> RelationReport:
        for r in self.reports:
            if r.relation_id == relation_id:
                return r
        raise ValueError(f"No report named '{relation_id}'")

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "subject": self.subject,
            "max_j": self.max_j,
            "pass": self.passed,
            "inputs_checked": sum(r.inputs_checked for r in self.reports),
            "reports": [r.to_dict() for r in self.reports],
            **({"notes": self.notes} if self.notes else {}),
        }
