"""Uniform pass/fail report for diagram and validity checks.

A check runs a batch of exact comparisons and either all of them hold or
there is a first failure worth naming.  Reports are plain values: ok flag,
how many comparisons ran, and a JSON-able witness for the first failure.
"""

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Report:
    ok: bool
    checks: int
    witness: Any = None
    notes: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    @staticmethod
    def passed(checks: int, notes: tuple[str, ...] = ()) -> "Report":
        return Report(True, checks, None, notes)

    @staticmethod
    def failed(checks: int, witness: Any, notes: tuple[str, ...] = ()) -> "Report":
        return Report(False, checks, witness, notes)

    @staticmethod
    def merge(parts: list["Report"]) -> "Report":
        """Combine subreports: first failure wins, check counts add."""
        total = sum(p.checks for p in parts)
        notes: tuple[str, ...] = ()
        for p in parts:
            notes = notes + p.notes
        for p in parts:
            if not p.ok:
                return Report(False, total, p.witness, notes)
        return Report(True, total, None, notes)


def jsonable(value: Any) -> Any:
    """Render labels, sign vectors and witnesses as JSON-safe values.

    Tuples become lists recursively; dict keys become strings when they
    are not already; everything else is passed through.
    """
    if isinstance(value, tuple) or isinstance(value, list):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k if isinstance(k, str) else repr(k): jsonable(v) for k, v in value.items()}
    return value
