"""
Sweep machinery shared by every claim.

A sweep maps a per-poset checker over canonical forms (sorted, so output
order is fixed), then merges the outcomes into one report. Checkers are
module-level functions of a single ``bytes`` argument so they can run in
worker processes.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import structlog

from indeco import __version__
from indeco.config import settings
from indeco.core.batch import BatchProcessor
from indeco.core.enumeration import all_canonical_forms
from indeco.exceptions import SizeBound
from indeco.infrastructure.logging import add_context, clear_context
from indeco.schemas.report import ClaimId, VerificationReport, Violation

logger = structlog.get_logger(__name__)

MIN_MAX_N = 3


@dataclass(slots=True)
class PosetOutcome:
    """What a checker found on one host poset."""

    instances: int = 0
    violations: list[Violation] = field(default_factory=list)
    observations: list[str] = field(default_factory=list)
    extremes: dict[int, int] = field(default_factory=dict)
    accepted: list[bytes] = field(default_factory=list)


@dataclass(slots=True)
class SweepResult:
    """Merged outcomes of a sweep, in host order."""

    instances: int = 0
    violations: list[Violation] = field(default_factory=list)
    observations: list[str] = field(default_factory=list)
    extremes: dict[int, int] = field(default_factory=dict)
    accepted: set[bytes] = field(default_factory=set)
    elapsed_ms: int = 0

    def absorb(self, outcome: PosetOutcome) -> None:
        self.instances += outcome.instances
        self.violations.extend(outcome.violations)
        self.observations.extend(outcome.observations)
        for key, value in outcome.extremes.items():
            self.extremes[key] = max(value, self.extremes.get(key, value))
        self.accepted.update(outcome.accepted)


def check_max_n(max_n: int, low: int = MIN_MAX_N) -> None:
    """
    Raises:
        SizeBound: Unless low <= max_n <= the configured max_n
    """
    if not low <= max_n <= settings.max_n:
        raise SizeBound("max_n", max_n, low, settings.max_n)


def hosts(min_n: int, max_n: int, jobs: int = 1) -> list[bytes]:
    """Canonical forms of every poset with min_n..max_n elements, level by level."""
    forms: list[bytes] = []
    for n in range(max(1, min_n), max_n + 1):
        forms.extend(all_canonical_forms(n, jobs=jobs))
    return forms


def sweep(
    claim: ClaimId,
    forms: Sequence[bytes],
    checker: Callable[[bytes], PosetOutcome],
    jobs: int = 1,
) -> SweepResult:
    """Run ``checker`` over ``forms`` and merge in input order."""
    started = time.perf_counter()
    batch = BatchProcessor(checker, jobs=jobs, name=claim.value).process(forms)

    merged = SweepResult()
    failures = dict(batch.errors)
    for index, outcome in enumerate(batch.results):
        if outcome is not None:
            merged.absorb(outcome)
        else:
            merged.violations.append(
                Violation(form=forms[index].hex(), reason=f"error: {failures[index]}")
            )
    merged.elapsed_ms = round((time.perf_counter() - started) * 1000)
    return merged


def build_report(
    claim: ClaimId,
    max_n: int,
    result: SweepResult,
    observations: list[str] | None = None,
) -> VerificationReport:
    """Package a sweep as a report and log its summary."""
    report = VerificationReport(
        claim=claim,
        max_n=max_n,
        instances_checked=result.instances,
        violations=result.violations,
        elapsed_ms=result.elapsed_ms,
        version=__version__,
        observations=observations if observations is not None else result.observations,
    )
    logger.info(
        "Verification complete",
        claim=claim.value,
        max_n=max_n,
        instances=report.instances_checked,
        violations=len(report.violations),
        elapsed_ms=report.elapsed_ms,
    )
    return report


def run_claim(
    claim: ClaimId,
    max_n: int,
    forms: Sequence[bytes],
    checker: Callable[[bytes], PosetOutcome],
    jobs: int = 1,
) -> tuple[SweepResult, VerificationReport]:
    """Sweep and report with run-level log context bound."""
    add_context(claim=claim.value, max_n=max_n)
    try:
        result = sweep(claim, forms, checker, jobs=jobs)
        return result, build_report(claim, max_n, result)
    finally:
        clear_context()
