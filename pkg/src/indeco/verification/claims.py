"""
Exhaustive claim checks.

Every ``verify_*`` function returns a ``VerificationReport``; failures
are recorded, never raised, so a run always completes.
"""

from __future__ import annotations

import time

import structlog

from indeco import __version__
from indeco.catalog.family_x import x_generate
from indeco.catalog.fences import v_cover_make, v_cover_recognize
from indeco.catalog.registry import DEFAULT_X_SIZE, catalog_entries
from indeco.config import settings
from indeco.core.decomposition import is_indecomposable
from indeco.core.enumeration import embeds_pinned, pinned_canonical_form
from indeco.exceptions import SizeBound
from indeco.schemas.report import ClaimId, VerificationReport, Violation
from indeco.verification.checkers import (
    check_adjacent,
    check_cover_size_bound,
    check_growth_by_two,
    check_nonadjacent,
    check_two_antichain_supersets,
    check_two_chain_covers,
    collect_x_members,
    only_full_superset,
)
from indeco.verification.engine import (
    SweepResult,
    build_report,
    check_max_n,
    hosts,
    run_claim,
    sweep,
)

logger = structlog.get_logger(__name__)

DEFAULT_MAX_FENCE = 6


def _jobs(jobs: int | None) -> int:
    return jobs if jobs is not None else settings.jobs


def verify_2chfinal(max_n: int, jobs: int | None = None) -> VerificationReport:
    """
    Upper covers of 2-chains in indecomposable posets with up to max_n
    elements are Figure-2 entries, their duals or family-X members.

    Raises:
        SizeBound: Unless 3 <= max_n <= the configured max_n
    """
    check_max_n(max_n)
    forms = hosts(3, max_n, _jobs(jobs))
    _, report = run_claim(
        ClaimId.TWO_CHAIN_COVERS, max_n, forms, check_two_chain_covers, _jobs(jobs)
    )
    return report


def verify_2aclem(max_n: int, jobs: int | None = None) -> VerificationReport:
    """
    Smallest indecomposable supersets of 2-antichains are pinned fences of
    d(a, b) + 1 elements when d(a, b) > 2, and fences or V-covers otherwise.
    """
    check_max_n(max_n)
    forms = hosts(3, max_n, _jobs(jobs))
    _, report = run_claim(
        ClaimId.TWO_ANTICHAIN_COVERS,
        max_n,
        forms,
        check_two_antichain_supersets,
        _jobs(jobs),
    )
    return report


def verify_corollary(max_n: int, jobs: int | None = None) -> VerificationReport:
    """
    |U| <= max(2|K|, 9) over all posets, 2-chains and upper covers U.

    Observations list the largest |U| seen for each |K|.
    """
    check_max_n(max_n)
    forms = hosts(2, max_n, _jobs(jobs))
    result, report = run_claim(
        ClaimId.COROLLARY, max_n, forms, check_cover_size_bound, _jobs(jobs)
    )
    report.observations = [
        f"|K|={k}: max |U|={size}" for k, size in sorted(result.extremes.items())
    ]
    return report


def verify_st_growth(max_n: int, jobs: int | None = None) -> VerificationReport:
    """Every indecomposable P with 4 <= |P| <= |T| - 2 grows by exactly two."""
    check_max_n(max_n)
    forms = hosts(6, max_n, _jobs(jobs))
    _, report = run_claim(ClaimId.ST_GROWTH, max_n, forms, check_growth_by_two, _jobs(jobs))
    return report


def verify_nonadjacent(max_n: int, jobs: int | None = None) -> VerificationReport:
    """Chains whose complement of (a, b) splits in series lie in a larger X member."""
    check_max_n(max_n)
    forms = hosts(3, max_n, _jobs(jobs))
    _, report = run_claim(ClaimId.NONADJACENT, max_n, forms, check_nonadjacent, _jobs(jobs))
    return report


def verify_adjacent(max_n: int, jobs: int | None = None) -> VerificationReport:
    """Covering pairs a < b lie in a subset pinned-isomorphic to a Figure-2 entry."""
    check_max_n(max_n)
    forms = hosts(3, max_n, _jobs(jobs))
    _, report = run_claim(ClaimId.ADJACENT, max_n, forms, check_adjacent, _jobs(jobs))
    return report


def verify_x_equiv(max_n: int, jobs: int | None = None) -> VerificationReport:
    """
    Recognizer and generator of family X agree at every size 4..max_n, and
    every generated member up to size 9 is rigid.
    """
    check_max_n(max_n, low=4)
    started = time.perf_counter()
    merged = SweepResult()
    generated = x_generate(max_n)

    for size in range(4, max_n + 1):
        forms = hosts(size, size, _jobs(jobs))
        result = sweep(ClaimId.X_EQUIV, forms, collect_x_members, _jobs(jobs))
        merged.instances += result.instances
        expected = {pinned_canonical_form(e.triple) for e in generated if e.size == size}
        for form in sorted(result.accepted - expected):
            merged.violations.append(
                Violation(form=form.hex(), reason=f"recognized but not generated at size {size}")
            )
        for form in sorted(expected - result.accepted):
            merged.violations.append(
                Violation(form=form.hex(), reason=f"generated but not recognized at size {size}")
            )

    for entry in generated:
        if entry.size > min(max_n, DEFAULT_X_SIZE):
            continue
        merged.instances += 1
        if not only_full_superset(entry.triple):
            merged.violations.append(
                Violation(
                    form=pinned_canonical_form(entry.triple).hex(),
                    reason=f"{entry.describe()} has a smaller indecomposable superset of its pins",
                )
            )

    merged.elapsed_ms = round((time.perf_counter() - started) * 1000)
    return build_report(ClaimId.X_EQUIV, max_n, merged)


def verify_rigidity(max_x_size: int = DEFAULT_X_SIZE) -> VerificationReport:
    """No catalog entry embeds into a different one with pins preserved."""
    started = time.perf_counter()
    entries = catalog_entries(max_x_size)
    merged = SweepResult()

    for small in entries:
        for large in entries:
            if small is large:
                continue
            merged.instances += 1
            # equal sizes would force an isomorphism, excluded by deduplication
            if small.size >= large.size:
                continue
            if embeds_pinned(small.triple, large.triple):
                merged.violations.append(
                    Violation(
                        form=pinned_canonical_form(large.triple).hex(),
                        reason=f"{small.describe()} embeds into {large.describe()}",
                    )
                )

    merged.elapsed_ms = round((time.perf_counter() - started) * 1000)
    return build_report(ClaimId.RIGIDITY, max_x_size, merged)


def verify_vcover(max_fence: int = DEFAULT_MAX_FENCE) -> VerificationReport:
    """
    V-covers with fence lengths 1..max_fence are indecomposable, recognized,
    and the only indecomposable superset of their pins.
    """
    if max_fence < 1:
        raise SizeBound("max_fence", max_fence, 1, DEFAULT_MAX_FENCE)
    started = time.perf_counter()
    merged = SweepResult()

    for length in range(1, max_fence + 1):
        entry = v_cover_make(length)
        merged.instances += 1
        match = v_cover_recognize(entry.triple)
        reasons = []
        if not is_indecomposable(entry.triple.poset):
            reasons.append("is decomposable")
        if match is None or match.variant != "plain" or match.anchors != entry.anchors:
            reasons.append("is not recognized")
        if not only_full_superset(entry.triple):
            reasons.append("has a smaller indecomposable superset of its pins")
        form = pinned_canonical_form(entry.triple).hex()
        merged.violations.extend(
            Violation(form=form, reason=f"V-cover {length} {reason}") for reason in reasons
        )

    merged.elapsed_ms = round((time.perf_counter() - started) * 1000)
    return build_report(ClaimId.VCOVER, max_fence, merged)


def verify_all(max_n: int, jobs: int | None = None) -> list[VerificationReport]:
    """
    Every claim in a fixed order.

    Levels are enumerated once and reused by every claim.
    """
    check_max_n(max_n, low=4)
    hosts(1, max_n, _jobs(jobs))
    logger.info("Running all claims", max_n=max_n, version=__version__)
    return [
        verify_2chfinal(max_n, jobs),
        verify_2aclem(max_n, jobs),
        verify_corollary(max_n, jobs),
        verify_st_growth(max_n, jobs),
        verify_rigidity(),
        verify_x_equiv(max_n, jobs),
        verify_nonadjacent(max_n, jobs),
        verify_adjacent(max_n, jobs),
        verify_vcover(),
    ]
