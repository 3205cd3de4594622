"""
Per-host checkers.

Each checker decodes one canonical form, tests every instance of its
claim on that poset and returns a ``PosetOutcome``. Pins and subsets in
violations index the decoded labeling.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable
from functools import lru_cache

from indeco.catalog.family_x import x_generate, x_recognize
from indeco.catalog.fences import fence_recognize, v_cover_recognize
from indeco.catalog.figure2 import (
    FIGURE2_MAX_SIZE,
    figure2_identities,
    figure2_make,
    figure2_matches,
)
from indeco.core.covers import (
    SubsetOracle,
    indecomposable_supersets,
    smallest_supersets,
    st_gap2_witness,
    upper_covers,
)
from indeco.core.decomposition import series_split_within
from indeco.core.enumeration import canonical_form, pinned_canonical_form, poset_from_canonical
from indeco.core.poset import (
    PinnedTriple,
    Poset,
    SubsetSelection,
    fence_distance,
    induced,
    longest_chain_between,
    open_interval,
)
from indeco.exceptions import TheoremFalsified
from indeco.schemas.report import Violation
from indeco.utils.bits import submasks_containing
from indeco.verification.engine import PosetOutcome

COROLLARY_FLOOR = 9


def _chains(p: Poset) -> list[tuple[int, int]]:
    return p.relations()


def _antichains(p: Poset) -> list[tuple[int, int]]:
    return [
        (a, b) for a, b in itertools.combinations(range(p.n), 2) if not p.comparable(a, b)
    ]


def pinned_subtriple(p: Poset, s: SubsetSelection, a: int, b: int) -> PinnedTriple:
    """The subposet on ``s`` with a and b carried over as pins."""
    sub, members = induced(p, s)
    return PinnedTriple(sub, members.index(a), members.index(b))


def _violation(
    form: bytes,
    reason: str,
    pins: tuple[int, int] | None = None,
    subset: SubsetSelection | None = None,
) -> Violation:
    return Violation(
        form=form.hex(),
        pins=list(pins) if pins is not None else None,
        subset=list(subset.elements) if subset is not None else None,
        reason=reason,
    )


@lru_cache(maxsize=None)
def unpinned_catalog_forms(max_size: int) -> frozenset[bytes]:
    """Plain canonical forms of every Figure-2 entry and family-X member."""
    triples = [
        figure2_make(i.name, i.dual, i.bx_swapped).triple for i in figure2_identities()
    ]
    triples.extend(e.triple for e in x_generate(max_size))
    return frozenset(canonical_form(t.poset) for t in triples if t.poset.n <= max_size)


# =============================================================================
# Upper covers of 2-chains
# =============================================================================


def check_two_chain_covers(form: bytes) -> PosetOutcome:
    """Every upper cover of every 2-chain is a Figure-2 entry or in family X."""
    p = poset_from_canonical(form)
    outcome = PosetOutcome()
    oracle = SubsetOracle(p)
    if p.n < 3 or not oracle.indecomposable(p.ground):
        return outcome

    for a, b in _chains(p):
        result = upper_covers(p, SubsetSelection.of(p.n, (a, b)), oracle)
        for cover in result.covers:
            outcome.instances += 1
            t = pinned_subtriple(p, cover, a, b)
            if figure2_matches(t) or x_recognize(t) is not None:
                continue
            if canonical_form(t.poset) in unpinned_catalog_forms(p.n):
                outcome.observations.append(
                    f"unpinned-only match: host {form.hex()} pins ({a}, {b}) "
                    f"cover {list(cover.elements)}"
                )
                continue
            outcome.violations.append(
                _violation(form, "upper cover not in catalog", (a, b), cover)
            )
    return outcome


# =============================================================================
# Smallest supersets of 2-antichains
# =============================================================================


def _antichain_superset_reason(t: PinnedTriple, distance: float) -> str | None:
    if distance > 2:
        match = fence_recognize(t, require_endpoints=True)
        if match is None:
            return "smallest superset is not a fence between the pins"
        if match.length != distance + 1:
            return f"fence has {match.length} elements, expected {int(distance) + 1}"
        return None

    match = fence_recognize(t, require_endpoints=False)
    if match is not None and not match.below_threshold:
        return None
    if v_cover_recognize(t) is not None:
        return None
    return "smallest superset is neither a fence nor a V-cover"


def check_two_antichain_supersets(form: bytes) -> PosetOutcome:
    """Smallest supersets of 2-antichains are fences or V-cover variants."""
    p = poset_from_canonical(form)
    outcome = PosetOutcome()
    oracle = SubsetOracle(p)
    if p.n < 3 or not oracle.indecomposable(p.ground):
        return outcome

    for a, b in _antichains(p):
        distance = fence_distance(p, a, b)
        result = smallest_supersets(p, SubsetSelection.of(p.n, (a, b)), oracle)
        for found in result.smallest:
            outcome.instances += 1
            reason = _antichain_superset_reason(pinned_subtriple(p, found, a, b), distance)
            if reason is not None:
                outcome.violations.append(_violation(form, reason, (a, b), found))
    return outcome


# =============================================================================
# Size bound on upper covers
# =============================================================================


def check_cover_size_bound(form: bytes) -> PosetOutcome:
    """|U| <= max(2|K|, 9) for every upper cover U of every 2-chain."""
    p = poset_from_canonical(form)
    outcome = PosetOutcome()
    oracle = SubsetOracle(p)
    for a, b in _chains(p):
        chain_length = longest_chain_between(p, a, b)
        bound = max(2 * chain_length, COROLLARY_FLOOR)
        for cover in upper_covers(p, SubsetSelection.of(p.n, (a, b)), oracle).covers:
            outcome.instances += 1
            size = len(cover)
            best = outcome.extremes.get(chain_length, 0)
            outcome.extremes[chain_length] = max(best, size)
            if size > bound:
                outcome.violations.append(
                    _violation(form, f"|U|={size} exceeds bound {bound}", (a, b), cover)
                )
    return outcome


# =============================================================================
# Growth by two
# =============================================================================


def check_growth_by_two(form: bytes) -> PosetOutcome:
    """Each indecomposable P with 4 <= |P| <= |T|-2 grows by exactly two."""
    p = poset_from_canonical(form)
    outcome = PosetOutcome()
    oracle = SubsetOracle(p)
    if p.n < 6 or not oracle.indecomposable(p.ground):
        return outcome

    for size in range(4, p.n - 1):
        for mask in submasks_containing(0, p.ground, size):
            if not oracle.indecomposable(mask):
                continue
            outcome.instances += 1
            subset = SubsetSelection(p.n, mask)
            try:
                st_gap2_witness(p, subset, oracle)
            except TheoremFalsified:
                outcome.violations.append(
                    _violation(form, "no indecomposable superset two larger", subset=subset)
                )
    return outcome


# =============================================================================
# Chains with a nonempty or empty open interval
# =============================================================================


def _first_hit(
    p: Poset, a: int, b: int, sizes: range, accept: Callable[[PinnedTriple], object]
) -> bool:
    seed = 1 << a | 1 << b
    for size in sizes:
        for mask in submasks_containing(seed, p.ground, size - 2):
            if accept(pinned_subtriple(p, SubsetSelection(p.n, mask), a, b)):
                return True
    return False


def _is_large_x_member(t: PinnedTriple) -> bool:
    return t.poset.n > 4 and x_recognize(t) is not None


def check_nonadjacent(form: bytes) -> PosetOutcome:
    """
    If T minus the open interval (a, b) splits in series, some family-X
    member larger than N sits on a and b.
    """
    p = poset_from_canonical(form)
    outcome = PosetOutcome()
    if p.n < 3 or not SubsetOracle(p).indecomposable(p.ground):
        return outcome

    for a, b in _chains(p):
        rest = p.ground & ~open_interval(p, a, b).mask
        if series_split_within(p, rest) is None:
            continue
        outcome.instances += 1
        if not _first_hit(p, a, b, range(5, p.n + 1), _is_large_x_member):
            outcome.violations.append(
                _violation(form, "no family-X member larger than N contains the chain", (a, b))
            )
    return outcome


def check_adjacent(form: bytes) -> PosetOutcome:
    """A lower cover pair a < b sits in a Figure-2 entry or a dual."""
    p = poset_from_canonical(form)
    outcome = PosetOutcome()
    if p.n < 3 or not SubsetOracle(p).indecomposable(p.ground):
        return outcome

    sizes = range(4, min(FIGURE2_MAX_SIZE, p.n) + 1)
    for a, b in _chains(p):
        if open_interval(p, a, b).mask:
            continue
        outcome.instances += 1
        if not _first_hit(p, a, b, sizes, figure2_matches):
            outcome.violations.append(
                _violation(form, "no Figure-2 subset contains the covering pair", (a, b))
            )
    return outcome


# =============================================================================
# Family X recognition
# =============================================================================


def collect_x_members(form: bytes) -> PosetOutcome:
    """Pinned forms of every chain pin pair that x_recognize accepts."""
    p = poset_from_canonical(form)
    outcome = PosetOutcome()
    for a, b in _chains(p):
        outcome.instances += 1
        t = PinnedTriple(p, a, b)
        if x_recognize(t) is not None:
            outcome.accepted.append(pinned_canonical_form(t))
    return outcome


def only_full_superset(t: PinnedTriple) -> bool:
    """True iff the only indecomposable proper superset of the pins is everything."""
    found = indecomposable_supersets(t.poset, t.pins, t.poset.n)
    return [s.mask for s in found] == [t.poset.ground]

