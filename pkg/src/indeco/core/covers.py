"""
Searches over the containment order of indecomposable subsets.

Candidates are visited in layers of increasing size. Verdicts are memoized
per subset mask in a ``SubsetOracle`` so several seeds over the same host
poset share work. Returned selections are sorted by mask so results never
depend on visiting order or worker count.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import structlog

from indeco.core.decomposition import closure_within, indecomposable_within
from indeco.core.poset import Poset, SubsetSelection
from indeco.exceptions import (
    NoSuperset,
    PreconditionViolated,
    SeedNotIndecomposable,
    TheoremFalsified,
)
from indeco.utils.bits import popcount, submasks_containing

logger = structlog.get_logger(__name__)


@dataclass(slots=True)
class SearchStats:
    """Counters for one search."""

    examined: int = 0
    pruned: int = 0


@dataclass(frozen=True, slots=True)
class CoverResult:
    """
    Indecomposable proper supersets of a seed.

    ``covers`` are the containment-minimal ones; ``smallest`` those of
    minimum cardinality (always a subset of ``covers``).
    """

    seed: SubsetSelection
    covers: tuple[SubsetSelection, ...]
    smallest: tuple[SubsetSelection, ...]
    stats: SearchStats = field(compare=False)


class SubsetOracle:
    """Memoized indecomposability of subsets of one host poset."""

    def __init__(self, p: Poset) -> None:
        self.poset = p
        self._verdicts: dict[int, bool] = {}

    def indecomposable(self, mask: int) -> bool:
        """Indecomposability of the subposet induced on ``mask``."""
        verdict = self._verdicts.get(mask)
        if verdict is None:
            verdict = indecomposable_within(self.poset, mask)
            self._verdicts[mask] = verdict
        return verdict

    def extends_seed(self, seed: int, mask: int, stats: SearchStats) -> bool:
        """
        Indecomposability of ``mask``, short-circuited by the seed's closure.

        If the module closure of a seed with at least two elements stays
        inside a proper part of ``mask``, that closure is a nontrivial
        autonomous set and ``mask`` is decomposable.
        """
        stats.examined += 1
        if mask not in self._verdicts and popcount(seed) > 1:
            if closure_within(self.poset, seed, mask) != mask:
                stats.pruned += 1
                self._verdicts[mask] = False
                return False
        return self.indecomposable(mask)


def _layers(p: Poset, seed: int, max_size: int) -> range:
    return range(popcount(seed) + 1, min(max_size, p.n) + 1)


def _require_indecomposable_seed(oracle: SubsetOracle, seed: SubsetSelection) -> None:
    if seed.mask == 0 or not oracle.indecomposable(seed.mask):
        raise SeedNotIndecomposable(
            "Seed does not induce an indecomposable subposet",
            details={"seed": list(seed.elements)},
        )


def indecomposable_supersets(
    p: Poset,
    seed: SubsetSelection,
    max_size: int,
    oracle: SubsetOracle | None = None,
) -> list[SubsetSelection]:
    """
    Every indecomposable S with seed a proper subset of S and |S| <= max_size.

    Raises:
        SeedNotIndecomposable: If ``seed`` is empty
    """
    if seed.mask == 0:
        raise SeedNotIndecomposable("Seed must be nonempty")
    oracle = oracle or SubsetOracle(p)
    stats = SearchStats()
    found = [
        mask
        for size in _layers(p, seed.mask, max_size)
        for mask in submasks_containing(seed.mask, p.ground, size - popcount(seed.mask))
        if oracle.extends_seed(seed.mask, mask, stats)
    ]
    return [SubsetSelection(p.n, mask) for mask in sorted(found)]


def upper_covers(
    p: Poset,
    seed: SubsetSelection,
    oracle: SubsetOracle | None = None,
) -> CoverResult:
    """
    Containment-minimal indecomposable proper supersets of ``seed``.

    A candidate containing an already found cover is skipped; every
    indecomposable candidate that survives is minimal because all smaller
    ones were visited first.

    Raises:
        SeedNotIndecomposable: If the seed's subposet is decomposable
    """
    oracle = oracle or SubsetOracle(p)
    _require_indecomposable_seed(oracle, seed)

    stats = SearchStats()
    covers: list[int] = []
    for size in _layers(p, seed.mask, p.n):
        for mask in submasks_containing(seed.mask, p.ground, size - popcount(seed.mask)):
            if any(c & ~mask == 0 for c in covers):
                stats.pruned += 1
                continue
            if oracle.extends_seed(seed.mask, mask, stats):
                covers.append(mask)

    covers.sort()
    least = min((popcount(c) for c in covers), default=0)
    logger.debug(
        "Upper covers found",
        seed=list(seed.elements),
        covers=len(covers),
        examined=stats.examined,
        pruned=stats.pruned,
    )
    return CoverResult(
        seed=seed,
        covers=tuple(SubsetSelection(p.n, c) for c in covers),
        smallest=tuple(SubsetSelection(p.n, c) for c in covers if popcount(c) == least),
        stats=stats,
    )


def smallest_supersets(
    p: Poset,
    seed: SubsetSelection,
    oracle: SubsetOracle | None = None,
) -> CoverResult:
    """
    Minimum-cardinality indecomposable proper supersets of ``seed``.

    Stops at the first nonempty layer; ``covers`` equals ``smallest``.

    Raises:
        SeedNotIndecomposable: If the seed's subposet is decomposable
        NoSuperset: If no indecomposable proper superset exists
    """
    oracle = oracle or SubsetOracle(p)
    _require_indecomposable_seed(oracle, seed)

    stats = SearchStats()
    for size in _layers(p, seed.mask, p.n):
        hits = sorted(
            mask
            for mask in submasks_containing(seed.mask, p.ground, size - popcount(seed.mask))
            if oracle.extends_seed(seed.mask, mask, stats)
        )
        if hits:
            found = tuple(SubsetSelection(p.n, m) for m in hits)
            return CoverResult(seed=seed, covers=found, smallest=found, stats=stats)

    raise NoSuperset(
        "Seed has no indecomposable proper superset",
        details={"seed": list(seed.elements), "n": p.n},
    )


def st_gap2_witness(
    t: Poset,
    p_subset: SubsetSelection,
    oracle: SubsetOracle | None = None,
) -> SubsetSelection:
    """
    An indecomposable U with p_subset < U <= t and |U| = |p_subset| + 2.

    Among all such U the one with the least mask is returned.

    Raises:
        PreconditionViolated: Unless t and p_subset are indecomposable
            and 4 <= |p_subset| <= |t| - 2
        TheoremFalsified: If no such U exists
    """
    oracle = oracle or SubsetOracle(t)
    size = len(p_subset)
    if not 4 <= size <= t.n - 2:
        raise PreconditionViolated(
            "Subset size must lie in 4..|T|-2",
            details={"size": size, "n": t.n},
        )
    if not oracle.indecomposable(t.ground):
        raise PreconditionViolated("Host poset is decomposable", details={"n": t.n})
    if not oracle.indecomposable(p_subset.mask):
        raise PreconditionViolated(
            "Subset is decomposable", details={"subset": list(p_subset.elements)}
        )

    stats = SearchStats()
    hits = [
        mask
        for mask in submasks_containing(p_subset.mask, t.ground, 2)
        if oracle.extends_seed(p_subset.mask, mask, stats)
    ]
    if not hits:
        raise TheoremFalsified(
            "st_growth",
            details={"n": t.n, "up": list(t.up), "subset": list(p_subset.elements)},
        )
    return SubsetSelection(t.n, min(hits))
