"""
Order-autonomous subsets and the indecomposability predicate.

A subset A is order-autonomous when every element outside A relates the
same way (below all, above all, or incomparable to all) to every member
of A. A poset is indecomposable when its only autonomous subsets are the
trivial ones; posets with at most two elements count as indecomposable.

The ``*_within`` functions work on a mask of a host poset directly so the
superset searches never materialize induced subposets.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import networkx as nx

from indeco.config import settings
from indeco.core.poset import (
    Poset,
    SubsetSelection,
    comparability_graph,
    incomparability_graph,
)
from indeco.exceptions import EmptySelection, SizeBound
from indeco.utils.bits import iter_bits, mask_of, popcount


class VerdictKind(str, Enum):
    """Why a poset is (not) indecomposable."""

    INDECOMPOSABLE = "indecomposable"
    DISCONNECTED = "disconnected"
    SERIES_DECOMPOSABLE = "series_decomposable"
    HAS_NONTRIVIAL_AUTONOMOUS = "has_nontrivial_autonomous"


@dataclass(frozen=True, slots=True)
class DecompositionVerdict:
    """
    Verdict plus the subsets that substantiate it.

    witness holds the connected components (DISCONNECTED), the split
    (L, U) (SERIES_DECOMPOSABLE), the autonomous set (HAS_NONTRIVIAL_AUTONOMOUS)
    or nothing (INDECOMPOSABLE).
    """

    kind: VerdictKind
    witness: tuple[SubsetSelection, ...] = ()

    @property
    def indecomposable(self) -> bool:
        return self.kind == VerdictKind.INDECOMPOSABLE


# =============================================================================
# Mask-level primitives
# =============================================================================


def _splits(p: Poset, z: int, members: int) -> bool:
    """True iff z relates differently to two members."""
    above = p.up[z] & members
    below = p.down[z] & members
    return not (above == members or below == members or (above | below) == 0)


def is_autonomous_within(p: Poset, members: int, within: int) -> bool:
    """Autonomy of ``members`` inside the subposet on ``within``."""
    return not any(_splits(p, z, members) for z in iter_bits(within & ~members))


def closure_within(p: Poset, seed: int, within: int) -> int:
    """
    Smallest autonomous subset of the subposet on ``within`` containing seed.

    Repeatedly adds any outside element that tells two members apart.
    """
    members = seed
    grown = True
    while grown:
        grown = False
        for z in iter_bits(within & ~members):
            if _splits(p, z, members):
                members |= 1 << z
                grown = True
    return members


def nontrivial_autonomous_within(p: Poset, within: int) -> int | None:
    """
    Some autonomous set A with 1 < |A| < |within|, or None.

    Every nontrivial autonomous set contains a pair whose closure is
    again nontrivial, so closing all pairs decides the question.
    """
    members = list(iter_bits(within))
    if len(members) <= 2:
        return None
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            closed = closure_within(p, 1 << x | 1 << y, within)
            if closed != within:
                return closed
    return None


def indecomposable_within(p: Poset, within: int) -> bool:
    """Indecomposability of the subposet induced on ``within``."""
    return nontrivial_autonomous_within(p, within) is None


def series_split_within(p: Poset, within: int) -> tuple[int, int] | None:
    """
    A split L (+) U of the subposet on ``within``, or None.

    The co-components (components of the incomparability graph) of a
    series-decomposable order are totally ordered; L is the lowest one.
    """
    if popcount(within) < 2:
        return None
    components = [mask_of(c) for c in nx.connected_components(incomparability_graph(p, within))]
    if len(components) < 2:
        return None
    for c in components:
        # the lowest co-component has nothing of within below it
        if _down_of(p, c) & within & ~c == 0:
            return c, within & ~c
    return None


def _down_of(p: Poset, members: int) -> int:
    result = 0
    for x in iter_bits(members):
        result |= p.down[x]
    return result


# =============================================================================
# Public operations
# =============================================================================


def is_order_autonomous(p: Poset, s: SubsetSelection) -> bool:
    """
    True iff every element outside ``s`` compares identically to all of ``s``.

    Empty sets, singletons and the full set are always autonomous.
    """
    return is_autonomous_within(p, s.mask, p.ground)


def module_closure(p: Poset, s: SubsetSelection) -> SubsetSelection:
    """
    The inclusion-minimal order-autonomous set containing ``s``.

    Raises:
        EmptySelection: If ``s`` is empty
    """
    if s.mask == 0:
        raise EmptySelection("Module closure of an empty selection")
    return SubsetSelection(p.n, closure_within(p, s.mask, p.ground))


def series_split(p: Poset) -> tuple[SubsetSelection, SubsetSelection] | None:
    """Nonempty L, U with L entirely below U, or None."""
    split = series_split_within(p, p.ground)
    if split is None:
        return None
    lower, upper = split
    return SubsetSelection(p.n, lower), SubsetSelection(p.n, upper)


def is_series_decomposable(p: Poset) -> bool:
    """True iff the poset splits as L (+) U with L, U nonempty."""
    return series_split_within(p, p.ground) is not None


def is_co_connected(p: Poset) -> bool:
    """True iff the incomparability graph is connected."""
    return nx.is_connected(incomparability_graph(p))


def is_indecomposable(p: Poset) -> bool:
    """
    True iff ``p`` has no autonomous subset A with 1 < |A| < n.

    Posets with n <= 2 are indecomposable by convention.
    """
    return indecomposable_within(p, p.ground)


def indecomposable_oracle(p: Poset) -> bool:
    """
    Indecomposability by scanning all 2^n subsets.

    Independent ground truth for ``is_indecomposable``.

    Raises:
        SizeBound: If n exceeds the configured oracle bound
    """
    bound = settings.oracle_max_n
    if p.n > bound:
        raise SizeBound("n", p.n, 1, bound)
    ground = p.ground
    for members in range(1, ground):
        size = popcount(members)
        if 1 < size < p.n and is_autonomous_within(p, members, ground):
            return False
    return True


def decompose(p: Poset) -> DecompositionVerdict:
    """Classify ``p`` and attach a witness that rechecks independently."""
    if p.n <= 2:
        return DecompositionVerdict(VerdictKind.INDECOMPOSABLE)

    components = list(nx.connected_components(comparability_graph(p)))
    if len(components) > 1:
        return DecompositionVerdict(
            VerdictKind.DISCONNECTED,
            tuple(
                sorted(
                    (SubsetSelection.of(p.n, c) for c in components),
                    key=lambda s: s.mask,
                )
            ),
        )

    split = series_split(p)
    if split is not None:
        return DecompositionVerdict(VerdictKind.SERIES_DECOMPOSABLE, split)

    autonomous = nontrivial_autonomous_within(p, p.ground)
    if autonomous is not None:
        return DecompositionVerdict(
            VerdictKind.HAS_NONTRIVIAL_AUTONOMOUS,
            (SubsetSelection(p.n, autonomous),),
        )

    return DecompositionVerdict(VerdictKind.INDECOMPOSABLE)