"""
Fences and indecomposable V-covers.

A fence is a poset whose comparability graph is a path; since a 3-chain
would close a triangle, no further check is needed. A V-cover has exactly
two minimal elements l and d, the strict up-set of l splits into {a} and
a fence F from b to a maximal element h, and h is the only element
above d.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from indeco.catalog.entry import CatalogEntry, Identity, VCoverAnchors
from indeco.core.poset import (
    PinnedTriple,
    Poset,
    comparability_graph,
    dual,
    from_relations,
)
from indeco.exceptions import BadLength, KindMismatch
from indeco.utils.bits import popcount

FENCE = "Fence"
VCOVER = "VCover"

# Smallest fence length that occurs as a smallest indecomposable superset
CHARACTERIZED_FENCE_LENGTH = 4


@dataclass(frozen=True, slots=True)
class FenceMatch:
    """A recognized fence and its elements in path order."""

    order: tuple[int, ...]
    endpoints_pinned: bool

    @property
    def length(self) -> int:
        return len(self.order)

    @property
    def below_threshold(self) -> bool:
        """True for fences too short to be indecomposable supersets of a pair."""
        return self.length < CHARACTERIZED_FENCE_LENGTH


@dataclass(frozen=True, slots=True)
class VCoverMatch:
    """
    A recognized V-cover.

    ``dual`` is set when the order had to be reversed and ``swapped``
    when a and b play each other's role. Anchors index the (possibly
    reversed) poset, which has the same ground set.
    """

    anchors: VCoverAnchors
    dual: bool = False
    swapped: bool = False

    @property
    def variant(self) -> str:
        parts = [p for p, on in (("dual", self.dual), ("swapped", self.swapped)) if on]
        return "+".join(parts) or "plain"


# =============================================================================
# Fences
# =============================================================================


def _fence_ending_high(elements: list[int]) -> list[tuple[int, int]]:
    """Alternating relations along ``elements`` with the last one maximal."""
    pairs = []
    k = len(elements)
    for i in range(k - 1):
        # maximal positions sit an even distance from the end
        upper_is_next = (k - i - 2) % 2 == 0
        x, y = elements[i], elements[i + 1]
        pairs.append((x, y) if upper_is_next else (y, x))
    return pairs


def fence_make(k: int) -> CatalogEntry:
    """
    The k-element fence 0 < 1 > 2 < 3 ..., pinned at both ends.

    Raises:
        BadLength: If k < 2
    """
    if k < 2:
        raise BadLength(k, 2)
    pairs = [(i, i + 1) if i % 2 == 0 else (i + 1, i) for i in range(k - 1)]
    labels = ("a", *(f"f{i + 1}" for i in range(1, k - 1)), "b")
    return CatalogEntry(
        identity=Identity(FENCE),
        triple=PinnedTriple(from_relations(k, pairs), 0, k - 1),
        labels=labels,
        fence_length=k,
    )


def fence_path(p: Poset, within: int | None = None) -> tuple[int, ...] | None:
    """Elements along the path if the (sub)poset is a fence with 2+ elements."""
    graph = comparability_graph(p, within)
    n = graph.number_of_nodes()
    if n < 2 or graph.number_of_edges() != n - 1 or not nx.is_connected(graph):
        return None
    if any(degree > 2 for _, degree in graph.degree()):
        return None
    start = min(v for v, degree in graph.degree() if degree == 1)
    return tuple(nx.dfs_preorder_nodes(graph, start))


def fence_recognize(t: PinnedTriple, require_endpoints: bool = True) -> FenceMatch | None:
    """
    Fence structure of ``t.poset``, or None.

    With ``require_endpoints`` the pins must be the two ends of the path.
    """
    order = fence_path(t.poset)
    if order is None:
        return None
    pinned = {order[0], order[-1]} == {t.a, t.b}
    if require_endpoints and not pinned:
        return None
    return FenceMatch(order=order, endpoints_pinned=pinned)


# =============================================================================
# V-covers
# =============================================================================


def v_cover_make(fence_length: int) -> CatalogEntry:
    """
    The V-cover whose fence F from b to h has ``fence_length`` elements.

    Raises:
        BadLength: If fence_length < 1
    """
    if fence_length < 1:
        raise BadLength(fence_length, 1)

    a, ell, d = 0, 1, 2
    fence = list(range(3, 3 + fence_length))
    h = fence[-1]
    pairs = [(ell, a), (d, h), *((ell, f) for f in fence)]
    pairs.extend(_fence_ending_high(fence))

    if fence_length == 1:
        fence_labels: tuple[str, ...] = ("b",)
    else:
        fence_labels = ("b", *(f"f{i}" for i in range(2, fence_length)), "h")
    return CatalogEntry(
        identity=Identity(VCOVER),
        triple=PinnedTriple(from_relations(3 + fence_length, pairs), a, fence[0]),
        labels=("a", "l", "d", *fence_labels),
        fence_length=fence_length,
        anchors=VCoverAnchors(ell=ell, d=d, h=h, fence=tuple(fence)),
    )


def _match_definition(p: Poset, a: int, b: int) -> VCoverAnchors | None:
    minimal = p.minimal_elements()
    if len(minimal) != 2:
        return None
    wide = [m for m in minimal if popcount(p.up[m]) + 1 > 2]
    if len(wide) != 1:
        return None
    ell = wide[0]
    d = minimal[0] if minimal[1] == ell else minimal[1]

    if popcount(p.up[d]) != 1:
        return None
    h = p.up[d].bit_length() - 1

    above = p.up[ell]
    if not above >> a & 1 or p.comparable_mask(a) & above:
        return None
    fence_mask = above & ~(1 << a)
    if not fence_mask >> b & 1 or not fence_mask >> h & 1:
        return None
    if p.ground != above | 1 << ell | 1 << d:
        return None
    if p.up[h] & fence_mask:
        return None

    if fence_mask == 1 << b:
        return VCoverAnchors(ell=ell, d=d, h=h, fence=(b,)) if b == h else None

    order = fence_path(p, fence_mask)
    if order is None or {order[0], order[-1]} != {b, h}:
        return None
    if order[0] != b:
        order = order[::-1]
    return VCoverAnchors(ell=ell, d=d, h=h, fence=order)


def v_cover_recognize(t: PinnedTriple) -> VCoverMatch | None:
    """
    Match ``t`` against the V-cover definition, up to duality and a/b roles.

    Variants are tried plain, swapped, dual, dual and swapped.

    Raises:
        KindMismatch: If the pins are comparable
    """
    if not t.is_antichain:
        raise KindMismatch(
            "V-cover recognition needs incomparable pins",
            details={"a": t.a, "b": t.b},
        )
    for is_dual in (False, True):
        p = dual(t.poset) if is_dual else t.poset
        for swapped in (False, True):
            a, b = (t.b, t.a) if swapped else (t.a, t.b)
            anchors = _match_definition(p, a, b)
            if anchors is not None:
                return VCoverMatch(anchors=anchors, dual=is_dual, swapped=swapped)
    return None

