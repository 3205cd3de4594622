"""
Finite strict orders.

A ``Poset`` on elements 0..n-1 stores, for every element, the bitmask of
its strict upper bounds. Everything else (down-sets, covers, intervals,
distances) is derived. Values are immutable and safe to share between
threads and processes.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import networkx as nx

from indeco.exceptions import (
    CycleError,
    ElementIndexError,
    EmptyPoset,
    EmptySelection,
    NotAChain,
    PosetError,
)
from indeco.utils.bits import full_mask, iter_bits, mask_of, popcount


@dataclass(frozen=True, slots=True)
class Poset:
    """
    A finite strict order.

    ``up[x]`` has bit y set iff x < y. The relation is irreflexive,
    antisymmetric and transitive; ``from_relations`` is the checked
    constructor, direct construction trusts its input.
    """

    n: int
    up: tuple[int, ...]
    down: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        down = [0] * self.n
        for x in range(self.n):
            for y in iter_bits(self.up[x]):
                down[y] |= 1 << x
        object.__setattr__(self, "down", tuple(down))

    def __len__(self) -> int:
        return self.n

    @property
    def ground(self) -> int:
        """Mask of all elements."""
        return full_mask(self.n)

    def less(self, x: int, y: int) -> bool:
        """True iff x < y."""
        return bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        """True iff x < y or y < x."""
        return bool((self.up[x] | self.down[x]) >> y & 1)

    def comparable_mask(self, x: int) -> int:
        """Mask of elements comparable to x."""
        return self.up[x] | self.down[x]

    def relations(self) -> list[tuple[int, int]]:
        """All pairs (x, y) with x < y, sorted."""
        return [(x, y) for x in range(self.n) for y in iter_bits(self.up[x])]

    def minimal_elements(self) -> list[int]:
        """Elements with no strict lower bound."""
        return [x for x in range(self.n) if not self.down[x]]

    def maximal_elements(self) -> list[int]:
        """Elements with no strict upper bound."""
        return [x for x in range(self.n) if not self.up[x]]

    def check_invariants(self) -> None:
        """
        Recheck irreflexivity, antisymmetry and transitivity.

        Raises:
            CycleError: If the stored relation is not a strict order
        """
        for x in range(self.n):
            if self.up[x] >> x & 1:
                raise CycleError(x)
            for y in iter_bits(self.up[x]):
                if self.up[y] >> x & 1:
                    raise CycleError(x)
                if self.up[y] & ~self.up[x]:
                    raise CycleError(x)


@dataclass(frozen=True, slots=True)
class SubsetSelection:
    """Membership indicator over the ground set of a host poset."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise ElementIndexError(self.mask.bit_length() - 1, self.n)

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> SubsetSelection:
        """Selection from explicit element indices."""
        elements = list(elements)
        for e in elements:
            if not 0 <= e < n:
                raise ElementIndexError(e, n)
        return cls(n, mask_of(elements))

    @classmethod
    def full(cls, n: int) -> SubsetSelection:
        """Selection of every element."""
        return cls(n, full_mask(n))

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, element: object) -> bool:
        return isinstance(element, int) and bool(self.mask >> element & 1)

    @property
    def elements(self) -> tuple[int, ...]:
        """Members in ascending order."""
        return tuple(iter_bits(self.mask))

    def issubset(self, other: SubsetSelection) -> bool:
        """True iff every member is a member of ``other``."""
        return self.mask & ~other.mask == 0


@dataclass(frozen=True, slots=True)
class PinnedTriple:
    """A poset with two distinct distinguished elements a and b."""

    poset: Poset
    a: int
    b: int

    def __post_init__(self) -> None:
        for pin in (self.a, self.b):
            if not 0 <= pin < self.poset.n:
                raise ElementIndexError(pin, self.poset.n)
        if self.a == self.b:
            raise PosetError(
                "Pins a and b must be distinct", details={"a": self.a, "b": self.b}
            )

    @property
    def is_chain(self) -> bool:
        """True iff a < b."""
        return self.poset.less(self.a, self.b)

    @property
    def is_antichain(self) -> bool:
        """True iff a and b are incomparable."""
        return not self.poset.comparable(self.a, self.b)

    @property
    def pins(self) -> SubsetSelection:
        """The pinned pair as a selection."""
        return SubsetSelection(self.poset.n, 1 << self.a | 1 << self.b)

    def require_chain(self) -> None:
        """
        Raises:
            NotAChain: If a < b does not hold
        """
        if not self.is_chain:
            raise NotAChain(self.a, self.b)


# =============================================================================
# Construction
# =============================================================================


def from_relations(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """
    Build a poset as the transitive closure of the given strict relations.

    Args:
        n: Number of elements
        pairs: Pairs (x, y) meaning x < y; covers or arbitrary relations

    Returns:
        The closed poset

    Raises:
        EmptyPoset: If n < 1
        ElementIndexError: For indices outside 0..n-1
        CycleError: If the closure is not irreflexive
    """
    if n < 1:
        raise EmptyPoset("Posets need at least one element", details={"n": n})

    up = [0] * n
    for x, y in pairs:
        for e in (x, y):
            if not 0 <= e < n:
                raise ElementIndexError(e, n)
        up[x] |= 1 << y

    # Warshall over bit rows
    for k in range(n):
        bit = 1 << k
        row = up[k]
        for x in range(n):
            if up[x] & bit:
                up[x] |= row

    for x in range(n):
        if up[x] >> x & 1:
            raise CycleError(x)

    return Poset(n, tuple(up))


def chain(n: int) -> Poset:
    """The n-element chain 0 < 1 < ... < n-1."""
    return from_relations(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    """The n-element antichain."""
    if n < 1:
        raise EmptyPoset("Posets need at least one element", details={"n": n})
    return Poset(n, (0,) * n)


def induced(p: Poset, s: SubsetSelection) -> tuple[Poset, tuple[int, ...]]:
    """
    Restrict ``p`` to the members of ``s``.

    Elements are relabeled 0..|s|-1 in ascending original index.

    Returns:
        The induced poset and the mapping new index -> original element

    Raises:
        EmptySelection: If ``s`` is empty
    """
    if s.mask == 0:
        raise EmptySelection("Cannot induce on an empty selection")
    members = s.elements
    position = {e: i for i, e in enumerate(members)}
    up = tuple(
        mask_of(position[y] for y in iter_bits(p.up[x] & s.mask)) for x in members
    )
    return Poset(len(members), up), members


def dual(p: Poset) -> Poset:
    """The order-reversed poset."""
    return Poset(p.n, p.down)


# =============================================================================
# Queries
# =============================================================================


def hasse_covers(p: Poset) -> list[tuple[int, int]]:
    """Pairs (x, y) with y an upper cover of x, sorted."""
    return [
        (x, y)
        for x in range(p.n)
        for y in iter_bits(p.up[x])
        if p.up[x] & p.down[y] == 0
    ]


def open_interval(p: Poset, a: int, b: int) -> SubsetSelection:
    """The elements strictly between a and b (empty unless a < b)."""
    return SubsetSelection(p.n, p.up[a] & p.down[b])


def comparability_graph(p: Poset, within: int | None = None) -> nx.Graph:
    """
    Undirected graph joining comparable elements.

    Args:
        p: The poset
        within: Optional mask restricting the vertex set
    """
    members = list(iter_bits(p.ground if within is None else within))
    keep = mask_of(members)
    graph = nx.Graph()
    graph.add_nodes_from(members)
    graph.add_edges_from(
        (x, y) for x in members for y in iter_bits(p.up[x] & keep)
    )
    return graph


def incomparability_graph(p: Poset, within: int | None = None) -> nx.Graph:
    """Undirected graph joining distinct incomparable elements."""
    members = list(iter_bits(p.ground if within is None else within))
    keep = mask_of(members)
    graph = nx.Graph()
    graph.add_nodes_from(members)
    for x in members:
        others = keep & ~p.comparable_mask(x) & ~((1 << (x + 1)) - 1)
        graph.add_edges_from((x, y) for y in iter_bits(others))
    return graph


def fence_distance(p: Poset, a: int, b: int) -> float:
    """
    Shortest path length between a and b in the comparability graph.

    A fence with k edges realizes distance k. Returns ``math.inf`` when a
    and b lie in different connected components.
    """
    try:
        return float(nx.shortest_path_length(comparability_graph(p), a, b))
    except nx.NetworkXNoPath:
        return math.inf


def longest_chain_between(p: Poset, a: int, b: int) -> int:
    """
    Cardinality |K| of a longest chain a = k1 < ... < km = b.

    Raises:
        NotAChain: If a < b does not hold
    """
    if not p.less(a, b):
        raise NotAChain(a, b)

    inside = p.up[a] & p.down[b] | 1 << b
    memo: dict[int, int] = {b: 1}

    def longest_from(x: int) -> int:
        if x not in memo:
            memo[x] = 1 + max(longest_from(y) for y in iter_bits(p.up[x] & inside))
        return memo[x]

    return longest_from(a)
