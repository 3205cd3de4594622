"""
Posets up to isomorphism.

Canonical forms come from vertex refinement followed by a backtracking
search over refinement-compatible labelings; the lexicographically least
relation matrix wins. Incomparable twins (equal up- and down-sets) are
interchangeable, so only one of them is branched on.

Levels are generated by adding a new element to every poset of the level
below, deduplicated by canonical form.
"""

from __future__ import annotations

import itertools
from typing import NewType

import networkx as nx
import structlog

from indeco.config import settings
from indeco.core.batch import BatchProcessor
from indeco.core.poset import PinnedTriple, Poset
from indeco.exceptions import SizeBound
from indeco.infrastructure.cache import get_level_cache
from indeco.utils.bits import iter_bits, mask_of

logger = structlog.get_logger(__name__)

CanonicalForm = NewType("CanonicalForm", bytes)

_PLAIN = 0
_PINNED = 1


# =============================================================================
# Canonical forms
# =============================================================================


def _refine(p: Poset, cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts per cell until stable."""
    while True:
        cell_of = [0] * p.n
        for index, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = index
        width = len(cells)

        def profile(mask: int) -> tuple[int, ...]:
            counts = [0] * width
            for u in iter_bits(mask):
                counts[cell_of[u]] += 1
            return tuple(counts)

        refined: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[tuple[int, ...], tuple[int, ...]], list[int]] = {}
            for v in cell:
                groups.setdefault((profile(p.down[v]), profile(p.up[v])), []).append(v)
            refined.extend(groups[key] for key in sorted(groups))

        if len(refined) == len(cells):
            return refined
        cells = refined


def _encode(p: Poset, order: list[int], kind: int) -> bytes:
    bits = 0
    for x in order:
        for y in order:
            bits = bits << 1 | (p.up[x] >> y & 1)
    width = (p.n * p.n + 7) // 8
    return bytes((kind, p.n)) + bits.to_bytes(width, "big")


def _least_labeling(p: Poset, cells: list[list[int]], kind: int) -> bytes:
    best: bytes | None = None

    def search(current: list[list[int]]) -> None:
        nonlocal best
        target = next((i for i, cell in enumerate(current) if len(cell) > 1), None)
        if target is None:
            code = _encode(p, [cell[0] for cell in current], kind)
            if best is None or code < best:
                best = code
            return
        cell = current[target]
        tried: list[int] = []
        for v in cell:
            if any(p.up[v] == p.up[u] and p.down[v] == p.down[u] for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(_refine(p, [*current[:target], [v], rest, *current[target + 1 :]]))

    search(_refine(p, cells))
    assert best is not None
    return best


def _check_bound(p: Poset) -> None:
    bound = settings.canonical_max_n
    if p.n > bound:
        raise SizeBound("n", p.n, 1, bound)


def canonical_form(p: Poset) -> CanonicalForm:
    """
    Isomorphism-class identifier: kind byte, size byte, least matrix bits.

    Raises:
        SizeBound: If n exceeds the configured canonical bound
    """
    _check_bound(p)
    return CanonicalForm(_least_labeling(p, [list(range(p.n))], _PLAIN))


def pinned_canonical_form(t: PinnedTriple) -> CanonicalForm:
    """Canonical form of a pinned triple; pins take positions 0 (a) and 1 (b)."""
    p = t.poset
    _check_bound(p)
    rest = [x for x in range(p.n) if x not in (t.a, t.b)]
    cells = [[t.a], [t.b]] + ([rest] if rest else [])
    return CanonicalForm(_least_labeling(p, cells, _PINNED))


def poset_from_canonical(form: bytes) -> Poset:
    """Rebuild the labeled poset encoded in a canonical form."""
    n = form[1]
    bits = int.from_bytes(form[2:], "big")
    total = n * n
    up = []
    for x in range(n):
        row = 0
        for y in range(n):
            if bits >> (total - 1 - (x * n + y)) & 1:
                row |= 1 << y
        up.append(row)
    return Poset(n, tuple(up))


def triple_from_canonical(form: bytes) -> PinnedTriple:
    """Rebuild a pinned triple; pins sit at positions 0 and 1."""
    return PinnedTriple(poset_from_canonical(form), 0, 1)


def relabel(p: Poset, permutation: list[int] | tuple[int, ...]) -> Poset:
    """Rename element i to ``permutation[i]``."""
    up = [0] * p.n
    for x in range(p.n):
        up[permutation[x]] = mask_of(permutation[y] for y in iter_bits(p.up[x]))
    return Poset(p.n, tuple(up))


# =============================================================================
# Generation
# =============================================================================


def _down_closed_sets(p: Poset) -> list[int]:
    return [
        d
        for d in range(1 << p.n)
        if all(p.down[x] & ~d == 0 for x in iter_bits(d))
    ]


def _submasks(mask: int) -> list[int]:
    subs = []
    sub = mask
    while True:
        subs.append(sub)
        if sub == 0:
            return subs
        sub = (sub - 1) & mask


def one_point_extensions(p: Poset) -> list[Poset]:
    """
    Every poset obtained by adding element ``p.n`` to ``p``.

    The new element's strict down-set D is down-closed, its strict up-set
    U is up-closed, and D lies entirely below U.
    """
    m = p.n
    children = []
    for down in _down_closed_sets(p):
        candidates = mask_of(
            u for u in range(m) if not down >> u & 1 and down & ~p.down[u] == 0
        )
        for upper in _submasks(candidates):
            if any(p.up[u] & ~upper for u in iter_bits(upper)):
                continue
            up = [p.up[x] | (1 << m if down >> x & 1 else 0) for x in range(m)]
            up.append(upper)
            children.append(Poset(m + 1, tuple(up)))
    return children


def _canonical_children(form: bytes) -> list[bytes]:
    return [canonical_form(child) for child in one_point_extensions(poset_from_canonical(form))]


_levels: dict[int, tuple[bytes, ...]] = {}


def _level(n: int, jobs: int) -> tuple[bytes, ...]:
    if n in _levels:
        return _levels[n]
    if n == 1:
        _levels[n] = (canonical_form(Poset(1, (0,))),)
        return _levels[n]

    cache = get_level_cache()
    if cache is not None:
        cached = cache.load(n)
        if cached is not None:
            _levels[n] = tuple(cached)
            return _levels[n]

    parents = _level(n - 1, jobs)
    batch = BatchProcessor(_canonical_children, jobs=jobs, name=f"extend-{n}").process(parents)
    forms: set[bytes] = set()
    for children in batch.results:
        forms.update(children or ())
    level = tuple(sorted(forms))
    logger.info("Enumerated level", n=n, count=len(level))

    if cache is not None:
        cache.store(n, level)
    _levels[n] = level
    return level


def _check_n(n: int) -> None:
    if not 1 <= n <= settings.max_n:
        raise SizeBound("n", n, 1, settings.max_n)


def all_posets(n: int, jobs: int = 1) -> list[Poset]:
    """
    One poset per isomorphism class on n elements, sorted by canonical form.

    Raises:
        SizeBound: Unless 1 <= n <= the configured max_n
    """
    _check_n(n)
    return [poset_from_canonical(f) for f in _level(n, jobs)]


def all_canonical_forms(n: int, jobs: int = 1) -> list[CanonicalForm]:
    """Sorted canonical forms of the n-element level."""
    _check_n(n)
    return [CanonicalForm(f) for f in _level(n, jobs)]


def brute_force_posets(n: int) -> list[Poset]:
    """
    Posets on n <= 5 elements from raw relation matrices.

    Every unordered pair is independently below, above or incomparable;
    transitive results are deduplicated by canonical form. Kept as an
    oracle for ``all_posets``.
    """
    if not 1 <= n <= 5:
        raise SizeBound("n", n, 1, 5)
    pairs = list(itertools.combinations(range(n), 2))
    forms: dict[bytes, Poset] = {}
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        up = [0] * n
        for (x, y), c in zip(pairs, choice, strict=True):
            if c == 1:
                up[x] |= 1 << y
            elif c == 2:
                up[y] |= 1 << x
        if any(up[y] & ~up[x] for x in range(n) for y in iter_bits(up[x])):
            continue
        p = Poset(n, tuple(up))
        forms.setdefault(canonical_form(p), p)
    return [forms[f] for f in sorted(forms)]


# =============================================================================
# Pinned isomorphism and embedding
# =============================================================================


def _pinned_digraph(t: PinnedTriple) -> nx.DiGraph:
    graph = nx.DiGraph()
    for x in range(t.poset.n):
        graph.add_node(x, pin="a" if x == t.a else "b" if x == t.b else "")
    graph.add_edges_from(t.poset.relations())
    return graph


def _same_pin(n1: dict[str, str], n2: dict[str, str]) -> bool:
    return n1["pin"] == n2["pin"]


def isomorphic_pinned(t1: PinnedTriple, t2: PinnedTriple) -> bool:
    """True iff an order-isomorphism maps a1 to a2 and b1 to b2."""
    if t1.poset.n != t2.poset.n:
        return False
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        _pinned_digraph(t2), _pinned_digraph(t1), node_match=_same_pin
    )
    return matcher.is_isomorphic()


def embeds_pinned(t1: PinnedTriple, t2: PinnedTriple) -> bool:
    """
    True iff t1's poset order-embeds into t2's with a1 -> a2 and b1 -> b2.

    Both relations are transitively closed, so an induced subgraph
    isomorphism of the relation digraphs is exactly an order embedding.
    """
    if t1.poset.n > t2.poset.n:
        return False
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        _pinned_digraph(t2), _pinned_digraph(t1), node_match=_same_pin
    )
    return matcher.subgraph_is_isomorphic()
