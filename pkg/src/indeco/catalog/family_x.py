"""
Family X: pinned chains grown from N by one-element extensions.

A bottom extension adds a new minimal element below everything except
the current pin a, which becomes the new pin's only incomparable element.
A top extension is the dual construction at b. Pin a stays minimal and
pin b maximal throughout.
"""

from __future__ import annotations

from indeco.catalog.entry import CatalogEntry, Extension, Identity
from indeco.catalog.figure2 import FIGURE2
from indeco.core.enumeration import isomorphic_pinned, pinned_canonical_form
from indeco.core.poset import PinnedTriple, Poset, SubsetSelection, from_relations, induced
from indeco.exceptions import KindMismatch
from indeco.utils.bits import popcount

X_MEMBER = "X_member"


def x_base() -> CatalogEntry:
    """The base N with a minimal and b maximal."""
    row = FIGURE2["N"]
    index = {label: i for i, label in enumerate(row.labels)}
    poset = from_relations(len(row.labels), ((index[x], index[y]) for x, y in row.relations))
    return CatalogEntry(
        identity=Identity(X_MEMBER),
        triple=PinnedTriple(poset, index["a"], index["b"]),
        labels=row.labels,
    )


def x_extend(e: CatalogEntry, end: Extension) -> CatalogEntry:
    """
    Attach a new pin at the bottom or top.

    Raises:
        KindMismatch: If ``e`` is not a family-X member
    """
    if e.name != X_MEMBER:
        raise KindMismatch(
            "Only family-X members can be extended", details={"name": e.name}
        )

    t = e.triple
    p = t.poset
    new = p.n
    up = list(p.up)
    if end == Extension.BOTTOM:
        up.append(p.ground & ~(1 << t.a))
        triple = PinnedTriple(Poset(new + 1, tuple(up)), new, t.b)
    else:
        for x in range(p.n):
            if x != t.b:
                up[x] |= 1 << new
        up.append(0)
        triple = PinnedTriple(Poset(new + 1, tuple(up)), t.a, new)

    prefix = "a" if end == Extension.BOTTOM else "b"
    count = sum(1 for step in e.peel if step == end) + 1
    return CatalogEntry(
        identity=e.identity,
        triple=triple,
        labels=(*e.labels, f"{prefix}{count}"),
        peel=(*e.peel, end),
    )


def x_generate(max_size: int) -> list[CatalogEntry]:
    """
    All family-X members with at most ``max_size`` elements.

    Deduplicated up to pinned isomorphism; the first peel sequence in
    breadth-first order (bottom before top) represents each class.
    """
    if max_size < 4:
        return []

    members: list[CatalogEntry] = []
    seen: set[bytes] = set()
    layer = [x_base()]
    while layer:
        next_layer: list[CatalogEntry] = []
        for entry in layer:
            form = pinned_canonical_form(entry.triple)
            if form in seen:
                continue
            seen.add(form)
            members.append(entry)
            if entry.size < max_size:
                next_layer.extend(x_extend(entry, end) for end in Extension)
        layer = next_layer
    return members


def _strip(t: PinnedTriple, element: int, a: int, b: int) -> PinnedTriple:
    p = t.poset
    sub, members = induced(p, SubsetSelection(p.n, p.ground & ~(1 << element)))
    position = {e: i for i, e in enumerate(members)}
    return PinnedTriple(sub, position[a], position[b])


def x_recognize(t: PinnedTriple) -> tuple[Extension, ...] | None:
    """
    Peel sequence certifying that ``t`` is a family-X member, or None.

    Removes a pin that is a valid last extension and recurses, trying the
    bottom pin before the top pin.
    """
    p = t.poset
    if p.n < 4 or not t.is_chain:
        return None
    if p.n == 4:
        return () if isomorphic_pinned(t, x_base().triple) else None

    a, b = t.a, t.b
    others = p.ground & ~(1 << a)
    if p.down[a] == 0 and popcount(others & ~p.up[a]) == 1:
        old = (others & ~p.up[a]).bit_length() - 1
        if p.down[old] == 0:
            peel = x_recognize(_strip(t, a, old, b))
            if peel is not None:
                return (*peel, Extension.BOTTOM)

    others = p.ground & ~(1 << b)
    if p.up[b] == 0 and popcount(others & ~p.down[b]) == 1:
        old = (others & ~p.down[b]).bit_length() - 1
        if p.up[old] == 0:
            peel = x_recognize(_strip(t, b, a, old))
            if peel is not None:
                return (*peel, Extension.TOP)

    return None
