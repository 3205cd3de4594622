"""
The labeled posets H in which a is a lower cover of b and H is an upper
cover of the chain {a, b}, together with their duals and the alternative
placement of b at x.

``FIGURE2`` is the single source of truth: labels and strict relations
(arbitrary, closed on construction) for each name. Elements named
``v2l`` lie above u and below w, ``v2n`` lies above u but not below w.

B_dprime has ten elements. With v2l below v2n and a single element
below w on the second layer, {a, b, x, u, v1, v2l} would be autonomous,
so a second one, ``v2l2`` above v1 and incomparable to ``v2n``, is part
of the cover.

The b/x swap is an upper cover of its pins only for N. Elsewhere the
swapped pins already lie in a smaller entry that leaves out b, so
``figure2_identities`` lists the swap for N alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from indeco.catalog.entry import CatalogEntry, Identity
from indeco.core.enumeration import CanonicalForm, pinned_canonical_form
from indeco.core.poset import PinnedTriple, from_relations
from indeco.core.poset import dual as reverse_order
from indeco.exceptions import UnknownName


@dataclass(frozen=True, slots=True)
class Figure2Row:
    """One transcribed diagram."""

    labels: tuple[str, ...]
    relations: tuple[tuple[str, str], ...]


FIGURE2: dict[str, Figure2Row] = {
    "N": Figure2Row(
        labels=("a", "b", "x", "l"),
        relations=(("l", "b"), ("a", "b"), ("a", "x")),
    ),
    "N_hat": Figure2Row(
        labels=("a", "b", "x", "l", "w"),
        relations=(("a", "b"), ("a", "x"), ("b", "w"), ("l", "w")),
    ),
    "B": Figure2Row(
        labels=("a", "b", "x", "l", "w", "u"),
        relations=(
            ("a", "b"), ("a", "x"), ("b", "w"), ("x", "w"), ("l", "w"), ("b", "u"),
        ),
    ),
    "B_hat": Figure2Row(
        labels=("a", "b", "x", "l", "w", "u", "v1"),
        relations=(
            ("a", "b"), ("a", "x"), ("b", "v1"), ("x", "v1"),
            ("b", "u"), ("u", "w"), ("x", "w"), ("l", "w"),
        ),
    ),
    "B_tilde": Figure2Row(
        labels=("a", "b", "x", "l", "w", "u", "v1", "v2n"),
        relations=(
            ("a", "b"), ("a", "x"), ("b", "v1"), ("x", "v1"), ("v1", "w"),
            ("b", "u"), ("u", "w"), ("u", "v2n"), ("x", "v2n"), ("l", "w"),
        ),
    ),
    "B_prime": Figure2Row(
        labels=("a", "b", "x", "l", "w", "u", "v1", "v2l", "v2n"),
        relations=(
            ("a", "b"), ("a", "x"), ("b", "v1"), ("x", "v1"), ("v1", "w"),
            ("b", "u"), ("u", "v2l"), ("v2l", "w"), ("x", "v2l"),
            ("u", "v2n"), ("v1", "v2n"), ("l", "w"),
        ),
    ),
    "B_dprime": Figure2Row(
        labels=("a", "b", "x", "l", "w", "u", "v1", "v2l", "v2n", "v2l2"),
        relations=(
            ("a", "b"), ("a", "x"), ("b", "v1"), ("x", "v1"),
            ("b", "u"), ("u", "v2l"), ("v2l", "w"), ("x", "v2l"),
            ("v1", "v2n"), ("v2l", "v2n"), ("l", "w"),
            ("u", "v2l2"), ("v1", "v2l2"), ("v2l2", "w"),
        ),
    ),
}  # fmt: skip

FIGURE2_NAMES: tuple[str, ...] = tuple(FIGURE2)

FIGURE2_MAX_SIZE = max(len(row.labels) for row in FIGURE2.values())

SWAPPABLE: frozenset[str] = frozenset({"N"})

# Fewest flags first within each name
FLAG_ORDER: tuple[tuple[bool, bool], ...] = (
    (False, False),
    (False, True),
    (True, False),
    (True, True),
)


def figure2_make(name: str, dual: bool = False, bx_swapped: bool = False) -> CatalogEntry:
    """
    Build a Figure-2 entry.

    ``bx_swapped`` pins x in place of b; outside ``SWAPPABLE`` the result
    is indecomposable but not an upper cover of its pins. ``dual``
    reverses the order and exchanges the pins, so the emitted pair is
    always a chain a < b.

    Raises:
        UnknownName: If ``name`` is not in the table
    """
    row = FIGURE2.get(name)
    if row is None:
        raise UnknownName(name, list(FIGURE2_NAMES))

    index = {label: i for i, label in enumerate(row.labels)}
    poset = from_relations(len(row.labels), ((index[x], index[y]) for x, y in row.relations))
    a, b = index["a"], index["x" if bx_swapped else "b"]
    if dual:
        poset, a, b = reverse_order(poset), b, a

    return CatalogEntry(
        identity=Identity(name, dual, bx_swapped),
        triple=PinnedTriple(poset, a, b),
        labels=row.labels,
    )


def figure2_identities() -> list[Identity]:
    """Every name with every flag combination that is an upper cover, in catalog order."""
    return [
        Identity(name, d, s)
        for name in FIGURE2_NAMES
        for d, s in FLAG_ORDER
        if not s or name in SWAPPABLE
    ]


@lru_cache(maxsize=1)
def _index() -> dict[CanonicalForm, tuple[Identity, ...]]:
    found: dict[CanonicalForm, list[Identity]] = {}
    for identity in figure2_identities():
        entry = figure2_make(identity.name, identity.dual, identity.bx_swapped)
        found.setdefault(pinned_canonical_form(entry.triple), []).append(identity)
    return {form: tuple(ids) for form, ids in found.items()}


def figure2_matches(t: PinnedTriple) -> list[Identity]:
    """Every identity whose entry is pinned-isomorphic to ``t``, in catalog order."""
    if not t.is_chain:
        return []
    return list(_index().get(pinned_canonical_form(t), ()))


def figure2_recognize(t: PinnedTriple) -> Identity | None:
    """The first matching identity in catalog order, or None."""
    matches = figure2_matches(t)
    return matches[0] if matches else None
