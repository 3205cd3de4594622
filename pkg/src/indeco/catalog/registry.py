"""
The combined catalog of pinned chains characterizing upper covers of
2-chains, and the generated markdown dump of every family.
"""

from __future__ import annotations

import dataclasses

import structlog

from indeco.catalog.entry import CatalogEntry
from indeco.catalog.family_x import x_generate
from indeco.catalog.fences import fence_make, v_cover_make
from indeco.catalog.figure2 import figure2_identities, figure2_make
from indeco.core.enumeration import pinned_canonical_form

logger = structlog.get_logger(__name__)

DEFAULT_X_SIZE = 9


def catalog_entries(max_x_size: int = DEFAULT_X_SIZE) -> list[CatalogEntry]:
    """
    Figure-2 entries in all flag combinations followed by family-X members.

    Entries that are pinned-isomorphic to an earlier one are folded into
    its ``aliases``.
    """
    candidates = [
        figure2_make(i.name, i.dual, i.bx_swapped) for i in figure2_identities()
    ]
    candidates.extend(x_generate(max_x_size))

    kept: dict[bytes, CatalogEntry] = {}
    for entry in candidates:
        form = pinned_canonical_form(entry.triple)
        first = kept.get(form)
        if first is None:
            kept[form] = entry
        else:
            kept[form] = dataclasses.replace(
                first, aliases=(*first.aliases, entry.identity)
            )

    entries = list(kept.values())
    logger.debug("Catalog assembled", candidates=len(candidates), entries=len(entries))
    return entries


def _entry_line(entry: CatalogEntry) -> str:
    t = entry.triple
    covers = ", ".join(f"{x}<{y}" for x, y in entry.cover_relations())
    pins = f"a={entry.labels[t.a]}, b={entry.labels[t.b]}"
    aliases = ", ".join(str(i) for i in entry.aliases)
    return f"| {entry.describe()} | {entry.size} | {pins} | {covers} | {aliases} |"


def render_catalog_markdown(max_x_size: int = 7, max_fence: int = 6) -> str:
    """
    Human-readable dump of every catalog family as Hasse covers by label.

    Pins are given by label; after a dual the labels keep their names
    while the order is reversed.
    """
    header = ["| entry | size | pins | covers | aliases |", "|---|---|---|---|---|"]
    sections = [
        ("Upper covers of 2-chains", catalog_entries(max_x_size)),
        ("Fences", [fence_make(k) for k in range(4, max_fence + 1)]),
        ("Indecomposable V-covers", [v_cover_make(k) for k in range(1, max_fence + 1)]),
    ]

    lines = ["# Catalog", "", "Generated by `indeco catalog --format markdown`.", ""]
    for title, entries in sections:
        lines.extend([f"## {title}", "", *header])
        lines.extend(_entry_line(entry) for entry in entries)
        lines.append("")
    return "\n".join(lines)
