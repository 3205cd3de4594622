"""Constructors and recognizers for the characterized families."""

from indeco.catalog.entry import CatalogEntry, Extension, Identity, VCoverAnchors
from indeco.catalog.family_x import x_base, x_extend, x_generate, x_recognize
from indeco.catalog.fences import (
    FenceMatch,
    VCoverMatch,
    fence_make,
    fence_recognize,
    v_cover_make,
    v_cover_recognize,
)
from indeco.catalog.figure2 import (
    FIGURE2,
    figure2_make,
    figure2_matches,
    figure2_recognize,
)
from indeco.catalog.registry import catalog_entries, render_catalog_markdown

__all__ = [
    "FIGURE2",
    "CatalogEntry",
    "Extension",
    "FenceMatch",
    "Identity",
    "VCoverAnchors",
    "VCoverMatch",
    "catalog_entries",
    "fence_make",
    "fence_recognize",
    "figure2_make",
    "figure2_matches",
    "figure2_recognize",
    "render_catalog_markdown",
    "v_cover_make",
    "v_cover_recognize",
    "x_base",
    "x_extend",
    "x_generate",
    "x_recognize",
]
