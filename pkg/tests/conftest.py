"""
Pytest configuration and fixtures.
"""

import pytest

from indeco.catalog import CatalogEntry, fence_make, figure2_make, v_cover_make, x_base
from indeco.core.enumeration import all_posets
from indeco.core.poset import PinnedTriple, Poset, from_relations


@pytest.fixture
def n_entry() -> CatalogEntry:
    """The labeled N: a<b, a<x, l<b."""
    return figure2_make("N")


@pytest.fixture
def b_dprime_entry() -> CatalogEntry:
    """The 10-element B'' entry."""
    return figure2_make("B_dprime")


@pytest.fixture
def x_base_entry() -> CatalogEntry:
    """Base member of family X."""
    return x_base()


@pytest.fixture
def fence4() -> CatalogEntry:
    """The fence a<f2>f3<b pinned at its ends."""
    return fence_make(4)


@pytest.fixture
def v_cover1() -> CatalogEntry:
    """The smallest V-cover: l<a, l<b, d<b."""
    return v_cover_make(1)


@pytest.fixture
def surprising_example() -> PinnedTriple:
    """
    The fence a<f2>f3<b with an extra l below a and b.

    Elements: a=0, f2=1, f3=2, b=3, l=4.
    """
    p = from_relations(5, [(0, 1), (2, 1), (2, 3), (4, 0), (4, 3)])
    return PinnedTriple(p, 0, 3)


@pytest.fixture
def chain3() -> Poset:
    """0 < 1 < 2."""
    return from_relations(3, [(0, 1), (1, 2)])


@pytest.fixture(scope="session")
def small_levels() -> dict[int, list[Poset]]:
    """All posets up to isomorphism with 1..5 elements."""
    return {n: all_posets(n) for n in range(1, 6)}
