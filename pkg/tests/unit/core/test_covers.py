"""
Tests for superset searches over indecomposable subsets.
"""

import pytest
from hypothesis import given, settings

from indeco.catalog import CatalogEntry, fence_make
from indeco.core.covers import (
    SubsetOracle,
    indecomposable_supersets,
    smallest_supersets,
    st_gap2_witness,
    upper_covers,
)
from indeco.core.decomposition import is_indecomposable
from indeco.core.poset import PinnedTriple, Poset, SubsetSelection, chain, induced
from indeco.exceptions import NoSuperset, PreconditionViolated, SeedNotIndecomposable
from tests.strategies import posets


def _masks(selections: tuple[SubsetSelection, ...] | list[SubsetSelection]) -> list[int]:
    return [s.mask for s in selections]


class TestIndecomposableSupersets:
    """Tests for indecomposable_supersets."""

    def test_n_pins(self, n_entry: CatalogEntry) -> None:
        """Test that N is the only proper superset of its pins."""
        t = n_entry.triple
        assert _masks(indecomposable_supersets(t.poset, t.pins, 4)) == [t.poset.ground]

    def test_fence_endpoints(self, fence4: CatalogEntry) -> None:
        """Test the 4-fence with its endpoints."""
        t = fence4.triple
        assert _masks(indecomposable_supersets(t.poset, t.pins, 4)) == [t.poset.ground]

    def test_full_seed(self, n_entry: CatalogEntry) -> None:
        """Test that a full seed has no proper superset."""
        p = n_entry.triple.poset
        assert indecomposable_supersets(p, SubsetSelection.full(p.n), p.n) == []

    def test_size_limit(self, n_entry: CatalogEntry) -> None:
        """Test that max_size cuts the search."""
        t = n_entry.triple
        assert indecomposable_supersets(t.poset, t.pins, 3) == []


class TestUpperCovers:
    """Tests for upper_covers."""

    def test_n(self, n_entry: CatalogEntry) -> None:
        """Test that N covers its pinned chain."""
        t = n_entry.triple
        result = upper_covers(t.poset, t.pins)
        assert _masks(result.covers) == [t.poset.ground]
        assert result.smallest == result.covers

    def test_b_dprime_is_ten(self, b_dprime_entry: CatalogEntry) -> None:
        """Test that all ten elements of B'' form the only cover of its pins."""
        t = b_dprime_entry.triple
        result = upper_covers(t.poset, t.pins)
        assert _masks(result.covers) == [t.poset.ground]
        assert len(result.covers[0]) == 10

    def test_b_dprime_without_second_lower_element(self, b_dprime_entry: CatalogEntry) -> None:
        """Test that dropping v2l2 leaves a decomposable set with no cover of the pins."""
        t = b_dprime_entry.triple
        dropped = b_dprime_entry.labels.index("v2l2")
        rest = SubsetSelection(t.poset.n, t.poset.ground & ~(1 << dropped))
        sub, members = induced(t.poset, rest)
        assert not is_indecomposable(sub)
        pins = SubsetSelection.of(sub.n, [members.index(t.a), members.index(t.b)])
        assert upper_covers(sub, pins).covers == ()

    def test_surprising_example(self, surprising_example: PinnedTriple) -> None:
        """Test that the fence without l is an upper cover."""
        t = surprising_example
        result = upper_covers(t.poset, t.pins)
        assert 0b01111 in _masks(result.covers)

    def test_seed_not_indecomposable(self) -> None:
        """Test a decomposable 3-chain seed."""
        with pytest.raises(SeedNotIndecomposable):
            upper_covers(chain(4), SubsetSelection.of(4, [0, 1, 2]))

    def test_oracle_is_shared(self, n_entry: CatalogEntry) -> None:
        """Test that a shared oracle gives identical results."""
        t = n_entry.triple
        oracle = SubsetOracle(t.poset)
        first = upper_covers(t.poset, t.pins, oracle)
        second = upper_covers(t.poset, t.pins, oracle)
        assert first == second

    @settings(max_examples=60, deadline=None)
    @given(posets(min_n=2, max_n=7))
    def test_soundness_and_minimality(self, p: Poset) -> None:
        """Test every cover of every chain against brute force."""
        for a, b in p.relations():
            seed = SubsetSelection.of(p.n, [a, b])
            result = upper_covers(p, seed)
            found = set(_masks(result.covers))
            every = _masks(indecomposable_supersets(p, seed, p.n))
            for cover in result.covers:
                assert seed.mask & ~cover.mask == 0
                assert cover.mask != seed.mask
                assert is_indecomposable(induced(p, cover)[0])
                assert not any(m != cover.mask and m & ~cover.mask == 0 for m in every)
            # every indecomposable superset sits above some cover
            for m in every:
                assert any(c & ~m == 0 for c in found)
            if result.covers:
                least = min(len(c) for c in result.covers)
                assert all(len(s) == least for s in result.smallest)


class TestSmallestSupersets:
    """Tests for smallest_supersets."""

    def test_surprising_example(self, surprising_example: PinnedTriple) -> None:
        """Test that the 4-fence is a smallest superset."""
        t = surprising_example
        result = smallest_supersets(t.poset, t.pins)
        assert 0b01111 in _masks(result.smallest)
        assert all(len(s) == 4 for s in result.smallest)

    def test_v_cover(self, v_cover1: CatalogEntry) -> None:
        """Test the whole V-cover."""
        t = v_cover1.triple
        assert _masks(smallest_supersets(t.poset, t.pins).smallest) == [t.poset.ground]

    def test_six_fence(self) -> None:
        """Test that a 6-fence is the only superset of its ends."""
        t = fence_make(6).triple
        result = smallest_supersets(t.poset, t.pins)
        assert _masks(result.smallest) == [t.poset.ground]

    def test_no_superset(self, chain3: Poset) -> None:
        """Test NoSuperset when every candidate decomposes."""
        with pytest.raises(NoSuperset):
            smallest_supersets(chain3, SubsetSelection.of(3, [0, 1]))


class TestGrowthWitness:
    """Tests for st_gap2_witness."""

    def test_six_fence(self) -> None:
        """Test that a 4-fence inside a 6-fence grows to the whole fence."""
        p = fence_make(6).triple.poset
        witness = st_gap2_witness(p, SubsetSelection.of(6, [0, 1, 2, 3]))
        assert witness.mask == p.ground

    def test_full_subset_rejected(self) -> None:
        """Test |P| = |T|."""
        p = fence_make(6).triple.poset
        with pytest.raises(PreconditionViolated):
            st_gap2_witness(p, SubsetSelection.full(6))

    def test_too_large_subset(self) -> None:
        """Test |P| > |T| - 2."""
        p = fence_make(5).triple.poset
        with pytest.raises(PreconditionViolated):
            st_gap2_witness(p, SubsetSelection.of(5, [0, 1, 2, 3]))

    def test_decomposable_subset(self) -> None:
        """Test a subset that is not indecomposable."""
        p = fence_make(6).triple.poset
        with pytest.raises(PreconditionViolated):
            st_gap2_witness(p, SubsetSelection.of(6, [0, 1, 3, 4]))
