"""
Tests for poset construction and queries.
"""

import itertools
import math

import pytest
from hypothesis import given, settings

from indeco.core.enumeration import all_posets
from indeco.core.poset import (
    PinnedTriple,
    Poset,
    SubsetSelection,
    antichain,
    chain,
    dual,
    fence_distance,
    from_relations,
    hasse_covers,
    induced,
    longest_chain_between,
    open_interval,
)
from indeco.exceptions import (
    CycleError,
    ElementIndexError,
    EmptyPoset,
    EmptySelection,
    NotAChain,
    PosetError,
)
from tests.strategies import posets


class TestFromRelations:
    """Tests for from_relations."""

    def test_closure_is_taken(self) -> None:
        """Test that relations are closed transitively."""
        p = from_relations(3, [(0, 1), (1, 2)])
        assert p.less(0, 2)
        assert p.relations() == [(0, 1), (0, 2), (1, 2)]

    def test_cycle_rejected(self) -> None:
        """Test that a 2-cycle raises CycleError."""
        with pytest.raises(CycleError):
            from_relations(2, [(0, 1), (1, 0)])

    def test_self_loop_rejected(self) -> None:
        """Test that x < x raises CycleError."""
        with pytest.raises(CycleError):
            from_relations(2, [(1, 1)])

    def test_index_out_of_range(self) -> None:
        """Test that a bad index raises ElementIndexError."""
        with pytest.raises(ElementIndexError):
            from_relations(2, [(0, 2)])

    def test_element_index_error_is_index_error(self) -> None:
        """Test that ElementIndexError also reads as IndexError."""
        with pytest.raises(IndexError):
            from_relations(2, [(5, 0)])

    def test_empty_poset(self) -> None:
        """Test that n = 0 is rejected."""
        with pytest.raises(EmptyPoset):
            from_relations(0, [])

    @given(posets())
    def test_result_satisfies_invariants(self, p: Poset) -> None:
        """Test that every closure is a strict order."""
        p.check_invariants()


class TestDerivedStructure:
    """Tests for dual, covers, intervals and chains."""

    def test_dual_reverses(self, chain3: Poset) -> None:
        """Test that dual swaps every relation."""
        d = dual(chain3)
        assert d.less(2, 0)
        assert not d.less(0, 2)

    @given(posets())
    def test_dual_is_involution(self, p: Poset) -> None:
        """Test dual(dual(p)) == p."""
        assert dual(dual(p)) == p

    def test_hasse_covers_skip_transitive(self, chain3: Poset) -> None:
        """Test that 0 < 2 is not a cover in a 3-chain."""
        assert hasse_covers(chain3) == [(0, 1), (1, 2)]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_hasse_covers_rebuild_every_class(self, n: int) -> None:
        """Test that closing the covers gives the poset back."""
        for p in all_posets(n):
            assert from_relations(n, hasse_covers(p)) == p

    @given(posets(max_n=8))
    def test_hasse_covers_rebuild(self, p: Poset) -> None:
        """Test the cover round trip on random posets."""
        assert from_relations(p.n, hasse_covers(p)) == p

    def test_open_interval(self, chain3: Poset) -> None:
        """Test the open interval of a chain."""
        assert open_interval(chain3, 0, 2).elements == (1,)
        assert len(open_interval(chain3, 0, 1)) == 0

    def test_induced_relabels_ascending(self, chain3: Poset) -> None:
        """Test that induced keeps the order among kept elements."""
        sub, members = induced(chain3, SubsetSelection.of(3, [0, 2]))
        assert members == (0, 2)
        assert sub.relations() == [(0, 1)]

    def test_induced_empty(self, chain3: Poset) -> None:
        """Test that inducing on nothing raises EmptySelection."""
        with pytest.raises(EmptySelection):
            induced(chain3, SubsetSelection(3, 0))

    def test_longest_chain(self) -> None:
        """Test the longest chain through a diamond plus a shortcut."""
        p = from_relations(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
        assert longest_chain_between(p, 0, 3) == 3
        assert longest_chain_between(p, 0, 1) == 2

    def test_longest_chain_requires_chain(self) -> None:
        """Test NotAChain for incomparable elements."""
        with pytest.raises(NotAChain):
            longest_chain_between(antichain(2), 0, 1)


class TestFenceDistance:
    """Tests for fence_distance."""

    def test_fence_endpoints(self) -> None:
        """Test that a 4-element fence has distance 3 between its ends."""
        p = from_relations(4, [(0, 1), (2, 1), (2, 3)])
        assert fence_distance(p, 0, 3) == 3

    def test_disconnected(self) -> None:
        """Test infinity across components."""
        assert fence_distance(antichain(2), 0, 1) == math.inf

    def test_chain_is_adjacent(self) -> None:
        """Test distance 1 for comparable elements."""
        assert fence_distance(chain(3), 0, 2) == 1

    @settings(max_examples=50, deadline=None)
    @given(posets(max_n=7))
    def test_is_a_metric(self, p: Poset) -> None:
        """Test identity, symmetry and the triangle inequality."""
        d = [[fence_distance(p, x, y) for y in range(p.n)] for x in range(p.n)]
        for x, y in itertools.product(range(p.n), repeat=2):
            assert (d[x][y] == 0) == (x == y)
            assert d[x][y] == d[y][x]
        for x, y, z in itertools.product(range(p.n), repeat=3):
            assert d[x][z] <= d[x][y] + d[y][z]

    @given(posets(max_n=7))
    def test_dual_keeps_distance(self, p: Poset) -> None:
        """Test that reversing the order keeps every distance."""
        q = dual(p)
        for x, y in itertools.combinations(range(p.n), 2):
            assert fence_distance(p, x, y) == fence_distance(q, x, y)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_dual_keeps_distance_every_class(self, n: int) -> None:
        """Test dual invariance on every class."""
        for p in all_posets(n):
            q = dual(p)
            for x, y in itertools.combinations(range(n), 2):
                assert fence_distance(p, x, y) == fence_distance(q, x, y)


class TestSelectionsAndTriples:
    """Tests for SubsetSelection and PinnedTriple."""

    def test_selection_of(self) -> None:
        """Test construction from element indices."""
        s = SubsetSelection.of(4, [3, 1])
        assert s.elements == (1, 3)
        assert 3 in s
        assert 0 not in s
        assert len(s) == 2

    def test_selection_out_of_range(self) -> None:
        """Test that masks beyond n are rejected."""
        with pytest.raises(ElementIndexError):
            SubsetSelection(2, 0b100)

    def test_issubset(self) -> None:
        """Test subset comparison."""
        assert SubsetSelection(3, 0b001).issubset(SubsetSelection(3, 0b011))
        assert not SubsetSelection(3, 0b100).issubset(SubsetSelection(3, 0b011))

    def test_triple_kinds(self, chain3: Poset) -> None:
        """Test chain and antichain classification of pins."""
        assert PinnedTriple(chain3, 0, 2).is_chain
        assert not PinnedTriple(chain3, 2, 0).is_chain
        assert PinnedTriple(antichain(2), 0, 1).is_antichain

    def test_triple_equal_pins(self, chain3: Poset) -> None:
        """Test that a == b is rejected."""
        with pytest.raises(PosetError):
            PinnedTriple(chain3, 1, 1)

    def test_require_chain(self) -> None:
        """Test NotAChain from require_chain."""
        with pytest.raises(NotAChain):
            PinnedTriple(antichain(2), 0, 1).require_chain()
