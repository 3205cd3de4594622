"""
Tests for the exhaustive claim checks at small sizes.
"""

import pytest

from indeco import __version__
from indeco.catalog import catalog_entries
from indeco.exceptions import SizeBound
from indeco.schemas.report import ClaimId
from indeco.verification import (
    verify_2aclem,
    verify_2chfinal,
    verify_adjacent,
    verify_all,
    verify_corollary,
    verify_nonadjacent,
    verify_rigidity,
    verify_st_growth,
    verify_vcover,
    verify_x_equiv,
)


class TestSweptClaims:
    """Claims that sweep every poset up to max_n."""

    def test_two_chain_covers(self) -> None:
        """Test upper covers of 2-chains to six elements."""
        report = verify_2chfinal(6)
        assert report.passed
        assert report.instances_checked > 0
        assert report.claim == ClaimId.TWO_CHAIN_COVERS
        assert report.version == __version__

    def test_two_antichain_supersets(self) -> None:
        """Test smallest supersets of 2-antichains to six elements."""
        report = verify_2aclem(6)
        assert report.passed
        assert report.instances_checked > 0

    def test_corollary(self) -> None:
        """Test the size bound and its observations."""
        report = verify_corollary(6)
        assert report.passed
        assert report.observations
        assert report.observations[0].startswith("|K|=2: max |U|=")

    def test_st_growth(self) -> None:
        """Test growth by two on six-element hosts."""
        report = verify_st_growth(6)
        assert report.passed
        assert report.instances_checked > 0

    def test_nonadjacent(self) -> None:
        """Test chains with a series-decomposable remainder."""
        assert verify_nonadjacent(6).passed

    def test_adjacent(self) -> None:
        """Test covering pairs."""
        report = verify_adjacent(6)
        assert report.passed
        assert report.instances_checked > 0

    def test_x_equiv(self) -> None:
        """Test recognizer and generator agreement."""
        report = verify_x_equiv(6)
        assert report.passed
        assert report.instances_checked > 0

    def test_jobs_do_not_change_output(self) -> None:
        """Test that a pool of two workers reports the same instances."""
        serial = verify_2chfinal(5, jobs=1)
        parallel = verify_2chfinal(5, jobs=2)
        assert serial.model_dump(exclude={"elapsed_ms"}) == parallel.model_dump(
            exclude={"elapsed_ms"}
        )

    @pytest.mark.parametrize("max_n", [2, 99])
    def test_bounds(self, max_n: int) -> None:
        """Test SizeBound outside 3..max_n."""
        with pytest.raises(SizeBound):
            verify_2chfinal(max_n)

    def test_x_equiv_needs_four(self) -> None:
        """Test the raised lower bound."""
        with pytest.raises(SizeBound):
            verify_x_equiv(3)


class TestStandaloneClaims:
    """Claims that only look at catalog entries."""

    def test_rigidity(self) -> None:
        """Test that every ordered pair of entries is counted."""
        entries = catalog_entries(7)
        report = verify_rigidity(7)
        assert report.passed
        assert report.instances_checked == len(entries) * (len(entries) - 1)

    def test_rigidity_default_size(self) -> None:
        """Test the full catalog, including the N swap and the ten-element B''."""
        report = verify_rigidity()
        assert report.passed, [v.reason for v in report.violations]

    def test_vcover(self) -> None:
        """Test V-covers to fence length 6."""
        report = verify_vcover()
        assert report.passed
        assert report.instances_checked == 6
        assert report.max_n == 6

    def test_vcover_bound(self) -> None:
        """Test an empty fence range."""
        with pytest.raises(SizeBound):
            verify_vcover(0)


class TestVerifyAll:
    """Tests for verify_all."""

    def test_order(self) -> None:
        """Test the fixed claim order."""
        reports = verify_all(5)
        assert [r.claim for r in reports] == [
            "2chfinal",
            "2aclem",
            "corollary",
            "st_growth",
            "rigidity",
            "x_equiv",
            "nonadjacent",
            "adjacent",
            "vcover",
        ]
        assert all(r.passed for r in reports)
