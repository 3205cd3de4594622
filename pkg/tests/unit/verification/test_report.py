"""
Tests for the verification report schema.
"""

import orjson
import pytest
from pydantic import ValidationError

from indeco.schemas.report import ClaimId, VerificationReport, Violation


@pytest.fixture
def report() -> VerificationReport:
    return VerificationReport(
        claim=ClaimId.VCOVER,
        max_n=6,
        instances_checked=6,
        version="0.1.0",
        observations=["note"],
    )


class TestVerificationReport:
    """Tests for VerificationReport."""

    def test_json_keys(self, report: VerificationReport) -> None:
        """Test that observations stay out of the JSON form."""
        payload = orjson.loads(report.to_json())
        assert sorted(payload) == [
            "claim",
            "elapsed_ms",
            "instances_checked",
            "max_n",
            "version",
            "violations",
        ]
        assert payload["claim"] == "vcover"

    def test_sorted_and_indented(self, report: VerificationReport) -> None:
        """Test byte-stable output."""
        text = report.to_json().decode()
        assert text.startswith('{\n  "claim": "vcover",\n  "elapsed_ms": 0,')

    def test_passed(self, report: VerificationReport) -> None:
        """Test the pass flag."""
        assert report.passed
        report.violations = [Violation(form="ab", reason="broken")]
        assert not report.passed

    def test_extra_fields_forbidden(self) -> None:
        """Test StrictModel behavior."""
        with pytest.raises(ValidationError):
            VerificationReport(
                claim="vcover", max_n=1, version="x", extra=1  # type: ignore[call-arg]
            )

    def test_unknown_claim(self) -> None:
        """Test enum validation."""
        with pytest.raises(ValidationError):
            VerificationReport(claim="nope", max_n=1, version="x")  # type: ignore[arg-type]


class TestViolation:
    """Tests for Violation."""

    def test_empty_reason(self) -> None:
        """Test that a reason is required."""
        with pytest.raises(ValidationError):
            Violation(form="00", reason="  ")

    def test_optional_fields(self) -> None:
        """Test a violation without pins or subset."""
        violation = Violation(form="00", reason="x")
        assert violation.pins is None
        assert violation.subset is None


class TestClaimId:
    """Tests for ClaimId."""

    def test_cli_names(self) -> None:
        """Test dashed command-line names."""
        assert ClaimId.ST_GROWTH.cli_name == "st-growth"
        assert ClaimId.TWO_CHAIN_COVERS.cli_name == "2chfinal"
