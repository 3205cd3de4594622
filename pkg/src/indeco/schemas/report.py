"""
Verification report schema.

The JSON form has exactly the keys claim, max_n, instances_checked,
violations, elapsed_ms and version. Observations are kept on the model
for text output only.
"""

from enum import Enum

from pydantic import Field

from indeco.schemas.base import StrictModel


class ClaimId(str, Enum):
    """Checkable claims."""

    TWO_CHAIN_COVERS = "2chfinal"
    TWO_ANTICHAIN_COVERS = "2aclem"
    COROLLARY = "corollary"
    ST_GROWTH = "st_growth"
    RIGIDITY = "rigidity"
    X_EQUIV = "x_equiv"
    NONADJACENT = "nonadjacent"
    ADJACENT = "adjacent"
    VCOVER = "vcover"

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")


class Violation(StrictModel):
    """
    One failing instance, replayable from its fields.

    ``form`` is the hex canonical form of the host poset, plain or pinned
    (pinned forms place a and b at positions 0 and 1). ``pins`` and
    ``subset`` index the labeling that form decodes to.
    """

    form: str = Field(..., description="Hex canonical form of the host poset")
    pins: list[int] | None = Field(default=None, description="Seed pair (a, b)")
    subset: list[int] | None = Field(default=None, description="Offending subset")
    reason: str = Field(..., min_length=1)


class VerificationReport(StrictModel):
    """Outcome of one exhaustive claim check."""

    claim: ClaimId
    max_n: int = Field(..., ge=0)
    instances_checked: int = Field(default=0, ge=0)
    violations: list[Violation] = Field(default_factory=list)
    elapsed_ms: int = Field(default=0, ge=0)
    version: str
    observations: list[str] = Field(default_factory=list, exclude=True)

    @property
    def passed(self) -> bool:
        """True iff no violation was recorded."""
        return not self.violations
