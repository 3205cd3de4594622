"""Serialized data models."""

from indeco.schemas.base import StrictModel
from indeco.schemas.report import ClaimId, VerificationReport, Violation

__all__ = ["ClaimId", "StrictModel", "VerificationReport", "Violation"]
