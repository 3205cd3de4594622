"""Verification unit tests."""

