"""
Tests for logging setup.
"""

import logging
from collections.abc import Iterator

import pytest
import structlog

from indeco.infrastructure.logging import add_context, clear_context, setup_logging


@pytest.fixture
def restore_logging() -> Iterator[None]:
    yield
    clear_context()
    setup_logging("WARNING")


class TestLogging:
    """Tests for setup_logging and context binding."""

    def test_level_override(self, restore_logging: None) -> None:
        """Test that an explicit level reaches the root logger."""
        setup_logging("DEBUG")
        assert logging.getLogger().level == logging.DEBUG

    def test_context_is_bound_and_cleared(self, restore_logging: None) -> None:
        """Test add_context and clear_context."""
        add_context(claim="corollary", max_n=6)
        assert structlog.contextvars.get_contextvars() == {"claim": "corollary", "max_n": 6}
        clear_context()
        assert structlog.contextvars.get_contextvars() == {}
