"""
Logging configuration using structlog.
"""

import logging
import sys
from typing import Any

import structlog

from indeco.config import LogFormat, settings


def setup_logging(level: str | None = None) -> None:
    """
    Configure structured logging for the application.

    Uses structlog with JSON output when ``log_format`` is json and
    colored console output otherwise. Everything goes to stderr; stdout
    carries command output only.

    Args:
        level: Override for the configured log level
    """
    log_level = getattr(logging, level or settings.log_level)

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=log_level,
        force=True,
    )

    shared_processors: list[structlog.types.Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.UnicodeDecoder(),
    ]

    if settings.log_format == LogFormat.JSON:
        processors = [
            *shared_processors,
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(),
        ]
    else:
        processors = [
            *shared_processors,
            structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()),
        ]

    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def add_context(**kwargs: Any) -> None:
    """
    Add context to all subsequent log calls in this context.

    Args:
        **kwargs: Context variables to add
    """
    structlog.contextvars.bind_contextvars(**kwargs)


def clear_context() -> None:
    """Clear all context variables."""
    structlog.contextvars.clear_contextvars()
