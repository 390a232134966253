"""
Structured logging setup for Unitary Cayley.

Uses structlog for structured JSON logging by default and colourful console
logging in debug mode. Logs always go to stderr so that CLI output on stdout
stays machine-readable.
"""

import logging
import sys
from typing import Any, TextIO

import structlog
from structlog.types import FilteringBoundLogger


def setup_logging(
    debug: bool = False,
    level: str = "INFO",
    stream: TextIO | None = None,
) -> None:
    """Setup structured logging.

    Args:
        debug: If True, use colourful console output (development)
               If False, use JSON output (production)
        level: Minimum level name (DEBUG, INFO, ...)
        stream: Destination; defaults to stderr
    """

    out = stream if stream is not None else sys.stderr
    min_level = logging.getLevelName(level.upper())

    if debug:
        # Development: Colourful console output
        structlog.configure(
            processors=[
                structlog.contextvars.merge_contextvars,
                structlog.processors.add_log_level,
                structlog.processors.StackInfoRenderer(),
                structlog.dev.set_exc_info,
                structlog.processors.TimeStamper(fmt="%Y-%m-%d %H:%M:%S", utc=False),
                structlog.dev.ConsoleRenderer(colors=True),
            ],
            wrapper_class=structlog.make_filtering_bound_logger(min_level),
            context_class=dict,
            logger_factory=structlog.PrintLoggerFactory(file=out),
            cache_logger_on_first_use=False,
        )
    else:
        # Production: JSON output (machine-readable)
        structlog.configure(
            processors=[
                structlog.contextvars.merge_contextvars,
                structlog.processors.add_log_level,
                structlog.processors.StackInfoRenderer(),
                structlog.processors.format_exc_info,
                structlog.processors.TimeStamper(fmt="iso", utc=True),
                structlog.processors.JSONRenderer(),
            ],
            wrapper_class=structlog.make_filtering_bound_logger(min_level),
            context_class=dict,
            logger_factory=structlog.PrintLoggerFactory(file=out),
            cache_logger_on_first_use=False,
        )


# Global logger instance
logger: FilteringBoundLogger = structlog.get_logger()


# Convenience functions
def log_check_result(n: int, check: str, passed: bool | None, **kwargs: Any) -> None:
    """Log the outcome of a single cross-check; failures go out at error level."""
    if passed is False:
        logger.error("check_failed", n=n, check=check, **kwargs)
    else:
        logger.debug("check_done", n=n, check=check, passed=passed, **kwargs)


def log_oracle_call(name: str, n: int, duration_ms: int, **kwargs: Any) -> None:
    """Log an exact-oracle evaluation with its cost."""
    logger.debug("oracle_call", oracle=name, n=n, duration_ms=duration_ms, **kwargs)


def log_erratum(n: int, row: str, detail: str) -> None:
    """Log a printed-table inconsistency (reported, never a failure)."""
    logger.info("erratum_detected", n=n, row=row, detail=detail)


# Re-export for convenience
__all__ = [
    "setup_logging",
    "logger",
    "log_check_result",
    "log_oracle_call",
    "log_erratum",
]
