"""
Structured logging configuration using structlog
"""

import logging
import sys
from typing import Any, Optional

import structlog
from structlog.typing import FilteringBoundLogger

from .config import get_settings


def setup_logging(service_name: str, level: Optional[str] = None) -> None:
    """Setup structured logging for a service"""
    settings = get_settings()
    level_name = (level or settings.log_level).upper()

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.JSONRenderer() if settings.log_format == "json"
            else structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            getattr(logging, level_name)
        ),
        # stdout carries the JSON reports
        logger_factory=structlog.WriteLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=True,
    )

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, level_name),
    )

    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(service=service_name)


def get_logger(name: str) -> FilteringBoundLogger:
    """Get a structured logger instance"""
    return structlog.get_logger(name)


def log_search_outcome(
    logger: FilteringBoundLogger,
    parameter: str,
    value: int,
    nodes: int,
    lower_bound: int,
    **extra: Any,
) -> None:
    """Log a finished exact search with enough data to reproduce it"""
    logger.debug(
        "search_finished",
        parameter=parameter,
        value=value,
        nodes=nodes,
        lower_bound=lower_bound,
        **extra,
    )
